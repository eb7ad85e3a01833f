"""
Framework configuration settings module
Contains package-wide parameters shared by the library layers and the command line front end.
The argument parser maps command line flags onto these values; there is no configuration file.
"""
# Native libraries
import logging

#: Application identifier string
PROJECT_FRIENDLY_NAME = 'brieskorn-obstruct/1.0'
#: Version tag written into every JSON output document
SCHEMA_VERSION = '1'

#: Logging verbosity for every project logger
DEBUG_LEVEL = logging.WARNING
#: Extra width added on both sides of the characteristic-vector search box
CHAR_BOX_MARGIN = 0
#: Maximum number of search nodes the characteristic-vector search may explore
SEARCH_BUDGET = 10 ** 8
#: Largest entry allowed in Markov triples during membership searches
MARKOV_BOUND = 10 ** 6
#: Maximum number of rotation vectors listed by an enumeration
ENUMERATION_LIMIT = 1000
#: Output mode selected on the command line: [text | json | dot | csv]
OUTPUT_FORMAT = 'text'
#: Worker processes used by the scan subcommand
SCAN_WORKERS = 1

#: Test runner: run only test classes carrying this tag
INCLUDE_TAG = None
#: Test runner: skip test classes carrying this tag
EXCLUDE_TAG = None
#: Test runner: tags skipped unless requested with --tag
DEFAULT_EXCLUDE_TAGS = ['slow']
#: Test runner: single test to load, e.g. TestLattice.test_e8_search
SINGLE_TEST_NAME = None
