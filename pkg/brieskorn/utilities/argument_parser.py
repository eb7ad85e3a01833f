# Native libraries
import argparse
import logging
# Project libraries
from brieskorn.utilities.utils import set_debug_level, setup_logger
import brieskorn.config as config

# Initialize logging instance
logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Families understood by the scan subcommand
SCAN_FAMILIES = ['pq-minus', 'pq-plus', 'prop31-3', 'flmn']


def _sign(value):
    """
    Parses the family sign written as +1, -1, + or -
    """
    mapping = {'+1': 1, '1': 1, '+': 1, '-1': -1, '-': -1}
    if value not in mapping:
        raise argparse.ArgumentTypeError('sign must be +1 or -1, got {!r}'.format(value))
    return mapping[value]


def _pair(value):
    """
    Parses a singularity written as p,q
    """
    try:
        p, q = (int(part) for part in value.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('singularities are written p,q, got {!r}'.format(value))
    return p, q


class BrieskornArgumentParser:
    """
    Command line argument parser for the Brieskorn sphere invariants tool
    """

    def __init__(self, argv):
        """
        Initialize argument parser and process command line inputs

        :param argv: Command line arguments without the program name
        :type argv: list[str]
        """
        self.parser = argparse.ArgumentParser(prog='brieskorn',
                                              description='Invariants of Brieskorn homology spheres and '
                                                          'Weinstein-domain obstructions')
        self.args = None
        self._prepare_arguments()
        self._parse_arguments(argv)
        self._validate_arguments()
        self._print_arguments()

    def _prepare_arguments(self):
        """
        Configures all supported subcommands and flags
        """
        # Flags shared by every subcommand
        common = argparse.ArgumentParser(add_help=False)
        output = common.add_mutually_exclusive_group()
        output.add_argument('--json', default=False, help='Write a JSON output document', required=False,
                            dest='json', action='store_true')
        output.add_argument('--dot', default=False, help='Write the plumbing graph in DOT format (plumbing only)',
                            required=False, dest='dot', action='store_true')
        output.add_argument('--csv', default=False, help='Write a CSV table (scan only)', required=False,
                            dest='csv', action='store_true')
        common.add_argument('--char-box-margin', default=None, type=int,
                            help='Widen the characteristic-vector search box by N on each side',
                            required=False, dest='char_box_margin')
        common.add_argument('--markov-bound', default=None, type=int,
                            help='Largest entry of Markov triples visited by the markov search',
                            required=False, dest='markov_bound')
        common.add_argument('--limit', default=None, type=int,
                            help='Maximum number of rotation vectors listed', required=False, dest='limit')
        common.add_argument('--workers', default=None, type=int,
                            help='Worker processes for scan', required=False, dest='workers')
        common.add_argument('-v', '--verbose', default=False, help='Log debugging information to stderr',
                            required=False, dest='verbose', action='store_true')

        subparsers = self.parser.add_subparsers(dest='command', metavar='command')
        subparsers.required = True

        for name, help_text in [('analyze', 'Full obstruction report for a Brieskorn sphere'),
                                ('plumbing', 'Seifert invariants, plumbing graph and intersection form'),
                                ('dinv', 'd-invariant by every applicable method'),
                                ('rot', 'Rotation vectors of Stein structures on the plumbing')]:
            sub = subparsers.add_parser(name, parents=[common], help=help_text)
            sub.add_argument('multiplicities', nargs='+', type=int, help='Pairwise coprime multiplicities')

        family = subparsers.add_parser('family', parents=[common], help='Report for Sigma(p, q, npq + sign)')
        family.add_argument('p', type=int)
        family.add_argument('q', type=int)
        family.add_argument('n', type=int)
        family.add_argument('sign', type=_sign, help='+1 or -1')

        semigroup = subparsers.add_parser('semigroup', parents=[common],
                                          help='Semigroup gaps, alpha table and torus-knot facts for <p, q>')
        semigroup.add_argument('p', type=int)
        semigroup.add_argument('q', type=int)

        markov = subparsers.add_parser('markov', parents=[common], help='Markov number membership')
        markov.add_argument('x', type=int)
        markov.add_argument('--lens-q', default=None, type=int, required=False, dest='lens_q',
                            help='Also print the lens space L(x^2, xq-1)')

        cuspidal = subparsers.add_parser('cuspidal', parents=[common], help='Rational cuspidal curve checks')
        cuspidal.add_argument('degree', type=int)
        cuspidal.add_argument('singularities', nargs='*', type=_pair, help='Singularity types written p,q')

        flmn = subparsers.add_parser('flmn', parents=[common], help='Report for Sigma(d-1, d, d^2-d+1)')
        flmn.add_argument('degree', type=int)

        scan = subparsers.add_parser('scan', parents=[common], help='Batch reports over a family as CSV')
        scan.add_argument('family', choices=SCAN_FAMILIES)
        scan.add_argument('--p', default='', dest='p_range', help='Range a:b or list a,b,c for p')
        scan.add_argument('--q', default='', dest='q_range', help='Range for q (pq-minus, pq-plus)')
        scan.add_argument('--n', default='1', dest='n_range', help='Range for n (pq-minus, pq-plus)')
        scan.add_argument('--k', default='', dest='k_range', help='Range for k (prop31-3)')
        scan.add_argument('--d', default='', dest='d_range', help='Range for the degree d (flmn)')

    def _parse_arguments(self, argv):
        """
        Processes command line arguments and maps them to configuration settings
        """
        # Extract parsed arguments
        self.args = args = self.parser.parse_args(argv)

        # Map arguments to configuration variables
        # Every command starts from the same verbosity, whatever an earlier call left behind
        set_debug_level(logging.DEBUG if args.verbose else logging.WARNING)
        if args.char_box_margin is not None:
            config.CHAR_BOX_MARGIN = args.char_box_margin
        if args.markov_bound is not None:
            config.MARKOV_BOUND = args.markov_bound
        if args.limit is not None:
            config.ENUMERATION_LIMIT = args.limit
        if args.workers is not None:
            config.SCAN_WORKERS = args.workers

        if args.json:
            config.OUTPUT_FORMAT = 'json'
        elif args.dot:
            config.OUTPUT_FORMAT = 'dot'
        elif args.csv or args.command == 'scan':
            config.OUTPUT_FORMAT = 'csv'
        else:
            config.OUTPUT_FORMAT = 'text'

    def _print_arguments(self):
        """
        Outputs current configuration state for debugging purposes
        """
        logger.debug('Command: {}'.format(self.args.command))
        logger.debug('Output format: {}'.format(config.OUTPUT_FORMAT))
        logger.debug('Characteristic box margin: {}'.format(config.CHAR_BOX_MARGIN))
        logger.debug('Search budget: {}'.format(config.SEARCH_BUDGET))
        if self.args.command == 'markov':
            logger.debug('Markov bound: {}'.format(config.MARKOV_BOUND))
        if self.args.command == 'rot':
            logger.debug('Enumeration limit: {}'.format(config.ENUMERATION_LIMIT))
        if self.args.command == 'scan':
            logger.debug('Scan workers: {}'.format(config.SCAN_WORKERS))

    def _validate_arguments(self):
        """
        Rejects flag combinations and values no subcommand can use; argparse exits with code 2
        """
        if config.CHAR_BOX_MARGIN < 0:
            self.parser.error('--char-box-margin must be nonnegative')
        if config.MARKOV_BOUND < 1:
            self.parser.error('--markov-bound must be positive')
        if config.ENUMERATION_LIMIT < 1:
            self.parser.error('--limit must be positive')
        if config.SCAN_WORKERS < 1:
            self.parser.error('--workers must be positive')
        if self.args.dot and self.args.command != 'plumbing':
            self.parser.error('--dot is only available for the plumbing subcommand')
        if self.args.csv and self.args.command != 'scan':
            self.parser.error('--csv is only available for the scan subcommand')


class TestArgumentParser:
    """
    Command line argument parser for the unittest runner
    """

    def __init__(self, argv=None):
        self.parser = argparse.ArgumentParser(prog='brieskorn-tests', description='Runs the brieskorn test suite')
        self.args = None
        self._prepare_arguments()
        self._parse_arguments(argv)
        self._print_arguments()

    def _prepare_arguments(self):
        self.parser.add_argument('--test', default=None,
                                 help='Single test to run, e.g. tests.test_lattice.TestShortVectors.test_e8_roots',
                                 required=False, dest='single_test_name')
        self.parser.add_argument('--tag', default=None, help='Run only test classes with this tag',
                                 required=False, dest='include_tag')
        self.parser.add_argument('--exclude-tag', default=None, help='Skip test classes with this tag',
                                 required=False, dest='exclude_tag')
        self.parser.add_argument('-v', '--verbose', default=False, help='Log debugging information',
                                 required=False, dest='verbose', action='store_true')

    def _parse_arguments(self, argv):
        self.args = args = self.parser.parse_args(argv)
        config.SINGLE_TEST_NAME = args.single_test_name
        config.INCLUDE_TAG = args.include_tag
        config.EXCLUDE_TAG = args.exclude_tag
        if args.verbose:
            set_debug_level(logging.DEBUG)

    def _print_arguments(self):
        logger.debug('Single test: {}'.format(config.SINGLE_TEST_NAME))
        logger.debug('Include tag: {}'.format(config.INCLUDE_TAG))
        logger.debug('Exclude tag: {}'.format(config.EXCLUDE_TAG))
