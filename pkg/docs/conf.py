# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information
import os
import sys

# Add the package directories to sys path so that autodoc may import modules by their short names
sys.path.append(os.path.abspath('../brieskorn'))
sys.path.append(os.path.abspath('../brieskorn/classes/core'))
sys.path.append(os.path.abspath('../brieskorn/classes/dinvariant'))
sys.path.append(os.path.abspath('../brieskorn/classes/topology'))
sys.path.append(os.path.abspath('../brieskorn/utilities'))
sys.path.append(os.path.abspath('../'))

autodoc_typehints = 'description'
autodoc_member_order = 'bysource'
# -- Project details configuration -------------------------------------------
project = 'Brieskorn Obstruct'
copyright = '2026, Brieskorn Obstruct contributors'
author = 'Brieskorn Obstruct contributors'
release = '1.0.0'

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

# Enable extensions for autodoc and including comments from source files
extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.githubpages',
              ]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'sticky_navigation': True,
    'navigation_depth': 4,
    'includehidden': True,
    'titles_only': False
}
