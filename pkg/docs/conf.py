# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'syzlab'
copyright = '2026, syzlab developers'
author = 'syzlab developers'


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.napoleon', 'sphinx.ext.autodoc', 'sphinx.ext.autosectionlabel']

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'

autodoc_mock_imports = ['numpy', 'pandas', 'pathos', 'yaml', 'sympy', 'numba', 'tqdm', 'threadpoolctl']

autoclass_content = 'both'
autodoc_member_order = 'groupwise'
