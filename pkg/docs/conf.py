# -*- coding: utf-8 -*-
#
# Sphinx configuration for the laftk documentation.

import os
import sys

# Get the project root dir, which is the parent dir of this one, and
# insert it first in the path, so the local version of laftk is documented.
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import laftk  # noqa: E402

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'sphinx.ext.napoleon']

# numpy-style docstrings only
napoleon_google_docstring = False
autodoc_member_order = 'bysource'

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']

project = u'laftk'
copyright = u'2026, The laftk developers'
version = laftk.__version__
release = laftk.__version__

pygments_style = 'sphinx'
html_theme = 'alabaster'
htmlhelp_basename = 'laftkdoc'

# The command-line tool gets a manual page.
man_pages = [
    ('usage', 'laf', u'check and run proof-terms of focussed sequent calculi', [u'The laftk developers'], 1),
]
