#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# RieszUncertain documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os
import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('../..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.ifconfig'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'rieszuncertain'
copyright = '2026, RieszUncertain Developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
release = '1.0.0'

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_title = "RieszUncertain"
htmlhelp_basename = 'rieszuncertaindoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'rieszuncertain.tex', 'RieszUncertain Documentation',
   'RieszUncertain Developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'rieszuncertain', 'RieszUncertain Documentation',
     ['RieszUncertain Developers'], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
  ('index', 'rieszuncertain', 'RieszUncertain Documentation',
   'RieszUncertain Developers', 'RieszUncertain',
   'Riesz-type summability diagnostics of uncertain sequences.', 'Miscellaneous'),
]
