#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# quasigroup-elgamal documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'quasigroup-elgamal'
copyright = '2026, quasigroup-elgamal developers'
author = 'quasigroup-elgamal developers'
version = '0.1'
release = '0.1.0dev'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'quasigroup_elgamaldoc'

man_pages = [
    (master_doc, 'qgelgamal', 'quasigroup-elgamal Documentation',
     [author], 1)
]
