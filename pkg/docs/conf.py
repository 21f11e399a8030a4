#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# lattice_studio documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import lattice_studio

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode',
              'sphinx.ext.napoleon', 'sphinx.ext.mathjax']

autodoc_default_options = {
    'members': True,
    'undoc-members': False,
}

source_suffix = '.rst'
master_doc = 'index'

project = u'Lattice Studio'
copyright = u"2026, John James"
author = u"John James"

version = lattice_studio.__version__
release = lattice_studio.__version__

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'lattice_studiodoc'

# -- Options for LaTeX and manual pages --------------------------------

latex_documents = [
    (master_doc, 'lattice_studio.tex', u'Lattice Studio Documentation',
     u'John James', 'manual'),
]

man_pages = [
    (master_doc, 'lattice_studio', u'Lattice Studio Documentation', [author], 1)
]
