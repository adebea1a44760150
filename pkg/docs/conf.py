# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

loc = os.path.abspath(os.path.dirname(__file__))
module_name = "qrecur"
module_loc = os.path.join(loc, "..")
sys.path.insert(0, module_loc)

about = {}
with open(os.path.join(module_loc, module_name, "__version__.py")) as f:
    exec(f.read(), about)


# -- Project information -----------------------------------------------------

project = 'qrecur'
copyright = '2018, Andrew Grant Spencer'
author = 'Andrew Grant Spencer'

# The short X.Y version
version = about["__version__"]
# The full version, including alpha/beta/rc tags
release = about["__version__"]


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'canonical_url': '/',
}
htmlhelp_basename = 'qrecurdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'qrecur.tex', 'qrecur Documentation',
     'Andrew Grant Spencer', 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'qrecur', 'qrecur Documentation',
     [author], 1)
]
