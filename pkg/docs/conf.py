# -*- coding: utf-8 -*-
#
# qlaguerre documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package lives one directory up
sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'qlaguerre'
copyright = u'2014, the qlaguerre developers'
version = '0.1'
release = '0.1a1'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'qlaguerredoc'

latex_elements = {
}
latex_documents = [
    ('index', 'qlaguerre.tex', u'qlaguerre Documentation',
     u'the qlaguerre developers', 'manual'),
]
man_pages = [
    ('index', 'qlaguerre', u'qlaguerre Documentation',
     [u'the qlaguerre developers'], 1)
]
