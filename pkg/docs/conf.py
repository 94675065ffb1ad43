# -*- coding: utf-8 -*-
import sys
import os
import shutil
import datetime

now = datetime.datetime.now()

#### Actualize _apidoc
if os.path.exists('api'):
    shutil.rmtree('api')
os.system('sphinx-apidoc -fo api ../squeezehelpers/ ../squeezehelpers/tests')

sys.path.insert(0, os.path.abspath('../.'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.coverage',
    'sphinx.ext.imgmath',
    'm2r2'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
# General information about the project.
project = u'squeezehelpers'
copyright = str(now.year) + u', squeezehelpers developers'
author = u'squeezehelpers developers'

import squeezehelpers

version = squeezehelpers.__version__
release = squeezehelpers.__version__

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
html_sidebars = {'**': ['globaltoc.html', 'relations.html', 'sourcelink.html', 'searchbox.html'], }
html_show_sourcelink = False
htmlhelp_basename = 'squeezehelpersdoc'

latex_elements = {
    'figure_align': 'H'
}
latex_documents = [
    (master_doc, 'squeezehelpers.tex', u'squeezehelpers Documentation',
     author, 'manual'),
]
latex_show_urls = 'False'

man_pages = [
    (master_doc, 'squeezehelpers', u'squeezehelpers Documentation',
     [author], 1)
]
man_show_urls = False

texinfo_documents = [
    (master_doc, 'squeezehelpers', u'squeezehelpers Documentation',
     author, 'squeezehelpers', 'Evolution operators and inverse design of time dependent quadratic Hamiltonians.',
     'Miscellaneous'),
]

suppress_warnings = ['ref.python']
