# -*- coding: utf-8 -*-
#
# Django Wallcross documentation build configuration file.
#
# Only the options this documentation uses are set here; see
# http://sphinx-doc.org/config.html for the rest.

import os

doc_dir = os.path.dirname(os.path.abspath(__file__))
project_dir = os.path.dirname(doc_dir)
version_filename = os.path.join(project_dir, 'VERSION')

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.viewcode']

source_suffix = '.rst'
master_doc = 'index'

project = u'Django Wallcross'
copyright = u'2026, the Django Wallcross developers'

with open(version_filename) as handle:
    version = handle.read().strip()
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
htmlhelp_basename = 'django-wallcross'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'django-wallcross', u'Django Wallcross Documentation',
     [u'The Django Wallcross developers'], 1)
]
