# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# tubular documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import tubular
import sphinx_rtd_theme


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinxcontrib.programoutput',
]

templates_path = []
source_suffix = '.rst'
master_doc = 'index'

project = 'tubular'
copyright = '2026, the tubular developers'
author = 'the tubular developers'

# The short X.Y version.
version = '.'.join(map(str, tubular.__version_info__[:2]))
# The full version, including alpha/beta/rc tags.
release = tubular.__version__

language = 'en'
exclude_patterns = ['build']
pygments_style = 'sphinx'
todo_include_todos = True

autodoc_member_order = 'bysource'
autodoc_default_flags = ['members', 'show-inheritance']


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = []
htmlhelp_basename = 'tubulardoc'
