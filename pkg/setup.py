#!/usr/bin/env python

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


import os

from setuptools import setup, find_packages

import tubular


install_requires = [
    'sympy>=1.1',
    'cytoolz',
]


dev_requires = [
    'pytest',
    'pytest-cov',
    'pylint',
    'flake8',
    'sphinx',
    'sphinx-autobuild',
    'sphinx-rtd-theme',
    'sphinxcontrib-programoutput',
]


if __name__ == '__main__':
    setup(
        name='tubular',
        version=tubular.__version__,
        description='Exact symbolic verification for spherical tube hypersurfaces',
        long_description=open('README.rst').read(),

        packages=(
            find_packages(exclude=['examples', 'examples.*'])
        ),

        data_files=[
            (
                os.path.join('docs/tubular', root.replace('docs/build/', '')),
                [os.path.join(root, f) for f in files]
            )
            for root, dirs, files in os.walk('docs/build/html')
        ],

        include_package_data=True,
        zip_safe=False,

        install_requires=install_requires,
        extras_require=dict(
            dev=dev_requires,
        ),

        entry_points=dict(
            console_scripts=[
                'tubular = tubular.cli.run:main',
            ],
        ),

        classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'Operating System :: OS Independent',
            'Programming Language :: Python',
            'Programming Language :: Python :: 3',
            'Topic :: Scientific/Engineering :: Mathematics',
        ],
    )
