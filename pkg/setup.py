# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
from os import path

import squeezehelpers

with open(path.join(path.abspath(path.dirname(__file__)), 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='squeezeHelpers',
    version=squeezehelpers.__version__,
    packages=find_packages(exclude=['examples', 'examples.*']),
    platforms='All',
    python_requires='>=3.7',
    license='LGPLv3',
    description='Evolution operators, Mathieu squeeze scans and inverse design of time dependent traps.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    install_requires=['numpy', 'scipy', 'shapely'],
    entry_points={
        'console_scripts': ['squeezehelpers=squeezehelpers.cli:main']
    },
    test_suite='squeezehelpers.tests',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)'
    ]
)
