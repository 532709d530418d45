# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from setuptools import setup, find_packages
import os
import re


# Read version number from version.py
version_line = open("cmi_resampling/version.py", "rt").read()
result = re.search(r"^version = ['\"]([^'\"]*)['\"]", version_line, re.M)
if result:
    version_string = result.group(1)
else:
    raise RuntimeError("Unable to find version string")


# Use README.rst and CHANGELOG.rst as package description
root_path = os.path.dirname(__file__)
readme = open(os.path.join(root_path, 'README.rst')).read()
changelog = open(os.path.join(root_path, 'CHANGELOG.rst')).read()
long_description = readme.strip() + "\n\n" + changelog.strip() + "\n"


setup(
    name='cmi-resampling',
    version=version_string,
    author='cmi-resampling developers',
    description='Resampling-Based Conditional Independence Tests For '
                'Discrete Data',
    license='BSD',
    keywords='conditional independence mutual information permutation test',
    packages=find_packages(exclude=['tests', 'tests.*']),
    long_description=long_description,
    python_requires='>=3.6, <4',
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.3',
        'pandas>=1.5',
        'joblib>=0.14',
        'PyYAML>=5.1',
    ],
    extras_require={
        'test': [
            'flake8>=3.6.0',
            'mock>=3.0.0',
            'pytest>=3.10.0',
            'pytest-cov>=2.6.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'cmi-resampling = cmi_resampling.cli:main',
        ],
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'
    ]
)
