#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = ['numpy>=1.22', 'scipy>=1.12', 'pandas>=1.4', 'scikit-learn>=1.2',
                'PyYAML>=5.1', 'jsonschema>=3.0', 'Click>=7.0']

setup_requirements = ['pytest-runner', ]

test_requirements = ['pytest', 'hypothesis', ]

setup(
    author="John James",
    author_email='jjames@decisionscients.com',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    description="Homogenization of discrete multibody lattice energies",
    entry_points={
        'console_scripts': [
            'lattice-studio=lattice_studio.cli:main',
        ],
    },
    install_requires=requirements,
    license="BSD license",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='homogenization lattice multibody potentials cell problem',
    name='lattice-studio',
    packages=find_packages(include=['lattice_studio', 'lattice_studio.*']),
    python_requires='>=3.9',
    setup_requires=setup_requirements,
    test_suite='tests',
    tests_require=test_requirements,
    url='https://github.com/decisionscients/lattice-studio',
    version='0.1.0',
    zip_safe=False,
)
