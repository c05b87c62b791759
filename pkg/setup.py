#!/usr/bin/env python
# -*- coding: utf-8 -*-


try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


readme = open('README.rst').read()

requirements = [
    'lark>=1.1',
    'python-levenshtein',
    'sexpdata',
]

test_requirements = []

setup(
    name='laftk',
    version='0.2.0',
    description="A toolkit for the abstract focussed sequent calculus LAF and its instances.",
    long_description=readme + '\n\n',
    author="The laftk developers",
    author_email='laftk-developers@users.noreply.github.com',
    packages=['laftk', 'laftk.instances'],
    scripts=[
        'scripts/laf',
    ],
    include_package_data=True,
    install_requires=requirements,
    python_requires='>=3.7',
    license="GPLv3+",
    zip_safe=False,
    keywords='laftk focusing sequent-calculus proof-terms realisability',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements
)
