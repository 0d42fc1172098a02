#!/usr/bin/env python
# -*- coding: utf-8 -*-

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')
version = open('VERSION').read().strip()

setup(
    name='django-wallcross',
    version=version,
    description="""Exact wall-crossing combinatorics for weighted stable maps""",
    long_description=readme + '\n\n' + history,
    author=u'django-wallcross contributors',
    packages=[
        'django_wallcross',
        'django_wallcross.management',
        'django_wallcross.management.commands',
    ],
    include_package_data=True,
    install_requires=[
        "Django>=3.2",
        "networkx>=2.5",
    ],
    tests_require=["tox"],
    entry_points={
        'console_scripts': [
            'wsm = django_wallcross.cli:main',
        ],
    },
    license="MIT",
    zip_safe=False,
    keywords='django-wallcross',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Framework :: Django',
        'Framework :: Django :: 3.2',
        'Framework :: Django :: 4.2',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
