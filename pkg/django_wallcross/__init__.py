# -*- coding: utf-8 -*-
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version

try:
    #: Module version, as defined in PEP-0396.
    __version__ = version('django-wallcross')
except PackageNotFoundError:
    __version__ = '0.0.0'
