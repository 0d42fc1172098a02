# -*- coding: utf-8 -*-
import os
from concurrent.futures import ThreadPoolExecutor
from importlib import import_module

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULT_FEASIBILITY_BACKEND = 'django_wallcross.linear.simplex_feasible_point'


def get_setting(name, default=None):
    """Return a WSM_ setting, or ``default`` outside a configured project."""
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default


def get_threads():
    threads = get_setting('WSM_THREADS')
    if threads is None:
        threads = os.environ.get('WSM_THREADS') or 1
    try:
        threads = int(threads)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(
            'WSM_THREADS must be an integer, got {!r}'.format(threads))
    return max(threads, 1)


def get_max_chamber_labels():
    return int(get_setting('WSM_MAX_CHAMBER_LABELS', 6))


def get_feasibility_backend():
    """Resolve WSM_FEASIBILITY_BACKEND to a callable."""
    path = get_setting('WSM_FEASIBILITY_BACKEND', DEFAULT_FEASIBILITY_BACKEND)
    if callable(path):
        return path
    try:
        module_path, function_name = path.rsplit('.', 1)
        module = import_module(module_path)
        return getattr(module, function_name)
    except (ValueError, ImportError, AttributeError):
        raise ImproperlyConfigured(
            'WSM_FEASIBILITY_BACKEND: cannot import {!r}'.format(path))


def parallel_map(function, items):
    """Ordered map, on a thread pool when WSM_THREADS > 1."""
    items = list(items)
    threads = min(get_threads(), len(items))
    if threads <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))
