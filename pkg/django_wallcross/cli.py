# -*- coding: utf-8 -*-
"""
``wsm <subcommand> [options]``: runs the management command of the same
name, with minimal settings when no Django project is configured.
"""
import os
import sys

import django
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

SUBCOMMANDS = (
    'validate', 'stabilize', 'reduce', 'forget', 'combine', 'glue', 'cut',
    'chambers', 'walls', 'classify', 'path', 'pullback', 'strata', 'poset',
    'dim', 'gate', 'dot',
)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'django_wallcross': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}


def setup():
    if not settings.configured and 'DJANGO_SETTINGS_MODULE' not in os.environ:
        settings.configure(
            INSTALLED_APPS=['django_wallcross'],
            LOGGING=LOGGING,
            WSM_THREADS=os.environ.get('WSM_THREADS'),
        )
    django.setup()


def usage():
    return 'usage: wsm {{{}}} [options]'.format(','.join(SUBCOMMANDS))


def run(argv, stdout=None, stderr=None):
    """Run one subcommand; return the exit code (0, 1 usage, 2 validation)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(usage() + '\n')
        return 1
    setup()
    try:
        call_command(argv[0], *argv[1:], stdout=stdout, stderr=stderr)
    except CommandError as e:
        stderr.write('{}\n'.format(e))
        return getattr(e, 'returncode', 1)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
