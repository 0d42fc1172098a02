# -*- coding: utf-8 -*-
import argparse
import logging

from django.conf import settings
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from django_wallcross import documents
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import parse_rational

FORMATS = ('table', 'json')
VERBOSITY_LEVELS = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}


def wallcross_settings():

    settings_dict = {}
    mapping = {
        "threads": "WSM_THREADS",
        "max_chamber_labels": "WSM_MAX_CHAMBER_LABELS",
        "feasibility_backend": "WSM_FEASIBILITY_BACKEND",
        "output_format": "WSM_OUTPUT_FORMAT",
    }

    for wallcross_name, django_name in mapping.items():
        try:
            settings_dict[wallcross_name] = getattr(settings, django_name)
        except AttributeError:
            pass

    return settings_dict


def _option(parse):
    def convert(text):
        try:
            return parse(text)
        except WallcrossException as e:
            raise argparse.ArgumentTypeError(str(e))
    convert.__name__ = parse.__name__
    return convert


weights_option = _option(documents.parse_weight_spec)
class_option = _option(documents.parse_class)
profile_option = _option(documents.parse_profile)
rational_option = _option(parse_rational)


def names_option(text):
    names = [name.strip() for name in text.split(',') if name.strip()]
    if not names:
        raise argparse.ArgumentTypeError('expected a comma separated list of names')
    return names


class Report(object):
    """What a command prints: ``data`` for --format json, ``lines`` otherwise."""

    def __init__(self, data, lines=()):
        self.data = data
        self.lines = list(lines)


class WallcrossCommand(BaseCommand):
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            '--format', action='store', dest='format', choices=FORMATS,
            default=None,
            help='Output format. Defaults to WSM_OUTPUT_FORMAT, else "table".',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get('verbosity', 1), logging.DEBUG)
        logging.getLogger('django_wallcross').setLevel(level)
        output_format = options.get('format') or \
            wallcross_settings().get('output_format', 'table')
        try:
            report = self.report(**options)
        except WallcrossException as e:
            raise CommandError('Error[{}]: {}'.format(e.code, e), returncode=2)
        self.emit(report, output_format)
        self.after_emit(report)

    def report(self, **options):
        raise NotImplementedError

    def after_emit(self, report):
        pass

    def emit(self, report, output_format):
        if output_format == 'json':
            self.stdout.write(documents.dumps(report.data))
        else:
            for line in report.lines:
                self.stdout.write(line)

    # Shared arguments

    def add_graph_argument(self, parser, name='--graph', dest='graph'):
        parser.add_argument(
            name, action='store', dest=dest, required=True,
            help='Path to a graph document (JSON).',
        )

    def graph_lines(self, graph):
        return documents.dumps(documents.serialize_graph(graph)).splitlines()

    def add_query_arguments(self, parser):
        parser.add_argument('--genus', action='store', dest='genus', type=int, default=0)
        parser.add_argument(
            '--weights', action='store', dest='weights', type=weights_option,
            required=True, help='Tail weights, e.g. "1,1/2,1/2" or "a=1,b=1/2".',
        )
        parser.add_argument(
            '--beta', action='store', dest='beta', type=class_option, default=None,
            help='Total curve class, e.g. "1,0". Defaults to 0.',
        )
        parser.add_argument(
            '--profile', action='store', dest='profile', type=profile_option,
            default=None,
            help='Target: "point", "P<n>" or "<dim>:<kappa,...>". Defaults to a point.',
        )

    def query_data(self, options):
        profile = options['profile'] or documents.parse_profile('point')
        beta = options['beta'] if options['beta'] is not None else profile.zero_class()
        weights = documents.weights_from_spec(options['weights'])
        return options['genus'], weights, beta, profile
