# -*- coding: utf-8 -*-
import argparse

from django_wallcross import dimension
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


def insertion_option(text):
    """``codim:k:label``."""
    parts = text.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            'expected codim:k:label, got {!r}'.format(text))
    try:
        return dimension.Insertion(int(parts[0]), int(parts[1]), parts[2])
    except (ValueError, dimension.DimensionException) as e:
        raise argparse.ArgumentTypeError(str(e))


class Command(WallcrossCommand):
    help = "Checks a correlator against the virtual dimension."

    def add_command_arguments(self, parser):
        self.add_query_arguments(parser)
        parser.add_argument(
            '--insertion', action='append', dest='insertions', type=insertion_option,
            default=[], help='codim:k:label, once per insertion.',
        )

    def report(self, **options):
        genus, weights, beta, profile = self.query_data(options)
        result = dimension.dimension_gate(
            genus, weights, beta, profile, options['insertions'])
        data = {
            'passes': result.passes, 'vdim': result.vdim,
            'degree': result.total, 'deficit': result.deficit,
        }
        return Report(data, [str(result)])
