# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand
from django_wallcross.management.commands import weights_option


class Command(WallcrossCommand):
    help = "Classifies the reduction morphism between two weight data."

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--from', action='store', dest='source', type=weights_option, required=True)
        parser.add_argument(
            '--to', action='store', dest='target', type=weights_option, required=True)

    def report(self, **options):
        a = documents.weights_from_spec(options['source'])
        b = documents.weights_from_spec(options['target'], a.labels)
        result = reduction.classify_reduction(a, b)
        divisors = reduction.contracted_divisors(a, b)
        data = {
            'class': str(result),
            'divisors': [
                {'I': list(d.I), 'J': list(d.J), 'exceptional': d.is_exceptional}
                for d in divisors],
        }
        lines = [str(result)]
        lines += ['  {}{}'.format(d, ' exceptional' if d.is_exceptional else '')
                  for d in divisors]
        return Report(data, lines)
