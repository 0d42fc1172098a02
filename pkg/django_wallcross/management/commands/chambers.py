# -*- coding: utf-8 -*-
from django_wallcross import chambers
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Enumerates the chambers of the weight domain with witnesses."

    def add_command_arguments(self, parser):
        parser.add_argument('--n', action='store', dest='n', type=int, required=True)
        parser.add_argument(
            '--kind', action='store', dest='kind', choices=chambers.KINDS,
            default=chambers.FINE,
        )
        parser.add_argument(
            '--genus', action='store', dest='genus', type=int, default=None,
            help='Restrict to weights with Σ > 2 - 2g.',
        )

    def report(self, **options):
        found = chambers.enumerate_chambers(
            options['n'], options['kind'], options['genus'])
        data = {
            'n': options['n'],
            'kind': options['kind'],
            'walls': [list(subset) for subset in found[0].subsets] if found else [],
            'chambers': [
                {'signs': c.key, 'witness': list(c.witness.weights)}
                for c in found],
        }
        lines = ['{} {} chambers'.format(len(found), options['kind'])]
        lines += ['{}  {}'.format(c.key or '.', c.witness) for c in found]
        return Report(data, lines)
