# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand
from django_wallcross.management.commands import weights_option


class Command(WallcrossCommand):
    help = "Prints the breakpoints of a reduction and its elementary factorization."

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--from', action='store', dest='source', type=weights_option, required=True)
        parser.add_argument(
            '--to', action='store', dest='target', type=weights_option, required=True)

    def report(self, **options):
        a = documents.weights_from_spec(options['source'])
        b = documents.weights_from_spec(options['target'], a.labels)
        path = reduction.reduction_path(a, b)
        data = {
            'breakpoints': [
                {'lambda': lam, 'walls': [list(s) for s in subsets]}
                for lam, subsets in path.crossed_walls],
            'factorization': [
                {'from': upper, 'to': lower} for upper, lower in path.factorization()],
        }
        lines = ['breakpoints: {}'.format(
            ', '.join(str(lam) for lam in path.breakpoints) or 'none')]
        for lam, subsets in path.crossed_walls:
            lines.append('  λ={}: {}'.format(
                lam, ' '.join('{' + ','.join(s) + '}' for s in subsets)))
        lines.append('factorization:')
        lines += ['  ({}) -> ({})'.format(upper, lower)
                  for upper, lower in path.factorization()]
        return Report(data, lines)
