# -*- coding: utf-8 -*-
from django.core.management.base import CommandError

from django_wallcross import chambers
from django_wallcross import documents
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand
from django_wallcross.management.commands import weights_option


class Command(WallcrossCommand):
    help = ("Lists walls: those of the domain, those a point lies on, or "
            "those a segment crosses.")

    def add_command_arguments(self, parser):
        parser.add_argument('--n', action='store', dest='n', type=int, default=None)
        parser.add_argument(
            '--weights', action='store', dest='weights', type=weights_option,
            default=None,
        )
        parser.add_argument(
            '--between', action='store', dest='between', type=weights_option,
            default=None, help='Second end point of the segment starting at --weights.',
        )
        parser.add_argument(
            '--kind', action='store', dest='kind', choices=chambers.KINDS,
            default=chambers.FINE,
        )
        parser.add_argument('--genus', action='store', dest='genus', type=int, default=None)

    def report(self, **options):
        kind = options['kind']
        if options['weights'] is None:
            if options['n'] is None:
                raise CommandError('Error: give --n or --weights')
            found = chambers.walls(options['n'], kind, options['genus'])
            data = [{'wall': list(w.subset), 'witness': list(w.witness)} for w in found]
            lines = ['{}  {}'.format(w, ','.join(str(x) for x in w.witness))
                     for w in found]
            return Report(data, lines)

        weights = documents.weights_from_spec(options['weights'])
        if options['between'] is not None:
            other = documents.weights_from_spec(options['between'], weights.labels)
            crossed = chambers.walls_crossed(weights, other, kind)
            data = [{'wall': list(w.subset), 'at': s} for w, s in crossed]
            lines = ['{}  at s={}'.format(w, s) for w, s in crossed]
            return Report(data, lines)

        signature = chambers.signature_of(weights, kind)
        on = chambers.wall_memberships(weights, kind)
        data = {
            'signs': signature.key,
            'on_walls': [list(w.subset) for w in on],
            'interior': signature.is_strict(),
        }
        lines = ['signs: {}'.format(signature.key or '.')]
        lines += ['on wall {}'.format(w) for w in on] or ['in the interior of a chamber']
        return Report(data, lines)
