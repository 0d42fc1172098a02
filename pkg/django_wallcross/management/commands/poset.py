# -*- coding: utf-8 -*-
from django_wallcross import strata
from django_wallcross.management.commands import Report
from django_wallcross.management.commands.strata import Command as StrataCommand


class Command(StrataCommand):
    help = "Prints the contraction poset of the boundary strata."

    def add_command_arguments(self, parser):
        self.add_query_arguments(parser)
        parser.add_argument(
            '--max-edges', action='store', dest='max_edges', type=int, default=0)
        parser.add_argument('--dot', action='store_true', dest='dot')

    def report(self, **options):
        poset = strata.contraction_poset(strata.enumerate_strata(self.query(options)))
        if options['dot']:
            text = poset.to_dot()
            return Report({'dot': text}, text.splitlines())
        data = {
            'nodes': [
                {'codim': strata.codim(node), 'vdim': strata.vdim(node)}
                for node in poset.nodes],
            'covers': [
                {'source': c.source, 'target': c.target, 'witness': c.witness}
                for c in poset.covers],
        }
        lines = ['{} strata, {} covers'.format(len(poset.nodes), len(poset.covers))]
        lines += ['{} -> {} (edge {})'.format(c.source, c.target, c.witness)
                  for c in poset.covers]
        return Report(data, lines)
