# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import strata
from django_wallcross.graphs import stats
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand
from django_wallcross.management.commands import weights_option


class Command(WallcrossCommand):
    help = "Enumerates the boundary strata of a moduli space."

    def add_command_arguments(self, parser):
        self.add_query_arguments(parser)
        parser.add_argument(
            '--max-edges', action='store', dest='max_edges', type=int, default=0)
        parser.add_argument(
            '--dot', action='store_true', dest='dot',
            help='Print the contraction poset as DOT instead.',
        )
        parser.add_argument(
            '--reduce-to', action='store', dest='reduce_to', type=weights_option,
            default=None,
            help='Report where each stratum goes when the weights drop to these.',
        )

    def query(self, options):
        genus, weights, beta, profile = self.query_data(options)
        return strata.StrataQuery(genus, weights, beta, profile, options['max_edges'])

    def report(self, **options):
        query = self.query(options)
        found = strata.enumerate_strata(query)
        if options['dot']:
            text = strata.contraction_poset(found).to_dot()
            return Report({'dot': text}, text.splitlines())
        if options['reduce_to'] is not None:
            target = documents.weights_from_spec(options['reduce_to'], query.weights.labels)
            return self.diff_report(query, target, found)

        data = [
            {'codim': strata.codim(g), 'vdim': stats(g).vdim,
             'graph': documents.serialize_graph(g)}
            for g in found]
        lines = ['{} strata'.format(len(found))]
        for index, graph in enumerate(found):
            lines.append('# {}: codim {} vdim {}'.format(
                index, strata.codim(graph), stats(graph).vdim))
            lines += self.graph_lines(graph)
        return Report(data, lines)

    def diff_report(self, query, target, found):
        diff = strata.chamber_diff(query, query.weights, target, found)
        data = {
            'fibers': [list(members) for members in diff.fibers],
            'contracted': [found.index(entry.source) for entry in diff.contracted],
        }
        lines = ['{} strata, {} images'.format(len(found), len(diff.fibers))]
        lines += ['fiber: {}'.format(' '.join(str(m) for m in members))
                  for members in diff.fibers]
        lines += ['contracted: {}'.format(index) for index in data['contracted']]
        return Report(data, lines)
