# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross.category import cartesian_isogeny_pullback
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = ("Lists the stable graphs over σ whose absolute stabilization "
            "maps to it through a given isogeny.")

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser, '--sigma', 'sigma')
        parser.add_argument(
            '--isogeny', action='store', dest='isogeny', required=True,
            help='Path to an isogeny document into the absolute stabilization of σ.',
        )

    def report(self, **options):
        sigma = graphs.check_valid(documents.load_graph(options['sigma']))
        isogeny = documents.parse_isogeny(
            documents.load_json(options['isogeny']), options['isogeny'])
        results = cartesian_isogeny_pullback(sigma, isogeny)
        data = [
            {
                'graph': documents.serialize_graph(result.graph),
                'isogeny': documents.serialize_isogeny(result.isogeny, with_graphs=False),
            }
            for result in results]
        lines = ['{} graphs'.format(len(results))]
        for index, result in enumerate(results):
            lines.append('# {}: classes {}'.format(index, ' '.join(
                '{}={}'.format(v.name, v.beta) for v in result.graph.vertices)))
            lines += self.graph_lines(result.graph)
        return Report(data, lines)
