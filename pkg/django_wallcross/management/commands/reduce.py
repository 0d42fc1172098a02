# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand
from django_wallcross.management.commands import weights_option


class Command(WallcrossCommand):
    help = "Lowers the tail weights of a graph and contracts what became unstable."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument(
            '--to', action='store', dest='to', type=weights_option, required=True,
            help='New tail weights, in tail order or as "label=p/q".',
        )

    def report(self, **options):
        graph = graphs.check_valid(documents.load_graph(options['graph']))
        weights = documents.weights_from_spec(options['to'], graph.tail_names())
        reduced = reduction.reduce_graph(graph, weights)
        return Report(documents.serialize_graph(reduced), self.graph_lines(reduced))
