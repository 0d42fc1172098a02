# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Cuts an edge into two weight-1 tails."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument(
            '--flag', action='store', dest='flag', required=True,
            help='Either flag of the edge to cut.',
        )

    def report(self, **options):
        graph = graphs.check_valid(documents.load_graph(options['graph']))
        result = reduction.cut_edge(graph, options['flag'])
        return Report(documents.serialize_graph(result), self.graph_lines(result))
