# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Forgets a tail and contracts what became unstable."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--tail', action='store', dest='tail', required=True)

    def report(self, **options):
        graph = graphs.check_valid(documents.load_graph(options['graph']))
        result = reduction.forget_tail(graph, options['tail'])
        return Report(documents.serialize_graph(result), self.graph_lines(result))
