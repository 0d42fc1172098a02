# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = ("Glues two weight-1 tails into an edge, across two graphs or "
            "within one.")

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--tail', action='store', dest='tail', required=True)
        parser.add_argument(
            '--other-graph', action='store', dest='other_graph', default=None,
            help='Second graph document. Without it both tails are taken '
                 'from --graph.',
        )
        parser.add_argument(
            '--other-tail', action='store', dest='other_tail', required=True)

    def report(self, **options):
        graph = graphs.check_valid(documents.load_graph(options['graph']))
        if options['other_graph']:
            other = graphs.check_valid(documents.load_graph(options['other_graph']))
            result = reduction.glue(graph, options['tail'], other, options['other_tail'])
        else:
            result = reduction.self_glue(graph, options['tail'], options['other_tail'])
        return Report(documents.serialize_graph(result), self.graph_lines(result))
