# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross import reduction
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand
from django_wallcross.management.commands import names_option


class Command(WallcrossCommand):
    help = "Combines tails at one vertex into a single tail."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument(
            '--tails', action='store', dest='tails', type=names_option, required=True,
            help='Comma separated tail names.',
        )
        parser.add_argument(
            '--name', action='store', dest='name', default=None,
            help='Name of the combined tail. Defaults to the names joined by "+".',
        )

    def report(self, **options):
        graph = graphs.check_valid(documents.load_graph(options['graph']))
        result = reduction.combine_tails(graph, options['tails'], options['name'])
        return Report(documents.serialize_graph(result), self.graph_lines(result))
