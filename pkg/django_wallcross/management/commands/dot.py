# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Prints the DOT rendering of a graph."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)

    def report(self, **options):
        graph = documents.load_graph(options['graph'])
        text = graphs.to_dot(graph)
        return Report({'dot': text}, text.splitlines())
