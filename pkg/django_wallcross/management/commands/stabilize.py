# -*- coding: utf-8 -*-
from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross.category import absolute_stabilization
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Stabilizes a graph, optionally with the curve classes forgotten."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument(
            '--absolute', action='store_true', dest='absolute',
            help='Forget the curve classes before stabilizing.',
        )

    def report(self, **options):
        graph = graphs.check_valid(documents.load_graph(options['graph']))
        if options['absolute']:
            result = absolute_stabilization(graph)
            stable, trace = result.graph, result.trace
        else:
            stable, trace = graphs.stabilize(graph)
        steps = [
            {'step': s.step, 'vertex': s.vertex,
             'dropped': list(s.dropped), 'flags': list(s.flags)}
            for s in trace]
        data = {'graph': documents.serialize_graph(stable), 'trace': steps}
        lines = ['step {step}: vertex {vertex}'.format(**s) + (
            ' (dropped {})'.format(', '.join(s['dropped'])) if s['dropped'] else '')
            for s in steps]
        return Report(data, lines + self.graph_lines(stable))
