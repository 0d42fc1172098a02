# -*- coding: utf-8 -*-
from django.core.management.base import CommandError

from django_wallcross import documents
from django_wallcross import graphs
from django_wallcross.management.commands import Report
from django_wallcross.management.commands import WallcrossCommand


class Command(WallcrossCommand):
    help = "Checks a graph document and reports its invariants."

    def add_command_arguments(self, parser):
        self.add_graph_argument(parser)

    def report(self, **options):
        graph = documents.load_graph(options['graph'])
        violations = graphs.validate(graph)
        data = {
            'valid': not violations,
            'violations': [
                {'code': v.code, 'detail': v.detail} for v in violations],
        }
        lines = ['[{}] {}'.format(v.code, v.detail) for v in violations]
        if not violations:
            summary = graphs.stats(graph)
            stable = graphs.is_stable(graph)
            data.update({
                'stable': stable,
                'unstable_vertices': [
                    graph.vertices[v].name for v in graphs.unstable_vertices(graph)],
                'stats': {
                    'beta_total': summary.beta_total,
                    'euler': summary.euler,
                    'genus': summary.genus_total,
                    'vdim': summary.vdim,
                    'tails': summary.n_tails,
                    'edges': summary.n_edges,
                    'components': summary.n_components,
                },
            })
            lines = [
                'valid',
                'stable: {}'.format('yes' if stable else 'no'),
                'genus: {}'.format(summary.genus_total),
                'euler characteristic: {}'.format(summary.euler),
                'total class: {}'.format(summary.beta_total),
                'tails: {}  edges: {}  components: {}'.format(
                    summary.n_tails, summary.n_edges, summary.n_components),
                'vdim: {}'.format(summary.vdim),
            ]
        return Report(data, lines)

    def after_emit(self, report):
        if not report.data['valid']:
            detail = report.data['violations'][0]['detail']
            raise CommandError('Error[invalid-graph]: {}'.format(detail), returncode=2)
