# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass

from django_wallcross.graphs import components
from django_wallcross.graphs import stats
from django_wallcross.reduction import cut_edge
from django_wallcross.weights import AdmissibleData
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import is_admissible

logger = logging.getLogger(__name__)


class DimensionException(WallcrossException):
    pass


@dataclass(frozen=True)
class Insertion:
    codim: int
    descendant_power: int
    weight_label: str

    def __post_init__(self):
        if self.codim < 0 or self.descendant_power < 0:
            raise DimensionException(
                'malformed', 'codimension and descendant power are non-negative')
        object.__setattr__(self, 'weight_label', str(self.weight_label))

    @property
    def degree(self):
        return self.codim + self.descendant_power


@dataclass(frozen=True)
class GateResult:
    vdim: int
    total: int

    @property
    def deficit(self):
        return self.total - self.vdim

    @property
    def passes(self):
        return self.deficit == 0

    def __str__(self):
        if self.passes:
            return 'passes'
        return 'fails({:+d})'.format(self.deficit)


def vdim_moduli(genus, weights, beta, profile):
    """(1 − g)(dim V − 3) − K_V·β + |S|; the weights themselves do not enter."""
    if not is_admissible(AdmissibleData(genus, weights, beta)):
        raise DimensionException('inadmissible', 'data is not admissible')
    return ((1 - genus) * (profile.dim_v - 3)
            - profile.canonical_degree(beta) + len(weights.labels))


def dimension_gate(genus, weights, beta, profile, insertions):
    labels = [insertion.weight_label for insertion in insertions]
    if len(set(labels)) != len(labels):
        raise DimensionException('duplicate-label', 'insertion labels repeat')
    for label in labels:
        weights.index(label)
    result = GateResult(
        vdim_moduli(genus, weights, beta, profile),
        sum(insertion.degree for insertion in insertions))
    logger.debug('dimension gate: degree %d against vdim %d', result.total, result.vdim)
    return result


def vdim_graph(graph):
    return stats(graph).vdim


def gluing_defect(graph, flag_name):
    """
    Virtual dimension of the graph cut at ``flag_name`` (summed over its
    components) minus that of the graph; always dim V.
    """
    pieces = components(cut_edge(graph, flag_name))
    return sum(vdim_graph(piece) for piece in pieces) - vdim_graph(graph)
