# -*- coding: utf-8 -*-
"""
Lowering weights: breakpoints of the segment from 𝒜 to ℬ, the boundary
divisors the reduction contracts, and the graph-level operations (reduce,
forget, combine, glue, cut, change of target).

Unlike stabilization, the contraction used here keeps the tails of a
contracted vertex and moves them to the partner vertex.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from django_wallcross.graphs import GraphDraft
from django_wallcross.graphs import Vertex
from django_wallcross.graphs import check_valid
from django_wallcross.graphs import disjoint_union
from django_wallcross.graphs import make_graph
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import WeightData

logger = logging.getLogger(__name__)


class ReductionException(WallcrossException):
    pass


def _check_order(a, b):
    a.check_comparable(b)
    if not a.dominates(b):
        raise ReductionException(
            'incomparable', 'weights {} do not dominate {}'.format(a, b))


def _subsets(labels):
    for size in range(2, len(labels) + 1):
        for subset in itertools.combinations(labels, size):
            yield subset


@dataclass(frozen=True)
class ReductionPath:
    source: WeightData
    target: WeightData
    breakpoints: tuple
    crossed_walls: tuple

    def weights_at(self, lam):
        """Return λ·𝒜 + (1 − λ)·ℬ."""
        return self.source.interpolate(self.target, lam)

    def walls_at(self, lam):
        return dict(self.crossed_walls).get(Fraction(lam), ())

    def factorization(self):
        """Consecutive weight pairs of the elementary reductions, 𝒜 first."""
        points = (Fraction(1),) + self.breakpoints + (Fraction(0),)
        return [(self.weights_at(upper), self.weights_at(lower))
                for upper, lower in zip(points, points[1:])]


def reduction_path(a, b):
    _check_order(a, b)
    crossed = {}
    for subset in _subsets(a.labels):
        upper, lower = a.total(subset), b.total(subset)
        if upper == 1 or upper == lower:
            continue
        lam = (1 - lower) / (upper - lower)
        if 0 < lam < 1:
            crossed.setdefault(lam, []).append(subset)
    breakpoints = tuple(sorted(crossed, reverse=True))
    logger.info('reduction %s -> %s crosses %d breakpoints', a, b, len(breakpoints))
    return ReductionPath(
        a, b, breakpoints,
        tuple((lam, tuple(crossed[lam])) for lam in breakpoints))


@dataclass(frozen=True)
class ContractedDivisor:
    I: tuple
    J: tuple

    @property
    def is_exceptional(self):
        return len(self.I) > 2

    def __str__(self):
        return 'D({{{}}}|{{{}}})'.format(','.join(self.I), ','.join(self.J))


def contracted_divisors(a, b):
    """The D_{I,J} with Σ_I 𝒜 > 1 and Σ_I ℬ ≤ 1."""
    _check_order(a, b)
    divisors = []
    for subset in _subsets(a.labels):
        if a.total(subset) > 1 and b.total(subset) <= 1:
            if b.total(subset) == 1:
                logger.warning(
                    'target weights lie on the wall of {%s}', ','.join(subset))
            rest = tuple(label for label in a.labels if label not in subset)
            divisors.append(ContractedDivisor(subset, rest))
    return divisors


@dataclass(frozen=True)
class ReductionClass:
    kind: str
    subset: tuple = ()

    def __str__(self):
        if self.kind == 'blowup':
            return 'blowup({{{}}})'.format(','.join(self.subset))
        return self.kind


def classify_reduction(a, b):
    divisors = contracted_divisors(a, b)
    if all(not divisor.is_exceptional for divisor in divisors):
        return ReductionClass('isomorphism')
    if len(divisors) == 1:
        return ReductionClass('blowup', divisors[0].I)
    return ReductionClass('general')


def divisor_graph(divisor, weights, beta, profile, genus=0):
    """
    The two-vertex graph of D_{I,J}: a genus-0 class-0 vertex with the tails
    of I, joined to a vertex carrying the tails of J, the genus and β.
    """
    tails = [(0, weights.weight(label), label) for label in divisor.I]
    tails += [(1, weights.weight(label), label) for label in divisor.J]
    return make_graph(profile, [(0, None), (genus, beta)], [(0, 1)], tails)


# Graph level


def _contract_unstable(draft):
    """
    Contract unstable vertices: one edge, tails moved across it; or two
    edges and no tail, spliced.
    """
    while True:
        unstable = draft.unstable()
        if not unstable:
            return
        vertex = unstable[0]
        flags = draft.flags_at(vertex)
        edge_flags = [f for f in flags if not draft.is_tail(f)]
        tails = [f for f in flags if draft.is_tail(f)]
        outgoing = [f for f in edge_flags
                    if draft.vertex_of(draft.partner(f)) != vertex]
        if len(edge_flags) == 1 and outgoing:
            partner = draft.partner(edge_flags[0])
            target = draft.vertex_of(partner)
            del draft.flags[edge_flags[0]]
            del draft.flags[partner]
            for tail in tails:
                draft.flags[tail][1] = target
            del draft.vertices[vertex]
            logger.debug('contracted vertex %s onto %s',
                         vertex, draft.vertices[target].name)
        elif len(edge_flags) == 2 and len(outgoing) == 2 and not tails:
            first, second = (draft.partner(f) for f in edge_flags)
            draft.remove_vertex(vertex)
            draft.join(first, second)
        else:
            raise ReductionException(
                'inadmissible',
                'vertex {} cannot be stabilized'.format(draft.vertices[vertex].name))


def reduce_graph(graph, weights):
    """Lower the tail weights to ``weights`` and contract what became unstable."""
    check_valid(graph)
    names = graph.tail_names()
    if sorted(names) != sorted(weights.labels):
        raise ReductionException(
            'mismatch', 'weights must be given on the tails {}'.format(names))
    draft = GraphDraft(graph)
    for index in graph.tails():
        flag = graph.flags[index]
        new = weights.weight(flag.name)
        if new > flag.weight:
            raise ReductionException(
                'weight-increase',
                'tail {} would go from {} up to {}'.format(flag.name, flag.weight, new))
        draft.flags[index][3] = new
    _contract_unstable(draft)
    return draft.freeze()[0]


def forget_tail(graph, name):
    index = graph.tail_index(name)
    draft = GraphDraft(graph)
    del draft.flags[index]
    _contract_unstable(draft)
    return draft.freeze()[0]


def combine_tails(graph, names, name=None):
    """Replace tails at one vertex by a single tail carrying their total weight."""
    indices = [graph.tail_index(n) for n in names]
    if not indices:
        raise ReductionException('malformed', 'nothing to combine')
    if len({graph.flags[i].vertex for i in indices}) != 1:
        raise ReductionException(
            'not-one-vertex', 'tails {} sit on different vertices'.format(list(names)))
    total = sum((graph.flags[i].weight for i in indices), Fraction(0))
    if total > 1:
        raise ReductionException(
            'weight-overflow', 'combined weight {} exceeds 1'.format(total))
    draft = GraphDraft(graph)
    keep = indices[0]
    draft.flags[keep][3] = total
    if len(indices) > 1:
        draft.flags[keep][0] = name or '+'.join(graph.flags[i].name for i in indices)
    for index in indices[1:]:
        del draft.flags[index]
    return check_valid(draft.freeze()[0])


def _check_gluing_weight(graph, index):
    flag = graph.flags[index]
    if flag.weight != 1:
        raise ReductionException(
            'gluing-weight',
            'tail {} has weight {}, gluing needs weight 1'.format(flag.name, flag.weight))


def glue(first, first_tail, second, second_tail):
    """Disjoint union with the two named weight-1 tails joined into an edge."""
    i = first.tail_index(first_tail)
    j = second.tail_index(second_tail)
    _check_gluing_weight(first, i)
    _check_gluing_weight(second, j)
    union = disjoint_union(first, second)
    draft = GraphDraft(union)
    draft.join(i, len(first.flags) + j)
    return draft.freeze()[0]


def self_glue(graph, first_tail, second_tail):
    i, j = graph.tail_index(first_tail), graph.tail_index(second_tail)
    if i == j:
        raise ReductionException('malformed', 'cannot glue a tail to itself')
    _check_gluing_weight(graph, i)
    _check_gluing_weight(graph, j)
    draft = GraphDraft(graph)
    draft.join(i, j)
    return draft.freeze()[0]


def cut_edge(graph, flag_name):
    """Cut the edge containing ``flag_name`` into two weight-1 tails."""
    index = graph.flag_index(flag_name)
    if graph.is_tail(index):
        raise ReductionException('not-an-edge', 'flag {} is a tail'.format(flag_name))
    draft = GraphDraft(graph)
    partner = graph.flags[index].partner
    draft.make_tail(index, 1)
    draft.make_tail(partner, 1)
    return draft.freeze()[0]


def change_target(graph, matrix, profile):
    """Push classes through ``matrix`` into ``profile`` and restabilize."""
    draft = GraphDraft(graph)
    draft.profile = profile
    for key, vertex in list(draft.vertices.items()):
        beta = vertex.beta.apply(matrix)
        profile.check_class(beta)
        draft.vertices[key] = Vertex(vertex.name, vertex.genus, beta)
    _contract_unstable(draft)
    return draft.freeze()[0]
