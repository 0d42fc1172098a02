# -*- coding: utf-8 -*-
"""
Boundary strata: connected stable graphs with fixed total genus, class and
tails, up to isomorphism, and the poset of single-edge contractions.
"""
import itertools
import logging
from dataclasses import dataclass

import networkx as nx

from django_wallcross import conf
from django_wallcross.graphs import WGraph
from django_wallcross.graphs import canonical_form
from django_wallcross.graphs import contract_edges
from django_wallcross.graphs import is_stable
from django_wallcross.graphs import make_graph
from django_wallcross.graphs import stats
from django_wallcross.reduction import reduce_graph
from django_wallcross.weights import AdmissibleData
from django_wallcross.weights import CurveClass
from django_wallcross.weights import TargetProfile
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import WeightData
from django_wallcross.weights import class_distributions
from django_wallcross.weights import compositions
from django_wallcross.weights import is_admissible

logger = logging.getLogger(__name__)


class StrataException(WallcrossException):
    pass


@dataclass(frozen=True)
class StrataQuery:
    genus_total: int
    weights: WeightData
    beta_total: CurveClass
    profile: TargetProfile
    max_edges: int = 0

    def check(self):
        self.profile.check_class(self.beta_total)
        if self.max_edges < 0 or self.genus_total < 0:
            raise StrataException('malformed', 'genus and max_edges must be non-negative')
        data = AdmissibleData(self.genus_total, self.weights, self.beta_total)
        if not is_admissible(data):
            raise StrataException(
                'inadmissible', '2g - 2 + Σ weights must be positive when β = 0')

    def with_weights(self, weights):
        return StrataQuery(
            self.genus_total, weights, self.beta_total, self.profile, self.max_edges)


def _shapes(query):
    """(number of vertices, edge multiset) of every connected multigraph in range."""
    shapes = []
    for n_edges in range(query.max_edges + 1):
        for n_vertices in range(1, n_edges + 2):
            if n_edges - n_vertices + 1 > query.genus_total:
                continue
            pairs = list(itertools.combinations_with_replacement(range(n_vertices), 2))
            for edges in itertools.combinations_with_replacement(pairs, n_edges):
                graph = nx.MultiGraph()
                graph.add_nodes_from(range(n_vertices))
                graph.add_edges_from(edges)
                if nx.is_connected(graph):
                    shapes.append((n_vertices, edges))
    return shapes


def _decorations(query, shape):
    n_vertices, edges = shape
    betti = len(edges) - n_vertices + 1
    labels = query.weights.labels
    found = []
    for genera in compositions(query.genus_total - betti, n_vertices):
        for betas in class_distributions(query.beta_total, n_vertices):
            for owners in itertools.product(range(n_vertices), repeat=len(labels)):
                tails = [(owner, query.weights.weight(label), label)
                         for owner, label in zip(owners, labels)]
                graph = make_graph(
                    query.profile, list(zip(genera, betas)), edges, tails)
                if is_stable(graph):
                    found.append(graph)
    return found


def enumerate_strata(query):
    """Canonical stable graphs of the query, by number of edges then canonical code."""
    query.check()
    batches = conf.parallel_map(
        lambda shape: _decorations(query, shape), _shapes(query))
    strata = {}
    for graph in itertools.chain.from_iterable(batches):
        form = canonical_form(graph)
        strata.setdefault(form.key, form.graph)
    ordered = sorted(strata.items(), key=lambda item: (len(item[1].edges()), item[0][1]))
    logger.info('%d strata with at most %d edges', len(ordered), query.max_edges)
    return [graph for _, graph in ordered]


def codim(graph):
    return len(graph.edges())


def vdim(graph):
    return stats(graph).vdim


@dataclass(frozen=True)
class Cover:
    source: int
    target: int
    witness: str


@dataclass(frozen=True)
class StratumPoset:
    nodes: tuple
    covers: tuple

    def digraph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.nodes)))
        graph.add_edges_from((cover.source, cover.target) for cover in self.covers)
        return graph

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.digraph())

    def to_dot(self, name='strata'):
        lines = ['digraph "{}" {{'.format(name)]
        for index, node in enumerate(self.nodes):
            lines.append('  s{} [label="{}/{}"];'.format(
                index, codim(node), vdim(node)))
        for cover in self.covers:
            lines.append('  s{} -> s{} [label="{}"];'.format(
                cover.source, cover.target, cover.witness))
        lines.append('}')
        return '\n'.join(lines) + '\n'


def contraction_poset(strata):
    """Covers τ → σ where σ is τ with one edge (or loop) contracted."""
    nodes = []
    index = {}
    for graph in strata:
        form = canonical_form(graph)
        if form.key not in index:
            index[form.key] = len(nodes)
            nodes.append(form.graph)
    covers = []
    for source, graph in enumerate(nodes):
        reached = set()
        for flag, _ in graph.edges():
            target = index.get(canonical_form(contract_edges(graph, [flag])[0]).key)
            if target is None or target in reached:
                continue
            reached.add(target)
            covers.append(Cover(source, target, graph.flags[flag].name))
    poset = StratumPoset(tuple(nodes), tuple(covers))
    if not poset.is_acyclic():
        raise StrataException('malformed', 'contraction poset has a cycle')
    logger.info('poset of %d strata, %d covers', len(nodes), len(covers))
    return poset


@dataclass(frozen=True)
class StratumImage:
    source: WGraph
    image: WGraph
    contracted: bool


@dataclass(frozen=True)
class ChamberDiff:
    images: tuple
    fibers: tuple

    @property
    def contracted(self):
        return [entry for entry in self.images if entry.contracted]


def chamber_diff(query, a, b, strata=None):
    """Where reduce_graph sends each stratum of ``a`` when lowering to ``b``."""
    a.check_comparable(b)
    if not a.dominates(b):
        raise StrataException('incomparable', 'weights {} do not dominate {}'.format(a, b))
    if strata is None:
        strata = enumerate_strata(query.with_weights(a))
    images = []
    fibers = {}
    for graph in strata:
        image = canonical_form(reduce_graph(graph, b))
        images.append(StratumImage(
            graph, image.graph, codim(image.graph) < codim(graph)))
        fibers.setdefault(image.key, []).append(len(images) - 1)
    return ChamberDiff(
        tuple(images), tuple(tuple(members) for members in fibers.values()))
