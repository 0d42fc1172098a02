# -*- coding: utf-8 -*-
"""
Weighted modular V-graphs.

A graph is stored by its flags: each flag knows its vertex (∂) and its
partner (j); a flag that is its own partner is a tail. Vertices carry a
genus and a curve class. Tail names are the marking labels and are part of
the data; vertex names and edge-flag names are presentation only.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from django_wallcross.weights import CurveClass
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import WeightData
from django_wallcross.weights import curve_class
from django_wallcross.weights import format_rational
from django_wallcross.weights import parse_rational
from django_wallcross.weights import vertex_ample

logger = logging.getLogger(__name__)


class GraphException(WallcrossException):
    pass


@dataclass(frozen=True)
class Vertex:
    name: str
    genus: int
    beta: CurveClass


@dataclass(frozen=True)
class Flag:
    name: str
    vertex: int
    partner: int
    weight: Fraction


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class GraphStats:
    beta_total: CurveClass
    euler: int
    genus_total: int
    vdim: int
    n_tails: int
    n_edges: int
    n_components: int
    betti: int


@dataclass(frozen=True)
class StabilizationStep:
    step: int
    vertex: str
    dropped: tuple = ()
    flags: tuple = ()


@dataclass(frozen=True)
class WGraph:
    profile: object
    vertices: tuple
    flags: tuple

    def is_tail(self, index):
        return self.flags[index].partner == index

    def tails(self):
        return [i for i, flag in enumerate(self.flags) if flag.partner == i]

    def tail_names(self):
        return [self.flags[i].name for i in self.tails()]

    def edges(self):
        return [(i, flag.partner) for i, flag in enumerate(self.flags)
                if flag.partner > i]

    def loops(self):
        return [(i, j) for i, j in self.edges()
                if self.flags[i].vertex == self.flags[j].vertex]

    def flags_at(self, vertex):
        return [i for i, flag in enumerate(self.flags) if flag.vertex == vertex]

    def flag_index(self, name):
        for i, flag in enumerate(self.flags):
            if flag.name == str(name):
                return i
        raise GraphException('unknown-flag', 'no flag named {!r}'.format(name))

    def tail_index(self, name):
        index = self.flag_index(name)
        if not self.is_tail(index):
            raise GraphException('not-a-tail', 'flag {!r} is part of an edge'.format(name))
        return index

    def vertex_index(self, name):
        for i, vertex in enumerate(self.vertices):
            if vertex.name == str(name):
                return i
        raise GraphException('unknown-vertex', 'no vertex named {!r}'.format(name))

    def tail_weights(self):
        tails = self.tails()
        return WeightData(
            tuple(self.flags[i].name for i in tails),
            tuple(self.flags[i].weight for i in tails))

    def flag_weights_at(self, vertex):
        return [self.flags[i].weight for i in self.flags_at(vertex)]

    def vertex_is_stable(self, vertex):
        data = self.vertices[vertex]
        return vertex_ample(data.genus, self.flag_weights_at(vertex), data.beta)

    def nx_graph(self):
        """The underlying multigraph |τ| (loops included)."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self.vertices)))
        for i, j in self.edges():
            graph.add_edge(self.flags[i].vertex, self.flags[j].vertex)
        return graph


def make_graph(profile, vertices, edges=(), tails=()):
    """
    Build a graph from ``vertices`` as ``(genus, beta)`` pairs, ``edges`` as
    vertex index pairs and ``tails`` as ``(vertex, weight, name)``.
    """
    built_vertices = []
    for index, (genus, beta) in enumerate(vertices):
        if beta is None:
            beta = profile.zero_class()
        built_vertices.append(Vertex('v{}'.format(index), genus, curve_class(beta)))
    flags = []
    for number, (u, v) in enumerate(edges):
        first = len(flags)
        flags.append(Flag('e{}a'.format(number), u, first + 1, Fraction(1)))
        flags.append(Flag('e{}b'.format(number), v, first, Fraction(1)))
    for vertex, weight, name in tails:
        flags.append(Flag(str(name), vertex, len(flags), parse_rational(weight)))
    return WGraph(profile, tuple(built_vertices), tuple(flags))


def validate(graph):
    """Return every structural violation; an empty list means valid."""
    violations = []
    n_vertices, n_flags = len(graph.vertices), len(graph.flags)
    names = [vertex.name for vertex in graph.vertices]
    if len(set(names)) != len(names):
        violations.append(Violation('duplicate-name', 'vertex names repeat'))
    names = [flag.name for flag in graph.flags]
    if len(set(names)) != len(names):
        violations.append(Violation('duplicate-name', 'flag names repeat'))
    for vertex in graph.vertices:
        if vertex.genus < 0:
            violations.append(Violation(
                'genus', 'vertex {} has negative genus'.format(vertex.name)))
        if vertex.beta.rank != graph.profile.rank:
            violations.append(Violation(
                'rank', 'vertex {} has a class of rank {}, expected {}'.format(
                    vertex.name, vertex.beta.rank, graph.profile.rank)))
    for index, flag in enumerate(graph.flags):
        if not 0 <= flag.vertex < n_vertices:
            violations.append(Violation(
                'vertex-ref', 'flag {} sits on no vertex'.format(flag.name)))
        if not 0 <= flag.partner < n_flags:
            violations.append(Violation(
                'involution', 'flag {} has no partner flag'.format(flag.name)))
            continue
        if graph.flags[flag.partner].partner != index:
            violations.append(Violation(
                'involution', 'j(j({})) is not {}'.format(flag.name, flag.name)))
        if flag.partner != index and flag.weight != 1:
            violations.append(Violation(
                'edge-flag-weight',
                'edge flag {} has weight {}'.format(flag.name, flag.weight)))
        if not 0 < flag.weight <= 1:
            violations.append(Violation(
                'weight-range',
                'flag {} has weight {}'.format(flag.name, flag.weight)))
    return violations


def check_valid(graph):
    violations = validate(graph)
    if violations:
        raise GraphException(
            'invalid-graph', '; '.join(v.detail for v in violations))
    return graph


def stats(graph):
    beta_total = graph.profile.zero_class()
    for vertex in graph.vertices:
        beta_total = beta_total + vertex.beta
    components = nx.number_connected_components(graph.nx_graph())
    n_edges = len(graph.edges())
    betti = n_edges - len(graph.vertices) + components
    euler = components - betti - sum(v.genus for v in graph.vertices)
    n_tails = len(graph.tails())
    vdim = (euler * (graph.profile.dim_v - 3)
            - graph.profile.canonical_degree(beta_total) + n_tails - n_edges)
    return GraphStats(
        beta_total=beta_total, euler=euler, genus_total=1 - euler, vdim=vdim,
        n_tails=n_tails, n_edges=n_edges, n_components=components,
        betti=betti)


def is_stable(graph):
    return all(graph.vertex_is_stable(v) for v in range(len(graph.vertices)))


def unstable_vertices(graph):
    return [v for v in range(len(graph.vertices))
            if not graph.vertex_is_stable(v)]


def is_connected(graph):
    return bool(graph.vertices) and nx.is_connected(graph.nx_graph())


def components(graph):
    """The connected components, ordered by their first vertex."""
    parts = sorted(
        (sorted(part) for part in nx.connected_components(graph.nx_graph())),
        key=lambda part: part[0])
    result = []
    for part in parts:
        draft = GraphDraft(graph)
        for vertex in range(len(graph.vertices)):
            if vertex not in part:
                draft.remove_vertex(vertex)
        result.append(draft.freeze()[0])
    return result


# Editing


class GraphDraft(object):
    """
    Mutable working copy; keys of surviving vertices and flags are their
    indices in the source graph, so ``freeze`` reports where they came from.
    """

    def __init__(self, graph):
        self.profile = graph.profile
        self.vertices = dict(enumerate(graph.vertices))
        self.flags = {
            i: [flag.name, flag.vertex, flag.partner, flag.weight]
            for i, flag in enumerate(graph.flags)}
        self._next_vertex = len(graph.vertices)
        self._next_flag = len(graph.flags)

    def fresh_name(self, prefix, taken=None):
        if taken is None:
            taken = {flag[0] for flag in self.flags.values()}
            taken.update(vertex.name for vertex in self.vertices.values())
        counter = 0
        while '{}{}'.format(prefix, counter) in taken:
            counter += 1
        return '{}{}'.format(prefix, counter)

    def add_vertex(self, name, genus, beta):
        key = self._next_vertex
        self._next_vertex += 1
        self.vertices[key] = Vertex(name, genus, beta)
        return key

    def add_flag(self, name, vertex, weight=Fraction(1), partner=None):
        key = self._next_flag
        self._next_flag += 1
        self.flags[key] = [name, vertex, key if partner is None else partner,
                           Fraction(weight)]
        return key

    def join(self, first, second):
        self.flags[first][2] = second
        self.flags[second][2] = first
        self.flags[first][3] = Fraction(1)
        self.flags[second][3] = Fraction(1)

    def make_tail(self, flag, weight=Fraction(1)):
        self.flags[flag][2] = flag
        self.flags[flag][3] = Fraction(weight)

    def is_tail(self, flag):
        return self.flags[flag][2] == flag

    def flags_at(self, vertex):
        return [key for key, flag in self.flags.items() if flag[1] == vertex]

    def vertex_of(self, flag):
        return self.flags[flag][1]

    def partner(self, flag):
        return self.flags[flag][2]

    def remove_vertex(self, vertex):
        for flag in self.flags_at(vertex):
            del self.flags[flag]
        del self.vertices[vertex]

    def is_stable_vertex(self, vertex):
        data = self.vertices[vertex]
        weights = [self.flags[f][3] for f in self.flags_at(vertex)]
        return vertex_ample(data.genus, weights, data.beta)

    def unstable(self):
        return [v for v in self.vertices if not self.is_stable_vertex(v)]

    def component_of(self, vertex):
        seen = {vertex}
        stack = [vertex]
        while stack:
            current = stack.pop()
            for flag in self.flags_at(current):
                other = self.vertex_of(self.partner(flag))
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        return seen

    def freeze(self):
        """Return ``(graph, vertex_origin, flag_origin)``."""
        vertex_keys = list(self.vertices)
        flag_keys = list(self.flags)
        vertex_position = {key: i for i, key in enumerate(vertex_keys)}
        flag_position = {key: i for i, key in enumerate(flag_keys)}
        flags = tuple(
            Flag(name, vertex_position[vertex], flag_position[partner], weight)
            for name, vertex, partner, weight in
            (self.flags[key] for key in flag_keys))
        vertices = tuple(self.vertices[key] for key in vertex_keys)
        return WGraph(self.profile, vertices, flags), vertex_keys, flag_keys


# Stabilization


def step_kind(draft, vertex):
    """Which of the three stabilization steps removes an unstable vertex."""
    edge_flags = [f for f in draft.flags_at(vertex) if not draft.is_tail(f)]
    outgoing = [f for f in edge_flags
                if draft.vertex_of(draft.partner(f)) != vertex]
    if not outgoing:
        return 1
    if len(outgoing) == 1 and len(edge_flags) == 1:
        return 2
    if len(outgoing) == 2 and len(edge_flags) == 2 \
            and all(not draft.is_tail(f) for f in draft.flags_at(vertex)):
        return 3
    raise GraphException(
        'malformed', 'vertex {} is unstable in an unexpected way'.format(
            draft.vertices[vertex].name))


def apply_step(draft, vertex):
    kind = step_kind(draft, vertex)
    name = draft.vertices[vertex].name
    flags = draft.flags_at(vertex)
    if kind == 1:
        dropped = tuple(draft.flags[f][0] for f in flags if draft.is_tail(f))
        draft.remove_vertex(vertex)
        return StabilizationStep(1, name, dropped)
    if kind == 2:
        edge = next(f for f in flags if not draft.is_tail(f))
        partner = draft.partner(edge)
        dropped = tuple(draft.flags[f][0] for f in flags if draft.is_tail(f))
        draft.remove_vertex(vertex)
        draft.make_tail(partner, 1)
        if dropped:
            logger.warning('stabilization drops tails %s with vertex %s',
                           ', '.join(dropped), name)
        return StabilizationStep(2, name, dropped, (draft.flags[partner][0],))
    first, second = (draft.partner(f) for f in flags)
    draft.remove_vertex(vertex)
    draft.join(first, second)
    return StabilizationStep(
        3, name, (), (draft.flags[first][0], draft.flags[second][0]))


def stabilize_step(graph, vertex):
    """Apply the step removing unstable ``vertex``; return the new graph."""
    if graph.vertex_is_stable(vertex):
        raise GraphException(
            'stable-vertex', 'vertex {} is stable'.format(graph.vertices[vertex].name))
    draft = GraphDraft(graph)
    step = apply_step(draft, vertex)
    return draft.freeze()[0], step


def stabilize_with_origins(graph):
    """Like :func:`stabilize`, also returning the source index of survivors."""
    draft = GraphDraft(graph)
    trace = []
    bound = len(graph.vertices) + len(graph.flags)
    while True:
        unstable = draft.unstable()
        if not unstable:
            break
        trace.append(apply_step(draft, unstable[0]))
        size = len(draft.vertices) + len(draft.flags)
        assert size < bound, 'stabilization must shrink |V| + |F|'
        bound = size
        logger.debug('stabilization step %s', trace[-1])
    result, vertex_origin, flag_origin = draft.freeze()
    return result, tuple(trace), vertex_origin, flag_origin


def stabilize(graph):
    """Return ``(stable graph, trace)``; a stable graph comes back as is."""
    if is_stable(graph):
        return graph, ()
    result, trace, _, _ = stabilize_with_origins(graph)
    return result, trace


# Contraction of edge sets


def contract_edges(graph, flags):
    """
    Collapse the edges containing ``flags``.

    Return ``(target, flag_injection, vertex_surjection)`` where
    ``flag_injection[k]`` is the source index of target flag ``k`` and
    ``vertex_surjection[v]`` the target index of source vertex ``v``.
    """
    collapsed = set()
    for flag in flags:
        if graph.is_tail(flag):
            raise GraphException(
                'not-an-edge', 'flag {} is a tail'.format(graph.flags[flag].name))
        collapsed.update((flag, graph.flags[flag].partner))
    merged = nx.MultiGraph()
    merged.add_nodes_from(range(len(graph.vertices)))
    for flag in sorted(collapsed):
        partner = graph.flags[flag].partner
        if flag < partner:
            merged.add_edge(graph.flags[flag].vertex, graph.flags[partner].vertex)
    components = sorted(
        (sorted(component) for component in nx.connected_components(merged)),
        key=lambda component: component[0])
    vertex_surjection = [None] * len(graph.vertices)
    vertices = []
    for target, component in enumerate(components):
        for vertex in component:
            vertex_surjection[vertex] = target
        inner_edges = merged.subgraph(component).number_of_edges()
        genus = sum(graph.vertices[v].genus for v in component)
        genus += inner_edges - len(component) + 1
        beta = graph.profile.zero_class()
        for vertex in component:
            beta = beta + graph.vertices[vertex].beta
        vertices.append(Vertex(graph.vertices[component[0]].name, genus, beta))
    flag_injection = [i for i in range(len(graph.flags)) if i not in collapsed]
    position = {source: target for target, source in enumerate(flag_injection)}
    new_flags = tuple(
        Flag(graph.flags[i].name, vertex_surjection[graph.flags[i].vertex],
             position[graph.flags[i].partner], graph.flags[i].weight)
        for i in flag_injection)
    target = WGraph(graph.profile, tuple(vertices), new_flags)
    return target, tuple(flag_injection), tuple(vertex_surjection)


def disjoint_union(first, second, suffix="'"):
    """
    Both graphs side by side; names of ``second`` clashing with ``first``
    get ``suffix`` appended.
    """
    if first.profile != second.profile:
        raise GraphException('mismatch', 'graphs have different target profiles')
    taken = {v.name for v in first.vertices} | {f.name for f in first.flags}

    def rename(name):
        while name in taken:
            name += suffix
        taken.add(name)
        return name

    offset_v, offset_f = len(first.vertices), len(first.flags)
    vertices = first.vertices + tuple(
        Vertex(rename(v.name), v.genus, v.beta) for v in second.vertices)
    flags = first.flags + tuple(
        Flag(rename(f.name), f.vertex + offset_v, f.partner + offset_f, f.weight)
        for f in second.flags)
    return WGraph(first.profile, vertices, flags)


# Canonical form


@dataclass(frozen=True)
class CanonicalForm:
    graph: WGraph
    vertex_map: tuple
    flag_map: tuple
    key: tuple


def _color(colors, index):
    if colors is None:
        return ''
    return repr(colors[index])


def _refine(graph, invariants):
    """Colour refinement: split vertex classes by neighbour colours."""
    def ranks(values):
        ordered = sorted(set(values))
        return [ordered.index(value) for value in values]

    colors = ranks(invariants)
    while True:
        signatures = []
        for vertex in range(len(graph.vertices)):
            around = []
            for flag in graph.flags_at(vertex):
                if graph.is_tail(flag):
                    continue
                partner = graph.flags[flag].partner
                around.append(colors[graph.flags[partner].vertex])
            signatures.append((colors[vertex], tuple(sorted(around))))
        refined = ranks(signatures)
        if len(set(refined)) == len(set(colors)):
            return colors
        colors = refined


def canonical_form(graph, vertex_colors=None, flag_colors=None, use_names=True):
    """
    Canonical representative of the isomorphism class of ``graph``.

    Isomorphisms preserve genus, class, weights, tail names (unless
    ``use_names`` is False) and the optional vertex and flag colours.
    """
    def flag_code(flag):
        return _color(flag_colors, flag)

    def tail_name(flag):
        return graph.flags[flag].name if use_names else ''

    invariants = []
    for vertex, data in enumerate(graph.vertices):
        at = graph.flags_at(vertex)
        tails = tuple(sorted(
            (tail_name(f), graph.flags[f].weight, flag_code(f))
            for f in at if graph.is_tail(f)))
        edge_flags = tuple(sorted(flag_code(f) for f in at if not graph.is_tail(f)))
        invariants.append((
            data.genus, data.beta.coords, _color(vertex_colors, vertex),
            tails, edge_flags))
    colors = _refine(graph, invariants)
    cells = [[v for v in range(len(graph.vertices)) if colors[v] == color]
             for color in sorted(set(colors))]

    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        ordering = [v for cell in choice for v in cell]
        position = {v: i for i, v in enumerate(ordering)}
        vertex_code = tuple(invariants[v][:3] for v in ordering)
        edge_code = []
        for i, j in graph.edges():
            ends = sorted([
                (position[graph.flags[i].vertex], flag_code(i)),
                (position[graph.flags[j].vertex], flag_code(j))])
            edge_code.append(tuple(ends))
        tail_code = [
            (position[graph.flags[t].vertex], tail_name(t),
             graph.flags[t].weight, flag_code(t))
            for t in graph.tails()]
        code = (vertex_code, tuple(sorted(edge_code)), tuple(sorted(tail_code)))
        if best is None or code < best[0]:
            best = (code, ordering)

    code, ordering = best if best is not None else (((), (), ()), [])
    position = {v: i for i, v in enumerate(ordering)}
    vertex_map = tuple(position[v] for v in range(len(graph.vertices)))

    oriented_edges = {}
    for i, j in graph.edges():
        first, second = (i, j)
        ends = ((vertex_map[graph.flags[i].vertex], flag_code(i)),
                (vertex_map[graph.flags[j].vertex], flag_code(j)))
        if ends[1] < ends[0]:
            first, second = j, i
            ends = (ends[1], ends[0])
        oriented_edges.setdefault(ends, []).append((first, second))
    tail_slots = {}
    for t in graph.tails():
        entry = (vertex_map[graph.flags[t].vertex], tail_name(t),
                 graph.flags[t].weight, flag_code(t))
        tail_slots.setdefault(entry, []).append(t)

    flag_map = [None] * len(graph.flags)
    order = []
    for ends in code[1]:
        first, second = oriented_edges[ends].pop(0)
        order.extend((first, second))
    for entry in code[2]:
        order.append(tail_slots[entry].pop(0))
    for new, old in enumerate(order):
        flag_map[old] = new

    vertices = tuple(
        Vertex('v{}'.format(i), graph.vertices[old].genus, graph.vertices[old].beta)
        for i, old in enumerate(ordering))
    flags = []
    tail_counter = 0
    for new, old in enumerate(order):
        flag = graph.flags[old]
        if flag.partner == old:
            name = flag.name if use_names else 't{}'.format(tail_counter)
            tail_counter += 1
        else:
            name = 'h{}'.format(new)
        flags.append(Flag(name, vertex_map[flag.vertex],
                          flag_map[flag.partner], flag.weight))
    canonical = WGraph(graph.profile, vertices, tuple(flags))
    return CanonicalForm(
        canonical, vertex_map, tuple(flag_map), (graph.profile, code))


def canonical_key(graph, **kwargs):
    return canonical_form(graph, **kwargs).key


def is_isomorphic(first, second):
    return canonical_key(first) == canonical_key(second)


# DOT


def _quote(text):
    return '"{}"'.format(str(text).replace('\\', '\\\\').replace('"', '\\"'))


def to_dot(graph, name='tau'):
    """One-way DOT rendering of |τ|; tails become plain text nodes."""
    lines = ['graph {} {{'.format(_quote(name))]
    for vertex in graph.vertices:
        label = 'g={}, β={}'.format(vertex.genus, vertex.beta)
        lines.append('  {} [label={}];'.format(_quote(vertex.name), _quote(label)))
    for i, j in graph.edges():
        lines.append('  {} -- {};'.format(
            _quote(graph.vertices[graph.flags[i].vertex].name),
            _quote(graph.vertices[graph.flags[j].vertex].name)))
    for t in graph.tails():
        flag = graph.flags[t]
        node = 'tail:{}'.format(flag.name)
        lines.append('  {} [shape=plaintext, label={}];'.format(
            _quote(node), _quote('w={}'.format(format_rational(flag.weight)))))
        lines.append('  {} -- {};'.format(
            _quote(graph.vertices[flag.vertex].name), _quote(node)))
    lines.append('}')
    return '\n'.join(lines) + '\n'
