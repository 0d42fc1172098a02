# -*- coding: utf-8 -*-
"""
Morphisms of weighted stable graphs.

A morphism τ → σ is a combinatorial morphism a: τ′ → τ followed by a
contraction φ: τ′ → σ. Composition pulls one morphism's combinatorial part
back along the other's contraction, one collapsed edge at a time.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from django_wallcross import conf
from django_wallcross.chambers import is_small_tail
from django_wallcross.graphs import GraphDraft
from django_wallcross.graphs import Vertex
from django_wallcross.graphs import Violation
from django_wallcross.graphs import WGraph
from django_wallcross.graphs import canonical_form
from django_wallcross.graphs import check_valid
from django_wallcross.graphs import contract_edges
from django_wallcross.graphs import is_stable
from django_wallcross.graphs import stabilize_with_origins
from django_wallcross.graphs import unstable_vertices
from django_wallcross.reduction import combine_tails
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import WeightData
from django_wallcross.weights import class_distributions
from django_wallcross.weights import compose_matrices
from django_wallcross.weights import vertex_ample

logger = logging.getLogger(__name__)


class MorphismException(WallcrossException):
    pass


@dataclass(frozen=True)
class CombinatorialMorphism:
    """
    ``flag_map`` and ``vertex_map`` go from source to target; ``xi`` maps
    target classes to source classes (``None`` is the identity).
    """

    source: WGraph
    target: WGraph
    flag_map: tuple
    vertex_map: tuple
    xi: tuple = None


@dataclass(frozen=True)
class Contraction:
    """``flag_map`` is F_target → F_source, ``vertex_map`` V_source → V_target."""

    source: WGraph
    target: WGraph
    flag_map: tuple
    vertex_map: tuple


@dataclass(frozen=True)
class GraphMorphism:
    comb: CombinatorialMorphism
    contraction: Contraction

    @property
    def xi(self):
        return self.comb.xi

    @property
    def middle(self):
        return self.comb.source

    @property
    def source(self):
        return self.comb.target

    @property
    def target(self):
        return self.contraction.target

    @classmethod
    def from_comb(cls, comb):
        return cls(comb, identity_contraction(comb.source))

    @classmethod
    def from_contraction(cls, contraction):
        return cls(identity_comb(contraction.source), contraction)


@dataclass(frozen=True)
class Isogeny:
    """Same shape as a contraction, but tails of the source may be dropped."""

    source: WGraph
    target: WGraph
    flag_map: tuple
    vertex_map: tuple

    @classmethod
    def from_contraction(cls, contraction):
        return cls(contraction.source, contraction.target,
                   contraction.flag_map, contraction.vertex_map)


def identity_comb(graph):
    return CombinatorialMorphism(
        graph, graph, tuple(range(len(graph.flags))),
        tuple(range(len(graph.vertices))))


def identity_contraction(graph):
    return Contraction(
        graph, graph, tuple(range(len(graph.flags))),
        tuple(range(len(graph.vertices))))


def identity_morphism(graph):
    return GraphMorphism(identity_comb(graph), identity_contraction(graph))


def identity_isogeny(graph):
    return Isogeny.from_contraction(identity_contraction(graph))


def contraction_of(graph, flags):
    """The contraction collapsing the edges containing ``flags``."""
    target, injection, surjection = contract_edges(graph, flags)
    return Contraction(graph, target, injection, surjection)


def combining_tails_morphism(graph, names, name=None):
    target = combine_tails(graph, names, name)
    indices = [graph.tail_index(n) for n in names]
    removed = set(indices[1:])
    kept = [i for i in range(len(graph.flags)) if i not in removed]
    position = {old: new for new, old in enumerate(kept)}
    flag_map = tuple(
        position[indices[0]] if i in removed else position[i]
        for i in range(len(graph.flags)))
    return CombinatorialMorphism(
        graph, target, flag_map, tuple(range(len(graph.vertices))))


def increasing_weights_morphism(graph, weights):
    """The identity maps from ``graph`` to a copy with heavier tails."""
    draft = GraphDraft(graph)
    for index in graph.tails():
        flag = graph.flags[index]
        new = weights.weight(flag.name)
        if new < flag.weight:
            raise MorphismException(
                'weight-decrease',
                'tail {} would go from {} down to {}'.format(flag.name, flag.weight, new))
        draft.flags[index][3] = new
    target = draft.freeze()[0]
    return CombinatorialMorphism(
        graph, target, tuple(range(len(graph.flags))),
        tuple(range(len(graph.vertices))))


# Validation


def _map_violations(mapping, size, bound, what):
    if len(mapping) != size:
        return [Violation('structure', '{} map has {} entries, expected {}'.format(
            what, len(mapping), size))]
    if any(not 0 <= value < bound for value in mapping):
        return [Violation('structure', '{} map leaves the target'.format(what))]
    return []


def _chain_exists(graph, start, end):
    """A path of edges from flag ``start`` to flag ``end`` through class-0 vertices."""
    if graph.is_tail(start) or graph.is_tail(end):
        return False
    seen = set()
    stack = [start]
    while stack:
        flag = stack.pop()
        if flag in seen:
            continue
        seen.add(flag)
        across = graph.flags[flag].partner
        if across == end:
            return True
        vertex = graph.flags[across].vertex
        if graph.vertices[vertex].beta:
            continue
        stack.extend(
            other for other in graph.flags_at(vertex)
            if other != across and not graph.is_tail(other))
    return False


def validate_comb(morphism):
    """List the violated conditions; an empty list means valid."""
    source, target = morphism.source, morphism.target
    violations = _map_violations(
        morphism.flag_map, len(source.flags), len(target.flags), 'flag')
    violations += _map_violations(
        morphism.vertex_map, len(source.vertices), len(target.vertices), 'vertex')
    if violations:
        return violations

    for flag, image in enumerate(morphism.flag_map):
        if morphism.vertex_map[source.flags[flag].vertex] != target.flags[image].vertex:
            violations.append(Violation(
                'condition-1', 'flag {} and its vertex map apart'.format(
                    source.flags[flag].name)))
    for vertex in range(len(source.vertices)):
        totals = {}
        for flag in source.flags_at(vertex):
            image = morphism.flag_map[flag]
            totals[image] = totals.get(image, Fraction(0)) + source.flags[flag].weight
        for image, total in sorted(totals.items()):
            if total > target.flags[image].weight:
                violations.append(Violation(
                    'condition-2', 'weight {} lands on flag {} of weight {}'.format(
                        total, target.flags[image].name, target.flags[image].weight)))
    for first, second in source.edges():
        if not _chain_exists(target, morphism.flag_map[first], morphism.flag_map[second]):
            violations.append(Violation(
                'condition-3', 'edge {}-{} does not map to a chain'.format(
                    source.flags[first].name, source.flags[second].name)))
    for vertex, data in enumerate(source.vertices):
        image = target.vertices[morphism.vertex_map[vertex]]
        try:
            pulled = image.beta.apply(morphism.xi)
        except WallcrossException:
            pulled = None
        if pulled != data.beta:
            violations.append(Violation(
                'condition-4', 'class of vertex {} is not preserved'.format(data.name)))
        if image.genus != data.genus:
            violations.append(Violation(
                'condition-5', 'genus of vertex {} is not preserved'.format(data.name)))
    return violations


def _collapse_violations(source, target, flag_map, vertex_map, codes, drop_tails):
    """
    Shared checks of contractions and isogenies: ``codes`` names the
    condition reported for structure, class, genus and weights.
    """
    violations = _map_violations(flag_map, len(target.flags), len(source.flags), 'flag')
    violations += _map_violations(
        vertex_map, len(source.vertices), len(target.vertices), 'vertex')
    if violations:
        return violations
    structure = codes['structure']
    if len(set(flag_map)) != len(flag_map):
        violations.append(Violation(structure, 'flag map is not injective'))
    if set(vertex_map) != set(range(len(target.vertices))):
        violations.append(Violation(structure, 'vertex map is not surjective'))
    image = set(flag_map)
    for flag, preimage in enumerate(flag_map):
        name = target.flags[flag].name
        if vertex_map[source.flags[preimage].vertex] != target.flags[flag].vertex:
            violations.append(Violation(structure, 'flag {} changes vertex'.format(name)))
        if flag_map[target.flags[flag].partner] != source.flags[preimage].partner:
            violations.append(Violation(structure, 'flag {} changes partner'.format(name)))
    for flag, data in enumerate(source.flags):
        if flag in image:
            continue
        if source.is_tail(flag):
            if not drop_tails:
                violations.append(Violation(
                    structure, 'tail {} is not in the image'.format(data.name)))
            continue
        partner = source.flags[data.partner]
        if data.partner in image or \
                vertex_map[data.vertex] != vertex_map[partner.vertex]:
            violations.append(Violation(
                structure, 'edge at {} is neither kept nor collapsed'.format(data.name)))

    for vertex, data in enumerate(target.vertices):
        members = [w for w in range(len(source.vertices)) if vertex_map[w] == vertex]
        if not members:
            continue
        collapsed = nx.MultiGraph()
        collapsed.add_nodes_from(members)
        for first, second in source.edges():
            if first not in image and source.flags[first].vertex in members:
                collapsed.add_edge(source.flags[first].vertex, source.flags[second].vertex)
        components = nx.number_connected_components(collapsed)
        if components != 1:
            violations.append(Violation(
                structure, 'preimage of vertex {} is not connected'.format(data.name)))
        beta = target.profile.zero_class()
        for w in members:
            beta = beta + source.vertices[w].beta
        if beta != data.beta:
            violations.append(Violation(
                codes['class'], 'classes over vertex {} do not add up'.format(data.name)))
        betti = collapsed.number_of_edges() - len(members) + components
        genus = sum(source.vertices[w].genus for w in members) + betti
        if genus != data.genus:
            violations.append(Violation(
                codes['genus'], 'genus over vertex {} is {}, expected {}'.format(
                    data.name, genus, data.genus)))
    for flag, preimage in enumerate(flag_map):
        if target.flags[flag].weight != source.flags[preimage].weight:
            violations.append(Violation(
                codes['weight'], 'weight of flag {} changes'.format(target.flags[flag].name)))
    return violations


CONTRACTION_CODES = {
    'structure': 'structure', 'class': 'condition-1',
    'genus': 'condition-2', 'weight': 'condition-3'}
ISOGENY_CODES = {
    'structure': 'condition-1', 'class': 'condition-2',
    'genus': 'condition-2', 'weight': 'condition-3'}


def validate_contraction(contraction):
    return _collapse_violations(
        contraction.source, contraction.target, contraction.flag_map,
        contraction.vertex_map, CONTRACTION_CODES, drop_tails=False)


def _forgettable(weights, dropped):
    """Some order removes ``dropped`` one small tail at a time."""
    if not dropped:
        return True
    for label in dropped:
        if not is_small_tail(weights, label):
            continue
        rest = weights.restrict(l for l in weights.labels if l != label)
        if _forgettable(rest, [d for d in dropped if d != label]):
            return True
    return False


def validate_isogeny(isogeny):
    source = isogeny.source
    violations = _collapse_violations(
        source, isogeny.target, isogeny.flag_map, isogeny.vertex_map,
        ISOGENY_CODES, drop_tails=True)
    if any(v.code == 'condition-1' for v in violations):
        return violations
    image = set(isogeny.flag_map)
    for vertex, data in enumerate(source.vertices):
        flags = source.flags_at(vertex)
        dropped = [source.flags[f].name for f in flags
                   if source.is_tail(f) and f not in image]
        if not dropped:
            continue
        # edges count as weight-1 tails once cut
        weights = WeightData(
            tuple(source.flags[f].name for f in flags),
            tuple(source.flags[f].weight if source.is_tail(f) else 1 for f in flags))
        if not _forgettable(weights, dropped):
            violations.append(Violation(
                'condition-4', 'tails {} at vertex {} are not small'.format(
                    ', '.join(dropped), data.name)))
    return violations


# Composition


def compose_comb(outer, inner):
    """``outer ∘ inner`` for inner: A → B and outer: B → C."""
    if inner.target != outer.source:
        raise MorphismException('mismatch', 'combinatorial morphisms do not compose')
    return CombinatorialMorphism(
        inner.source, outer.target,
        tuple(outer.flag_map[f] for f in inner.flag_map),
        tuple(outer.vertex_map[v] for v in inner.vertex_map),
        compose_matrices(inner.xi, outer.xi))


def compose_contractions(second, first):
    """``second ∘ first`` for first: A → B and second: B → C."""
    if first.target != second.source:
        raise MorphismException('mismatch', 'contractions do not compose')
    return Contraction(
        first.source, second.target,
        tuple(first.flag_map[f] for f in second.flag_map),
        tuple(second.vertex_map[v] for v in first.vertex_map))


def _elementary_steps(contraction, order=None):
    """
    Factor ``contraction`` into single-edge contractions followed by an
    isomorphism onto its target. Loops go first, then the lowest flag,
    unless ``order`` lists the collapsed flags explicitly.
    """
    source = contraction.source
    image = set(contraction.flag_map)
    remaining = [f for f in range(len(source.flags))
                 if f not in image and f < source.flags[f].partner]
    if order is not None:
        order = [min(f, source.flags[f].partner) for f in order]
        if sorted(set(order)) != sorted(remaining):
            raise MorphismException('malformed', 'order must list the collapsed edges')
    position = {f: f for f in range(len(source.flags))}
    vertex_position = list(range(len(source.vertices)))
    current = source
    steps = []
    while remaining:
        if order is not None:
            chosen = next(f for f in order if f in remaining)
        else:
            def rank(flag):
                x = position[flag]
                y = current.flags[x].partner
                return (current.flags[x].vertex != current.flags[y].vertex, x)
            chosen = min(remaining, key=rank)
        remaining.remove(chosen)
        step = contraction_of(current, [position[chosen]])
        steps.append(step)
        back = {old: new for new, old in enumerate(step.flag_map)}
        position = {f: back[x] for f, x in position.items() if x in back}
        vertex_position = [step.vertex_map[v] for v in vertex_position]
        current = step.target

    final_vertices = [None] * len(current.vertices)
    for vertex, at in enumerate(vertex_position):
        final_vertices[at] = contraction.vertex_map[vertex]
    steps.append(Contraction(
        current, contraction.target,
        tuple(position[f] for f in contraction.flag_map),
        tuple(final_vertices)))
    return steps


def _reattach_loop(draft, vertex, loop, flag_image):
    data = draft.vertices[vertex]
    if data.genus < 1:
        raise MorphismException(
            'malformed', 'vertex {} has no genus to give to a loop'.format(data.name))
    draft.vertices[vertex] = Vertex(data.name, data.genus - 1, data.beta)
    first = draft.add_flag(draft.fresh_name('l'), vertex)
    second = draft.add_flag(draft.fresh_name('l'), vertex)
    draft.join(first, second)
    flag_image[first], flag_image[second] = loop


def _split_vertex(draft, vertex, edge, sigma, xi, flag_image, vertex_image, parent):
    """
    Split ``vertex`` along the σ-edge ``edge`` if both halves stay stable;
    otherwise keep it whole over the stable side.
    """
    f, fbar = edge
    u1, u2 = sigma.flags[f].vertex, sigma.flags[fbar].vertex
    side = {x: sigma.flags[flag_image[x]].vertex for x in draft.flags_at(vertex)}
    halves = {}
    for u in (u1, u2):
        beta = sigma.vertices[u].beta.apply(xi)
        weights = [draft.flags[x][3] for x, s in side.items() if s == u]
        halves[u] = (sigma.vertices[u].genus, beta,
                     vertex_ample(sigma.vertices[u].genus, weights + [1], beta))
    data = draft.vertices[vertex]
    if halves[u1][2] and halves[u2][2]:
        draft.vertices[vertex] = Vertex(data.name, halves[u1][0], halves[u1][1])
        other = draft.add_vertex(
            draft.fresh_name(data.name + '_'), halves[u2][0], halves[u2][1])
        for x, s in side.items():
            if s == u2:
                draft.flags[x][1] = other
        first = draft.add_flag(draft.fresh_name('s'), vertex)
        second = draft.add_flag(draft.fresh_name('s'), other)
        draft.join(first, second)
        flag_image[first], flag_image[second] = f, fbar
        vertex_image[vertex], vertex_image[other] = u1, u2
        parent[other] = vertex
        return
    if not halves[u1][2] and not halves[u2][2]:
        raise MorphismException(
            'malformed', 'vertex {} splits into two unstable halves'.format(data.name))
    keep, edge_flag = (u1, f) if halves[u1][2] else (u2, fbar)
    logger.debug('vertex %s stays whole over %s', data.name, sigma.vertices[keep].name)
    vertex_image[vertex] = keep
    for x, s in side.items():
        if s != keep:
            flag_image[x] = edge_flag


def _pullback_step(comb, step):
    rho, sigma = comb.source, step.source
    image = set(step.flag_map)
    collapsed = sorted(f for f in range(len(sigma.flags)) if f not in image)
    preimages = {}
    for u, w in enumerate(step.vertex_map):
        preimages.setdefault(w, []).append(u)
    merged = step.vertex_map[sigma.flags[collapsed[0]].vertex] if collapsed else None

    draft = GraphDraft(rho)
    flag_image = {x: step.flag_map[comb.flag_map[x]] for x in range(len(rho.flags))}
    vertex_image = {}
    parent = {w: w for w in range(len(rho.vertices))}
    for w in range(len(rho.vertices)):
        over = comb.vertex_map[w]
        if over != merged:
            vertex_image[w] = preimages[over][0]
        elif len(preimages[over]) == 1:
            _reattach_loop(draft, w, tuple(collapsed), flag_image)
            vertex_image[w] = preimages[over][0]
        else:
            _split_vertex(draft, w, tuple(collapsed), sigma, comb.xi,
                          flag_image, vertex_image, parent)

    pi, vertex_origin, flag_origin = draft.freeze()
    position = {key: i for i, key in enumerate(flag_origin)}
    pulled = CombinatorialMorphism(
        pi, sigma,
        tuple(flag_image[key] for key in flag_origin),
        tuple(vertex_image[key] for key in vertex_origin),
        comb.xi)
    psi = Contraction(
        pi, rho,
        tuple(position[x] for x in range(len(rho.flags))),
        tuple(parent[key] for key in vertex_origin))
    return pi, psi, pulled


def stable_pullback(comb, contraction, order=None):
    """
    Pull ``comb``: ρ → τ back along ``contraction``: σ → τ.

    Return ``(π, ψ, b)`` with ψ: π → ρ a contraction and b: π → σ a
    combinatorial morphism.
    """
    if comb.target != contraction.target:
        raise MorphismException('mismatch', 'the morphisms do not share a target')
    pi, psi, pulled = comb.source, identity_contraction(comb.source), comb
    for step in reversed(_elementary_steps(contraction, order)):
        pi, step_psi, pulled = _pullback_step(pulled, step)
        psi = compose_contractions(psi, step_psi)
    return pi, psi, pulled


def compose(second, first):
    """``second ∘ first`` for first: τ → σ and second: σ → ρ."""
    if first.target != second.source:
        raise MorphismException('mismatch', 'the morphisms do not compose')
    _, psi, pulled = stable_pullback(second.comb, first.contraction)
    return GraphMorphism(
        compose_comb(first.comb, pulled),
        compose_contractions(second.contraction, psi))


def morphism_key(morphism):
    """Equal keys for morphisms that agree up to isomorphism of the middle graph."""
    middle = morphism.middle
    preimage = {x: f for f, x in enumerate(morphism.contraction.flag_map)}
    vertex_colors = [
        (morphism.comb.vertex_map[w], morphism.contraction.vertex_map[w])
        for w in range(len(middle.vertices))]
    flag_colors = [
        (morphism.comb.flag_map[x], preimage.get(x, -1))
        for x in range(len(middle.flags))]
    form = canonical_form(middle, vertex_colors, flag_colors, use_names=False)
    return (morphism.source, morphism.target, morphism.xi, form.key)


# Absolute stabilization and isogeny pullback


@dataclass(frozen=True)
class AbsoluteStabilization:
    source: WGraph
    graph: WGraph
    vertex_map: tuple
    flag_map: tuple
    trace: tuple

    @property
    def morphism(self):
        """The combinatorial morphism into ``source`` with classes forgotten."""
        return CombinatorialMorphism(
            self.graph, forget_classes(self.source), self.flag_map, self.vertex_map)


def forget_classes(graph):
    zero = graph.profile.zero_class()
    return WGraph(
        graph.profile,
        tuple(Vertex(v.name, v.genus, zero) for v in graph.vertices),
        graph.flags)


def absolute_stabilization(graph):
    check_valid(graph)
    result, trace, vertex_origin, flag_origin = stabilize_with_origins(
        forget_classes(graph))
    return AbsoluteStabilization(
        graph, result, tuple(vertex_origin), tuple(flag_origin), trace)


@dataclass(frozen=True)
class IsogenyPullback:
    graph: WGraph
    stabilization: AbsoluteStabilization
    isogeny: Isogeny


def _align(isogeny, target):
    """Re-express ``isogeny`` against the computed absolute stabilization."""
    given = canonical_form(isogeny.target)
    computed = canonical_form(target)
    if given.key != computed.key:
        raise MorphismException(
            'mismatch', 'isogeny target is not the absolute stabilization of σ')
    flag_back = {c: f for f, c in enumerate(computed.flag_map)}
    vertex_back = {c: v for v, c in enumerate(computed.vertex_map)}
    flag_map = [None] * len(target.flags)
    for flag, canonical in enumerate(given.flag_map):
        flag_map[flag_back[canonical]] = isogeny.flag_map[flag]
    vertex_map = tuple(
        vertex_back[given.vertex_map[isogeny.vertex_map[t]]]
        for t in range(len(isogeny.source.vertices)))
    return Isogeny(isogeny.source, target, tuple(flag_map), vertex_map)


class _Skeleton(object):
    """τ^s with the long edges and long tails of σ put back."""

    def __init__(self, sigma, stabilization, isogeny):
        self.sigma = sigma
        tau_s = isogeny.source
        self.draft = GraphDraft(tau_s)
        self.draft.profile = sigma.profile
        zero = sigma.profile.zero_class()
        for key, vertex in list(self.draft.vertices.items()):
            self.draft.vertices[key] = Vertex(vertex.name, vertex.genus, zero)
        self.over_vertex = {
            t: stabilization.vertex_map[isogeny.vertex_map[t]]
            for t in range(len(tau_s.vertices))}
        self.over_flag = {
            stabilization.flag_map[y]: isogeny.flag_map[y]
            for y in range(len(stabilization.graph.flags))}

    def _name(self, wanted):
        taken = {flag[0] for flag in self.draft.flags.values()}
        taken.update(vertex.name for vertex in self.draft.vertices.values())
        return wanted if wanted not in taken else self.draft.fresh_name(wanted + '_', taken)

    def _connector(self, vertex):
        data = self.sigma.vertices[vertex]
        node = self.draft.add_vertex(
            self._name(data.name), data.genus, self.sigma.profile.zero_class())
        self.over_vertex[node] = vertex
        return node

    def _flag(self, flag, node):
        data = self.sigma.flags[flag]
        if self.sigma.is_tail(flag):
            key = self.draft.add_flag(data.name, node, data.weight)
        else:
            key = self.draft.add_flag(self._name(data.name), node)
        self.over_flag[flag] = key
        return key

    def long_edge(self, start, end, previous, last):
        flag = start
        while True:
            across = self.sigma.flags[flag].partner
            if across == end:
                break
            vertex = self.sigma.flags[across].vertex
            onward = next(f for f in self.sigma.flags_at(vertex) if f != across)
            node = self._connector(vertex)
            self.draft.join(previous, self._flag(across, node))
            previous = self._flag(onward, node)
            flag = onward
        self.draft.join(previous, last)

    def long_tail(self, start, previous):
        flag = start
        while True:
            across = self.sigma.flags[flag].partner
            vertex = self.sigma.flags[across].vertex
            others = [f for f in self.sigma.flags_at(vertex) if f != across]
            node = self._connector(vertex)
            self.draft.join(previous, self._flag(across, node))
            if len(others) == 1 and not self.sigma.is_tail(others[0]):
                previous = self._flag(others[0], node)
                flag = others[0]
                continue
            for other in others:
                if not self.sigma.is_tail(other):
                    raise MorphismException(
                        'malformed', 'long tail at {} branches'.format(
                            self.sigma.vertices[vertex].name))
                self._flag(other, node)
            return


@dataclass(frozen=True)
class PullbackFrame:
    """τ^s with σ's long edges and long tails put back, classes still zero."""
    sigma: WGraph
    graph: WGraph
    flag_map: tuple
    vertex_map: tuple


def pullback_frame(sigma, isogeny):
    stabilization = absolute_stabilization(sigma)
    target = stabilization.graph
    if not target.vertices:
        raise MorphismException('unsupported', 'σ has an empty absolute stabilization')
    violations = validate_isogeny(isogeny)
    if violations:
        raise MorphismException(
            'invalid-isogeny', '; '.join(v.detail for v in violations))
    unstable = unstable_vertices(forget_classes(isogeny.source))
    if unstable:
        raise MorphismException(
            'invalid-isogeny', 'isogeny source is not absolutely stable at {}'.format(
                ', '.join(isogeny.source.vertices[v].name for v in unstable)))
    isogeny = _align(isogeny, target)

    skeleton = _Skeleton(sigma, stabilization, isogeny)
    for y, ybar in target.edges():
        start, end = stabilization.flag_map[y], stabilization.flag_map[ybar]
        if sigma.flags[start].partner != end:
            skeleton.long_edge(start, end, isogeny.flag_map[y], isogeny.flag_map[ybar])
    for y in target.tails():
        start = stabilization.flag_map[y]
        if not sigma.is_tail(start):
            skeleton.long_tail(start, isogeny.flag_map[y])

    frame, vertex_origin, flag_origin = skeleton.draft.freeze()
    missing = set(range(len(sigma.flags))) - set(skeleton.over_flag)
    if missing:
        raise MorphismException('unsupported', 'σ must be connected')
    position = {key: i for i, key in enumerate(flag_origin)}
    return PullbackFrame(
        sigma, frame,
        tuple(position[skeleton.over_flag[f]] for f in range(len(sigma.flags))),
        tuple(skeleton.over_vertex[key] for key in vertex_origin))


def v_structures(frame):
    """Every split of σ's classes over ``frame`` that leaves it stable."""
    sigma, graph = frame.sigma, frame.graph
    groups = [[w for w, u in enumerate(frame.vertex_map) if u == vertex]
              for vertex in range(len(sigma.vertices))]
    if not all(groups):
        raise MorphismException('unsupported', 'σ must be connected')

    def build(choice):
        betas = [None] * len(graph.vertices)
        for members, classes in zip(groups, choice):
            for w, beta in zip(members, classes):
                betas[w] = beta
        tau = WGraph(
            graph.profile,
            tuple(Vertex(v.name, v.genus, beta)
                  for v, beta in zip(graph.vertices, betas)),
            graph.flags)
        if not is_stable(tau):
            return None
        return IsogenyPullback(
            tau, absolute_stabilization(tau),
            Isogeny(tau, sigma, frame.flag_map, frame.vertex_map))

    choices = itertools.product(*(
        list(class_distributions(sigma.vertices[u].beta, len(members)))
        for u, members in enumerate(groups)))
    results = [r for r in conf.parallel_map(build, choices) if r is not None]
    logger.info('isogeny pullback: %d V-structures', len(results))
    return results


def cartesian_isogeny_pullback(sigma, isogeny):
    """
    Every stable τ over σ whose absolute stabilization is the source of
    ``isogeny``, with its isogeny τ → σ. The source must itself be
    absolutely stable.
    """
    return v_structures(pullback_frame(sigma, isogeny))
