import logging
import random
from fractions import Fraction

import pytest

from django_wallcross import chambers
from django_wallcross import graphs
from django_wallcross import reduction
from django_wallcross.graphs import make_graph
from django_wallcross.weights import CurveClass
from django_wallcross.weights import WeightData


def data(*values):
    return WeightData.from_values(values)


def test_reduction_path_thirds():
    path = reduction.reduction_path(data(1, 1, 1), data('2/5', '2/5', '2/5'))
    assert path.breakpoints == (Fraction(1, 6),)
    assert path.walls_at('1/6') == (('1', '2'), ('1', '3'), ('2', '3'))


def test_reduction_path_breakpoints_are_walls():
    path = reduction.reduction_path(data(1, 1, 1), data('2/5', '2/5', '2/5'))
    at = path.weights_at(Fraction(1, 6))
    assert at.weights == (Fraction(1, 2),) * 3
    assert not chambers.is_fine_interior(at)
    for lam in (Fraction(1, 12), Fraction(7, 12)):
        assert chambers.is_fine_interior(path.weights_at(lam))


def test_reduction_path_two_labels():
    path = reduction.reduction_path(data(1, 1), data('1/4', '1/4'))
    assert path.breakpoints == (Fraction(1, 3),)


def test_reduction_path_trivial():
    path = reduction.reduction_path(data(1, 1, 1), data(1, 1, 1))
    assert path.breakpoints == ()
    assert path.factorization() == [(data(1, 1, 1), data(1, 1, 1))]


def test_reduction_path_factorization():
    a, b = data(1, 1, 1), data('2/5', '2/5', '2/5')
    steps = reduction.reduction_path(a, b).factorization()
    assert [(str(upper), str(lower)) for upper, lower in steps] == [
        ('1,1,1', '1/2,1/2,1/2'), ('1/2,1/2,1/2', '2/5,2/5,2/5')]


def test_reduction_path_incomparable():
    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.reduction_path(data('1/2', 1), data(1, '1/2'))
    assert excinfo.value.code == 'incomparable'


def test_contracted_divisors_thirds(caplog):
    caplog.set_level(logging.WARNING, logger='django_wallcross.reduction')
    divisors = reduction.contracted_divisors(data(1, 1, 1), data('1/3', '1/3', '1/3'))
    assert [str(d) for d in divisors] == [
        'D({1,2}|{3})', 'D({1,3}|{2})', 'D({2,3}|{1})', 'D({1,2,3}|{})']
    assert [d.is_exceptional for d in divisors] == [False, False, False, True]
    assert 'wall of {1,2,3}' in caplog.text


def test_contracted_divisors_none():
    assert reduction.contracted_divisors(data(1, 1, 1), data('3/5', '3/5', '3/5')) == []


def test_contracted_divisors_blowup():
    divisors = reduction.contracted_divisors(
        data(1, '2/5', '2/5', '2/5'), data(1, '3/10', '3/10', '3/10'))
    assert [(d.I, d.J) for d in divisors] == [(('2', '3', '4'), ('1',))]


@pytest.mark.parametrize("a,b,expected", [
    ((1, 1, 1), ('3/5', '3/5', '3/5'), 'isomorphism'),
    ((1, '2/5', '2/5', '2/5'), (1, '3/10', '3/10', '3/10'), 'blowup({2,3,4})'),
    ((1, 1, 1), ('1/3', '1/3', '1/3'), 'general'),
    ((1, 1, 1), ('1/2', '1/2', '1/4'), 'isomorphism'),
])
def test_classify_reduction(a, b, expected):
    assert str(reduction.classify_reduction(data(*a), data(*b))) == expected


def two_vertex(point, left, right, left_genus=0, right_genus=0):
    tails = [(0, w, n) for n, w in left] + [(1, w, n) for n, w in right]
    return make_graph(point, [(left_genus, None), (right_genus, None)], [(0, 1)], tails)


def test_reduce_same_chamber(point):
    graph = two_vertex(point, [('1', 1), ('2', 1)], [('3', 1), ('4', 1)])
    reduced = reduction.reduce_graph(graph, data('9/10', '9/10', '9/10', '9/10'))
    assert len(reduced.vertices) == 2
    assert reduced.tail_weights().weights == (Fraction(9, 10),) * 4


def test_reduce_contracts_tail_component(point):
    graph = two_vertex(point, [('1', 1), ('2', 1), ('3', 1)], [], right_genus=1)
    reduced = reduction.reduce_graph(graph, data('1/3', '1/3', '1/3'))
    assert len(reduced.vertices) == 1
    assert reduced.vertices[0].genus == 1
    assert sorted(reduced.tail_names()) == ['1', '2', '3']


def test_reduce_errors(point, tripod):
    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.reduce_graph(tripod, WeightData.from_values([1, 1], ['1', '2']))
    assert excinfo.value.code == 'mismatch'

    lighter = make_graph(point, [(0, None)], [], [(0, '1/2', '1'), (0, 1, '2'), (0, 1, '3')])
    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.reduce_graph(lighter, data(1, 1, 1))
    assert excinfo.value.code == 'weight-increase'

    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.reduce_graph(tripod, data('1/3', '1/3', '1/3'))
    assert excinfo.value.code == 'inadmissible'


SUITE = [
    lambda p: two_vertex(p, [('1', 1), ('2', 1)], [('3', 1), ('4', 1)]),
    lambda p: two_vertex(p, [('1', 1), ('2', 1), ('3', 1)], [('4', 1)], right_genus=1),
    lambda p: make_graph(
        p, [(0, None), (0, None), (0, None)], [(0, 1), (1, 2)],
        [(0, 1, '1'), (0, 1, '2'), (1, 1, '3'), (2, 1, '4'), (2, 1, '5')]),
    lambda p: make_graph(
        p, [(0, None), (0, None)], [(0, 1), (0, 1)],
        [(0, 1, '1'), (0, 1, '2'), (1, 1, '3'), (1, 1, '4')]),
]


def random_chain(generator, n):
    """a ≥ b ≥ c with c still admissible in genus 0."""
    while True:
        b = [Fraction(generator.randint(1, 6), 6) for _ in range(n)]
        c = [Fraction(generator.randint(1, int(x * 6)), 6) for x in b]
        if sum(c) > 2:
            return data(*([1] * n)), data(*b), data(*c)


@pytest.mark.parametrize("build", SUITE)
def test_reduce_composition_law(point, build):
    generator = random.Random(17)
    graph = build(point)
    for _ in range(50):
        _, b, c = random_chain(generator, len(graph.tails()))
        direct = reduction.reduce_graph(graph, c)
        stepwise = reduction.reduce_graph(reduction.reduce_graph(graph, b), c)
        assert graphs.canonical_key(direct) == graphs.canonical_key(stepwise)


def random_stable_tree(generator, profile, n):
    """A stable tree of up to four vertices carrying tails 1..n of weight 1."""
    while True:
        size = generator.randint(1, 4)
        genera = [(generator.choice([0, 0, 0, 1]), None) for _ in range(size)]
        edges = [(generator.randrange(v), v) for v in range(1, size)]
        tails = [(generator.randrange(size), 1, str(i + 1)) for i in range(n)]
        graph = make_graph(profile, genera, edges, tails)
        if graphs.is_stable(graph):
            return graph


@pytest.mark.slow
def test_reduce_composition_law_on_generated_chains(point):
    generator = random.Random(1000)
    for _ in range(1000):
        n = generator.randint(3, 6)
        graph = random_stable_tree(generator, point, n)
        _, b, c = random_chain(generator, n)
        direct = reduction.reduce_graph(graph, c)
        stepwise = reduction.reduce_graph(reduction.reduce_graph(graph, b), c)
        assert graphs.is_stable(direct)
        assert graphs.canonical_key(direct) == graphs.canonical_key(stepwise)


@pytest.mark.parametrize("a,b", [
    ((1, 1, 1), ('1/3', '1/3', '1/3')),
    ((1, '2/5', '2/5', '2/5'), (1, '3/10', '3/10', '3/10')),
    ((1, 1, 1, 1), ('1/4', '1/4', '1/2', '1/2')),
])
def test_divisor_graphs_are_contracted(point, a, b):
    a, b = data(*a), data(*b)
    for divisor in reduction.contracted_divisors(a, b):
        graph = reduction.divisor_graph(divisor, a, CurveClass(()), point, genus=1)
        assert graphs.is_stable(graph)
        reduced = reduction.reduce_graph(graph, b)
        assert len(reduced.vertices) == 1
        assert sorted(reduced.tail_names()) == sorted(a.labels)


def test_forget_small_tail(point):
    graph = make_graph(
        point, [(0, None)], [], [(0, 1, '1'), (0, 1, '2'), (0, 1, '3'), (0, '1/100', 't')])
    assert chambers.is_small_tail(graph.tail_weights(), 't')
    forgotten = reduction.forget_tail(graph, 't')
    assert len(forgotten.vertices) == 1
    assert forgotten.tail_names() == ['1', '2', '3']


def test_forget_contracts_vertex(point):
    graph = two_vertex(point, [('t', 1), ('u', 1)], [('a', 1)], right_genus=1)
    forgotten = reduction.forget_tail(graph, 't')
    assert len(forgotten.vertices) == 1
    assert sorted(forgotten.tail_names()) == ['a', 'u']


def test_forget_with_class(p2):
    graph = make_graph(p2, [(0, (1,))], [], [(0, 1, '1')])
    forgotten = reduction.forget_tail(graph, '1')
    assert forgotten.tail_names() == []
    assert graphs.is_stable(forgotten)


def test_forget_commutes(point):
    graph = two_vertex(
        point, [('1', 1), ('2', 1), ('s', '1/10')], [('3', 1), ('4', 1), ('t', '1/10')])
    first = reduction.forget_tail(reduction.forget_tail(graph, 's'), 't')
    second = reduction.forget_tail(reduction.forget_tail(graph, 't'), 's')
    assert graphs.is_isomorphic(first, second)


def test_combine_tails(point):
    graph = make_graph(
        point, [(0, None)], [], [(0, '1/3', '1'), (0, '1/3', '2'), (0, 1, '3'), (0, 1, '4')])
    combined = reduction.combine_tails(graph, ['1', '2'])
    assert combined.tail_names() == ['1+2', '3', '4']
    assert combined.flags[0].weight == Fraction(2, 3)

    single = reduction.combine_tails(graph, ['3'])
    assert single == graph


def test_combine_tails_errors(point):
    graph = two_vertex(point, [('1', '1/2'), ('2', '3/4'), ('x', 1)], [('3', 1), ('4', 1)])
    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.combine_tails(graph, ['1', '2'])
    assert excinfo.value.code == 'weight-overflow'

    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.combine_tails(graph, ['1', '3'])
    assert excinfo.value.code == 'not-one-vertex'


def test_glue(tripod):
    glued = reduction.glue(tripod, '1', tripod, '1')
    summary = graphs.stats(glued)
    assert len(glued.vertices) == 2
    assert summary.n_edges == 1
    assert summary.genus_total == 0
    assert summary.n_tails == 4


def test_self_glue(point):
    graph = make_graph(point, [(0, None)], [], [(0, 1, '1'), (0, 1, '2'), (0, 1, '3')])
    glued = reduction.self_glue(graph, '1', '2')
    assert graphs.stats(glued).genus_total == graphs.stats(graph).genus_total + 1
    assert graphs.is_stable(glued)


def test_glue_needs_weight_one(point, tripod):
    light = make_graph(point, [(0, None)], [], [(0, '1/2', 'x'), (0, 1, 'y'), (0, 1, 'z')])
    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.glue(tripod, '1', light, 'x')
    assert excinfo.value.code == 'gluing-weight'


def test_cut_then_glue(point):
    graph = two_vertex(point, [('1', 1), ('2', 1)], [('3', 1), ('4', 1)])
    cut = reduction.cut_edge(graph, 'e0a')
    assert graphs.stats(cut).n_components == 2
    assert graphs.stats(cut).euler == graphs.stats(graph).euler + 1
    assert graphs.stats(cut).genus_total == graphs.stats(graph).genus_total - 1
    assert graphs.is_isomorphic(reduction.self_glue(cut, 'e0a', 'e0b'), graph)


def test_cut_loop(point):
    graph = make_graph(point, [(0, None)], [(0, 0)], [(0, 1, '1')])
    cut = reduction.cut_edge(graph, 'e0b')
    assert graphs.stats(cut).genus_total == graphs.stats(graph).genus_total - 1


def test_cut_tail(tripod):
    with pytest.raises(reduction.ReductionException) as excinfo:
        reduction.cut_edge(tripod, '1')
    assert excinfo.value.code == 'not-an-edge'


def test_change_target(point, p2, tripod):
    graph = make_graph(
        p2, [(0, (1,)), (0, None)], [(0, 1)], [(1, 1, '1'), (1, 1, '2'), (1, 1, '3')])
    pushed = reduction.change_target(graph, (), point)
    assert pushed.profile == point
    assert graphs.is_isomorphic(pushed, tripod)
