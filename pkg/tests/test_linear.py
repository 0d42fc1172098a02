from fractions import Fraction

import pytest
from django.core.exceptions import ImproperlyConfigured

from django_wallcross import conf
from django_wallcross import linear

BACKENDS = [
    linear.simplex_feasible_point,
    linear.fourier_motzkin_feasible_point,
]


def check(point, constraints):
    assert point is not None
    assert all(linear.satisfies(point, c) for c in constraints)


@pytest.mark.parametrize("backend", BACKENDS)
def test_strict_square(backend):
    constraints = [
        linear.inequality([1, 0], '>', 0),
        linear.inequality([0, 1], '>', 0),
        linear.inequality([1, 0], '<=', 1),
        linear.inequality([0, 1], '<=', 1),
        linear.inequality([1, 1], '<', 1),
    ]
    check(backend(constraints, 2), constraints)


@pytest.mark.parametrize("backend", BACKENDS)
def test_equality(backend):
    constraints = [
        linear.inequality([1, 1, 1], '=', 1),
        linear.inequality([1, 0, 0], '>', Fraction(1, 2)),
        linear.inequality([0, 1, 0], '>', 0),
        linear.inequality([0, 0, 1], '>', 0),
    ]
    check(backend(constraints, 3, nonnegative=True), constraints)


@pytest.mark.parametrize("backend", BACKENDS)
def test_infeasible(backend):
    constraints = [
        linear.inequality([1, 1], '>', 1),
        linear.inequality([1, 0], '<', Fraction(1, 2)),
        linear.inequality([0, 1], '<=', Fraction(1, 2)),
    ]
    assert backend(constraints, 2, nonnegative=True) is None


@pytest.mark.parametrize("backend", BACKENDS)
def test_strictness_matters(backend):
    closed = [
        linear.inequality([1, 0], '>=', 1),
        linear.inequality([1, 0], '<=', 1),
    ]
    check(backend(closed, 2), closed)

    opened = [
        linear.inequality([1, 0], '>', 1),
        linear.inequality([1, 0], '<=', 1),
    ]
    assert backend(opened, 2) is None


@pytest.mark.parametrize("backend", BACKENDS)
def test_negative_coordinates(backend):
    constraints = [
        linear.inequality([1], '<', -3),
        linear.inequality([1], '>', -5),
    ]
    check(backend(constraints, 1), constraints)


def test_maximize():
    rows = [([1, 1], '<=', 4), ([1, 3], '<=', 6)]
    value, solution = linear.maximize(rows, [3, 2])
    assert value == 12
    assert solution == [4, 0]


def test_maximize_unbounded():
    with pytest.raises(linear.Unbounded):
        linear.maximize([([1, -1], '<=', 1)], [1, 0])


def test_unknown_relation():
    with pytest.raises(ValueError):
        linear.inequality([1], '!=', 0)


def test_feasible_point_uses_setting(settings, mocker):
    settings.WSM_FEASIBILITY_BACKEND = \
        'django_wallcross.linear.fourier_motzkin_feasible_point'
    spy = mocker.spy(linear, 'fourier_motzkin_feasible_point')
    constraints = [linear.inequality([1], '>', 0)]

    point = linear.feasible_point(constraints, 1)

    assert point is not None
    assert spy.called is True


def test_feasible_point_explicit_backend():
    backend = lambda constraints, dimension, nonnegative: (Fraction(7),)  # noqa
    assert linear.feasible_point([], 1, backend=backend) == (Fraction(7),)


def test_bad_backend_setting(settings):
    settings.WSM_FEASIBILITY_BACKEND = 'django_wallcross.linear.nothing_here'
    with pytest.raises(ImproperlyConfigured):
        conf.get_feasibility_backend()


def test_threads_setting(settings, monkeypatch):
    settings.WSM_THREADS = 3
    assert conf.get_threads() == 3

    settings.WSM_THREADS = None
    monkeypatch.setenv('WSM_THREADS', '2')
    assert conf.get_threads() == 2

    settings.WSM_THREADS = 'many'
    with pytest.raises(ImproperlyConfigured):
        conf.get_threads()


@pytest.mark.parametrize("threads", [1, 4])
def test_parallel_map_keeps_order(settings, threads):
    settings.WSM_THREADS = threads
    assert conf.parallel_map(lambda x: x * x, range(10)) == [
        x * x for x in range(10)]
