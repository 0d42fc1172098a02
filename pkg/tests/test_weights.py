from fractions import Fraction

import pytest

from django_wallcross import weights
from django_wallcross.weights import AdmissibleData
from django_wallcross.weights import CurveClass
from django_wallcross.weights import TargetProfile
from django_wallcross.weights import WeightData


def data(*values):
    return WeightData.from_values(values)


@pytest.mark.parametrize("value,expected", [
    ("1/3", Fraction(1, 3)),
    (" 2 / 4 ", Fraction(1, 2)),
    ("1", Fraction(1)),
    (1, Fraction(1)),
    (Fraction(3, 5), Fraction(3, 5)),
])
def test_parse_rational(value, expected):
    assert weights.parse_rational(value) == expected


@pytest.mark.parametrize("value", ["0.5", "1/0", "a", 0.5, True, None])
def test_parse_rational_refused(value):
    with pytest.raises(weights.WeightException) as excinfo:
        weights.parse_rational(value)
    assert excinfo.value.code == 'bad-fraction'


def test_weight_data_range():
    with pytest.raises(weights.WeightException) as excinfo:
        data('3/2')
    assert excinfo.value.code == 'weight-range'

    with pytest.raises(weights.WeightException):
        data(0, 1)

    allowed = WeightData.from_values([0, 1], allow_zero=True)
    assert allowed.total() == 1


def test_weight_data_labels():
    w = WeightData(('a', 'b'), ('1/2', 1))
    assert w.weight('a') == Fraction(1, 2)
    assert w.index('b') == 1
    assert list(w) == ['a', 'b']
    assert str(w) == '1/2,1'

    with pytest.raises(weights.WeightException) as excinfo:
        w.weight('c')
    assert excinfo.value.code == 'unknown-label'

    with pytest.raises(weights.WeightException) as excinfo:
        WeightData(('a', 'a'), (1, 1))
    assert excinfo.value.code == 'duplicate-label'


def test_weight_data_extended():
    w = WeightData.extended(2, 3)
    assert w.labels == ('a1', 'a2', 'b1', 'b2', 'b3')
    assert w.weights == (1, 1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    assert weights.coincidence_ok(w, ['b1', 'b2', 'b3'])

    with pytest.raises(weights.WeightException) as excinfo:
        WeightData.extended(1, 3, '1/2')
    assert excinfo.value.code == 'weight-overflow'


def test_interpolate_and_dominates():
    a, b = data(1, 1), data('1/4', '1/4')
    assert a.dominates(b)
    assert not b.dominates(a)
    assert a.interpolate(b, '1/3').weights == (Fraction(1, 2), Fraction(1, 2))

    with pytest.raises(weights.WeightException) as excinfo:
        a.dominates(data(1, 1, 1))
    assert excinfo.value.code == 'incomparable'


@pytest.mark.parametrize("genus,values,beta,expected", [
    (0, (1, 1, 1), (), True),
    (0, ('1/2', '1/2'), (), False),
    (0, ('1/2', '1/2'), (1,), True),
    (1, ('1/10',), (), True),
])
def test_is_admissible(genus, values, beta, expected):
    d = AdmissibleData(genus, data(*values), CurveClass(beta))
    assert weights.is_admissible(d) is expected


@pytest.mark.parametrize("values,group,expected", [
    (('1/3', '1/3', '1/3'), ['1', '2', '3'], True),
    ((1, 1), ['1', '2'], False),
    (('2/5', '2/5', '2/5'), ['1', '3'], True),
])
def test_coincidence_ok(values, group, expected):
    assert weights.coincidence_ok(data(*values), group) is expected


def test_coincidence_ok_unknown_label():
    with pytest.raises(weights.WeightException):
        weights.coincidence_ok(data(1, 1), ['1', '7'])


@pytest.mark.parametrize("genus,flags,beta,expected", [
    (0, [1, 1, 1], (), True),
    (0, [1, Fraction(1, 2)], (), False),
    (1, [], (), False),
    (1, [Fraction(1, 100)], (), True),
    (0, [1], (1,), True),
])
def test_vertex_ample(genus, flags, beta, expected):
    assert weights.vertex_ample(genus, flags, CurveClass(beta)) is expected


def test_curve_class():
    beta = CurveClass((1, 2))
    assert beta + CurveClass((0, 1)) == CurveClass((1, 3))
    assert CurveClass((1, 0)).dominated_by(beta)
    assert beta.apply(((1, 1),)) == CurveClass((3,))
    assert beta.apply(None) is beta
    assert str(CurveClass(())) == '-'
    assert not CurveClass.zero(2)

    with pytest.raises(weights.WeightException) as excinfo:
        CurveClass((-1,))
    assert excinfo.value.code == 'negative-class'


def test_compose_matrices():
    outer = ((1, 1),)
    inner = ((1, 0), (0, 2))
    assert weights.compose_matrices(outer, inner) == ((1, 2),)
    assert weights.compose_matrices(None, inner) == inner
    assert weights.compose_matrices(outer, None) == outer


def test_target_profile():
    p3 = TargetProfile.projective_space(3)
    assert p3.kappa == (-4,)
    assert p3.canonical_degree(CurveClass((2,))) == -8
    assert TargetProfile.point().zero_class() == CurveClass(())

    with pytest.raises(weights.WeightException) as excinfo:
        p3.canonical_degree(CurveClass(()))
    assert excinfo.value.code == 'rank'


def test_compositions():
    assert list(weights.compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(weights.compositions(3, 1)) == [(3,)]


def test_class_distributions():
    found = list(weights.class_distributions(CurveClass((2,)), 2))
    assert [tuple(c.coords[0] for c in choice) for choice in found] == [
        (0, 2), (1, 1), (2, 0)]
    assert len(list(weights.class_distributions(CurveClass((1, 1)), 2))) == 4
    assert list(weights.class_distributions(CurveClass((1,)), 0)) == []
    assert list(weights.class_distributions(CurveClass(()), 3)) == [
        (CurveClass(()),) * 3]
