import pytest

from django_wallcross import dimension
from django_wallcross import graphs
from django_wallcross.dimension import Insertion
from django_wallcross.graphs import make_graph
from django_wallcross.weights import CurveClass
from django_wallcross.weights import TargetProfile
from django_wallcross.weights import WeightData
from django_wallcross.weights import WeightException

P3 = TargetProfile.projective_space(3)


def weights(*values):
    return WeightData.from_values(values)


def test_lines_in_p3():
    assert dimension.vdim_moduli(0, weights(), CurveClass((1,)), P3) == 4
    assert dimension.vdim_moduli(0, weights(1, 1), CurveClass((1,)), P3) == 6


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_pointed_curves(point, n):
    assert dimension.vdim_moduli(0, weights(*[1] * n), CurveClass(()), point) == n - 3


def test_calabi_yau_genus_one():
    threefold = TargetProfile(3, (0,))
    assert dimension.vdim_moduli(1, weights(), CurveClass((1,)), threefold) == 0


def test_weights_do_not_enter(point):
    heavy = dimension.vdim_moduli(0, weights(1, 1, 1, 1), CurveClass(()), point)
    light = dimension.vdim_moduli(0, weights('1/2', '1/2', '1/2', 1), CurveClass(()), point)
    assert heavy == light == 1


def test_inadmissible(point):
    with pytest.raises(dimension.DimensionException) as excinfo:
        dimension.vdim_moduli(0, weights('1/2', '1/2'), CurveClass(()), point)
    assert excinfo.value.code == 'inadmissible'


def test_gate_passes():
    result = dimension.dimension_gate(
        0, weights(1, 1), CurveClass((1,)), P3,
        [Insertion(3, 0, '1'), Insertion(3, 0, '2')])
    assert result.passes
    assert str(result) == 'passes'


def test_gate_fails():
    result = dimension.dimension_gate(
        0, weights(1, 1), CurveClass((1,)), P3,
        [Insertion(3, 1, '1'), Insertion(3, 0, '2')])
    assert not result.passes
    assert result.deficit == 1
    assert str(result) == 'fails(+1)'


def test_gate_short_of_vdim():
    result = dimension.dimension_gate(
        0, weights(1, 1), CurveClass((1,)), P3, [Insertion(2, 0, '1')])
    assert str(result) == 'fails(-4)'


def test_gate_without_insertions(point):
    result = dimension.dimension_gate(0, weights(1, 1, 1), CurveClass(()), point, [])
    assert result.passes


def test_gate_duplicate_label():
    with pytest.raises(dimension.DimensionException) as excinfo:
        dimension.dimension_gate(
            0, weights(1, 1), CurveClass((1,)), P3,
            [Insertion(3, 0, '1'), Insertion(3, 0, 1)])
    assert excinfo.value.code == 'duplicate-label'


def test_gate_unknown_label():
    with pytest.raises(WeightException) as excinfo:
        dimension.dimension_gate(
            0, weights(1, 1), CurveClass((1,)), P3, [Insertion(3, 0, '7')])
    assert excinfo.value.code == 'unknown-label'


def test_insertion_malformed():
    with pytest.raises(dimension.DimensionException) as excinfo:
        Insertion(-1, 0, '1')
    assert excinfo.value.code == 'malformed'


def test_vdim_graph_matches_moduli(p2):
    graph = make_graph(p2, [(0, (2,))], [], [(0, 1, '1'), (0, 1, '2')])
    assert dimension.vdim_graph(graph) == dimension.vdim_moduli(
        0, weights(1, 1), CurveClass((2,)), p2)


@pytest.mark.parametrize("profile", [
    TargetProfile.point(),
    TargetProfile.projective_space(2),
    P3,
])
def test_gluing_defect_is_dim_v(profile):
    beta = (1,) if profile.rank else None
    separating = make_graph(
        profile, [(0, beta), (1, None)], [(0, 1)], [(0, 1, '1'), (1, 1, '2')])
    assert dimension.gluing_defect(separating, 'e0a') == profile.dim_v

    loop = make_graph(profile, [(1, beta)], [(0, 0)], [(0, 1, '1')])
    assert graphs.stats(loop).betti == 1
    assert dimension.gluing_defect(loop, 'e0b') == profile.dim_v
