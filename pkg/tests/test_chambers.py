import random
from fractions import Fraction

import pytest

from django_wallcross import chambers
from django_wallcross.chambers import Sign
from django_wallcross.weights import WeightData


def data(*values):
    return WeightData.from_values(values)


def sample_keys(n, count, kind=chambers.FINE, seed=0):
    generator = random.Random(seed)
    keys = set()
    for _ in range(count):
        point = data(*(Fraction(generator.randint(1, 1000), 1000) for _ in range(n)))
        signature = chambers.signature_of(point, kind)
        if signature.is_strict():
            keys.add(signature.key)
    return keys


def test_signature_all_above():
    signature = chambers.signature_of(data(1, 1, 1))
    assert set(signature.signs) == {Sign.ABOVE}
    assert signature.subsets == (('1', '2'), ('1', '3'), ('2', '3'), ('1', '2', '3'))


def test_signature_thirds():
    signature = chambers.signature_of(data('1/3', '1/3', '1/3'))
    assert signature.key == '---0'
    assert signature.on_walls() == [('1', '2', '3')]


def test_signature_mixed():
    signature = chambers.signature_of(data('1/2', '1/2', '3/4'))
    assert signature.sign(['1', '2']) == Sign.ON
    assert signature.sign(['3', '1']) == Sign.ABOVE
    assert signature.sign(['2', '3']) == Sign.ABOVE
    assert signature.sign(['1', '2', '3']) == Sign.ABOVE


def test_signature_zero_weight():
    with pytest.raises(chambers.ChamberException) as excinfo:
        chambers.signature_of(WeightData.from_values([0, 1], allow_zero=True))
    assert excinfo.value.code == 'zero-weight'


def test_signature_coarse_skips_pairs():
    signature = chambers.signature_of(data(1, 1, 1), chambers.COARSE)
    assert signature.subsets == (('1', '2', '3'),)
    with pytest.raises(chambers.ChamberException) as excinfo:
        signature.sign(['1', '2'])
    assert excinfo.value.code == 'unknown-wall'


@pytest.mark.parametrize("a,b,expected", [
    ((1, 1, 1), ('9/10', '9/10', '9/10'), True),
    ((1, 1, 1), ('2/5', '2/5', '2/5'), False),
    (('1/5', '1/4', 1), ('1/5', '1/4', 1), True),
])
def test_same_chamber(a, b, expected):
    assert chambers.same_chamber(data(*a), data(*b)) is expected


def test_same_chamber_on_wall():
    with pytest.raises(chambers.ChamberException) as excinfo:
        chambers.same_chamber(data('1/2', '1/2'), data(1, 1))
    assert excinfo.value.code == 'on-wall'


def test_same_chamber_coarse_ignores_pairs():
    assert chambers.same_chamber(
        data(1, 1, 1), data('1/2', '1/2', 1), chambers.COARSE) is True


@pytest.mark.parametrize("values,expected", [
    ((1, 1, 1), True),
    (('1/2', '1/2'), False),
    (('1/3', '1/3', '1/3'), False),
])
def test_is_fine_interior(values, expected):
    assert chambers.is_fine_interior(data(*values)) is expected


@pytest.mark.parametrize("values,label,expected", [
    ((1, 1, '1/100'), '3', True),
    (('1/2', '1/3', '1/4'), '3', False),
    (('1/5', '1/5'), '2', True),
])
def test_is_small_tail(values, label, expected):
    assert chambers.is_small_tail(data(*values), label) is expected


def test_walls_crossed():
    crossed = chambers.walls_crossed(data(1, 1, 1), data('2/5', '2/5', '2/5'))
    assert [wall.subset for wall, _ in crossed] == [('1', '2'), ('1', '3'), ('2', '3')]
    assert {s for _, s in crossed} == {Fraction(5, 6)}


def test_walls_crossed_inside_a_wall():
    assert chambers.walls_crossed(data('1/2', '1/2'), data('1/4', '3/4')) == []


def test_wall_memberships():
    walls = chambers.wall_memberships(data('1/2', '1/2', '3/4'))
    assert [wall.subset for wall in walls] == [('1', '2')]


def test_walls_have_witnesses():
    found = chambers.walls(3)
    assert [wall.subset for wall in found] == [
        ('1', '2'), ('1', '3'), ('2', '3'), ('1', '2', '3')]
    for wall in found:
        indices = [int(label) - 1 for label in wall.subset]
        assert sum(wall.witness[i] for i in indices) == 1
        assert all(0 < x <= 1 for x in wall.witness)


def test_walls_genus_domain():
    # Σ x > 2 leaves no room for any wall of three labels
    assert chambers.walls(3, genus=0) == []
    assert len(chambers.walls(3, genus=1)) == 4


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 9), (4, 96)])
def test_fine_chamber_counts(n, count):
    assert len(chambers.enumerate_chambers(n)) == count


def test_chambers_of_two_labels():
    found = chambers.enumerate_chambers(2)
    assert [c.key for c in found] == ['-', '+']


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_witnesses_lie_in_their_chamber(n):
    for chamber in chambers.enumerate_chambers(n):
        assert all(0 < w <= 1 for w in chamber.witness.weights)
        assert chambers.signature_of(chamber.witness).key == chamber.key


@pytest.mark.parametrize("n,samples", [(2, 2000), (3, 5000)])
def test_enumeration_matches_sampling(n, samples):
    found = {c.key for c in chambers.enumerate_chambers(n)}
    assert sample_keys(n, samples) == found


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumeration_equals_large_sample(n):
    found = {c.key for c in chambers.enumerate_chambers(n)}
    assert sample_keys(n, 100000) == found


@pytest.mark.slow
def test_five_labels_cover_large_sample():
    found = chambers.enumerate_chambers(5)
    assert len(found) == 2690
    assert sample_keys(5, 100000) <= {c.key for c in found}
    for chamber in found:
        assert chambers.signature_of(chamber.witness).key == chamber.key


@pytest.mark.parametrize("n", [3, 4])
def test_coarse_chambers_are_unions_of_fine(n):
    fine = chambers.enumerate_chambers(n, chambers.FINE)
    coarse = chambers.enumerate_chambers(n, chambers.COARSE)
    assert {c.restrict(chambers.COARSE).key for c in fine} == {c.key for c in coarse}


def test_coarse_three_labels():
    assert len(chambers.enumerate_chambers(3, chambers.COARSE)) == 2


def test_enumeration_with_genus():
    assert chambers.enumerate_chambers(2, genus=0) == []
    found = chambers.enumerate_chambers(3, genus=0)
    assert [c.key for c in found] == ['++++']
    assert len(chambers.enumerate_chambers(2, genus=1)) == 2


@pytest.mark.slow
def test_enumeration_backends_agree(settings):
    settings.WSM_FEASIBILITY_BACKEND = \
        'django_wallcross.linear.fourier_motzkin_feasible_point'
    with_fourier_motzkin = [c.key for c in chambers.enumerate_chambers(4)]
    settings.WSM_FEASIBILITY_BACKEND = \
        'django_wallcross.linear.simplex_feasible_point'
    assert with_fourier_motzkin == [c.key for c in chambers.enumerate_chambers(4)]


def test_enumeration_threads(settings):
    settings.WSM_THREADS = 4
    assert len(chambers.enumerate_chambers(3)) == 9


def test_enumeration_bound(settings):
    settings.WSM_MAX_CHAMBER_LABELS = 2
    with pytest.raises(chambers.ChamberException) as excinfo:
        chambers.enumerate_chambers(3)
    assert excinfo.value.code == 'too-large'


def test_enumeration_bad_kind():
    with pytest.raises(chambers.ChamberException) as excinfo:
        chambers.enumerate_chambers(2, 'medium')
    assert excinfo.value.code == 'bad-kind'
