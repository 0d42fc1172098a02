# -*- coding: utf-8 -*-
"""
Walls Σ_I x = 1 of the weight domain and the chambers they cut out.

A point is located by its sign vector against every wall; chambers are
enumerated as the feasible strict sign vectors, each with an exact witness.
"""
import enum
import itertools
import logging
import random
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from django_wallcross import conf
from django_wallcross import linear
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import WeightData

logger = logging.getLogger(__name__)

FINE = 'fine'
COARSE = 'coarse'
KINDS = (FINE, COARSE)

POOL_SIZE = 2000
POOL_DENOMINATOR = 997


class ChamberException(WallcrossException):
    pass


class Sign(enum.IntEnum):
    BELOW = -1
    ON = 0
    ABOVE = 1

    @property
    def symbol(self):
        return {-1: '-', 0: '0', 1: '+'}[self.value]

    @classmethod
    def of(cls, total):
        if total < 1:
            return cls.BELOW
        if total > 1:
            return cls.ABOVE
        return cls.ON


def min_wall_size(kind):
    if kind not in KINDS:
        raise ChamberException('bad-kind', 'unknown wall kind {!r}'.format(kind))
    return 2 if kind == FINE else 3


def wall_subsets(n, kind=FINE):
    """Index subsets carrying a wall, by size then lexicographically."""
    smallest = min_wall_size(kind)
    return [subset
            for size in range(smallest, n + 1)
            for subset in itertools.combinations(range(n), size)]


@dataclass(frozen=True)
class Wall:
    subset: tuple
    kind: str = FINE
    witness: tuple = field(default=None, compare=False)

    def __str__(self):
        return '{' + ','.join(self.subset) + '}'


@dataclass(frozen=True)
class ChamberSignature:
    labels: tuple
    kind: str
    subsets: tuple
    signs: tuple
    witness: WeightData = field(default=None, compare=False)

    def sign(self, subset):
        wanted = tuple(sorted(subset, key=self.labels.index))
        for candidate, sign in zip(self.subsets, self.signs):
            if candidate == wanted:
                return sign
        raise ChamberException(
            'unknown-wall', 'no {} wall for {}'.format(self.kind, set(subset)))

    def is_strict(self):
        return Sign.ON not in self.signs

    def on_walls(self):
        return [subset for subset, sign in zip(self.subsets, self.signs)
                if sign == Sign.ON]

    def restrict(self, kind):
        """The signature against the walls of ``kind`` only."""
        smallest = min_wall_size(kind)
        pairs = [(s, sign) for s, sign in zip(self.subsets, self.signs)
                 if len(s) >= smallest]
        return ChamberSignature(
            self.labels, kind, tuple(s for s, _ in pairs),
            tuple(sign for _, sign in pairs), self.witness)

    @property
    def key(self):
        return ''.join(sign.symbol for sign in self.signs)

    def sort_key(self):
        return tuple(int(sign) for sign in self.signs)


def _check_positive(weights):
    if not weights.is_positive():
        raise ChamberException(
            'zero-weight', 'chambers are defined for positive weights')


def signature_of(weights, kind=FINE):
    """Classify Σ_I of every wall subset I against 1."""
    _check_positive(weights)
    labels = weights.labels
    subsets, signs = [], []
    for subset in wall_subsets(len(labels), kind):
        subsets.append(tuple(labels[i] for i in subset))
        signs.append(Sign.of(sum(weights.weights[i] for i in subset)))
    return ChamberSignature(labels, kind, tuple(subsets), tuple(signs), weights)


def same_chamber(a, b, kind=FINE):
    a.check_comparable(b)
    first, second = signature_of(a, kind), signature_of(b, kind)
    for signature, name in ((first, 'first'), (second, 'second')):
        if not signature.is_strict():
            raise ChamberException(
                'on-wall', '{} point {} lies on the walls {}'.format(
                    name, signature.witness, signature.on_walls()))
    return first.signs == second.signs


def walls_crossed(a, b, kind=FINE):
    """
    Walls met by the segment a → b, as ``(Wall, s)`` with the meeting point
    a + s·(b − a); segments lying inside a wall are not reported.
    """
    a.check_comparable(b)
    crossed = []
    for subset in wall_subsets(len(a.labels), kind):
        start = sum(a.weights[i] for i in subset) - 1
        end = sum(b.weights[i] for i in subset) - 1
        if start == end == 0 or start * end > 0:
            continue
        s = start / (start - end)
        wall = Wall(tuple(a.labels[i] for i in subset), kind)
        crossed.append((wall, s))
    crossed.sort(key=lambda pair: (pair[1], len(pair[0].subset)))
    return crossed


def wall_memberships(weights, kind=FINE):
    signature = signature_of(weights, kind)
    return [Wall(subset, kind) for subset in signature.on_walls()]


def is_fine_interior(weights):
    _check_positive(weights)
    return signature_of(weights, FINE).is_strict()


def is_small_tail(weights, label):
    """
    Sliding the weight of ``label`` to zero crosses no fine wall.
    The wall of I ∋ t is crossed iff 1 − w(t) < Σ_{I∖t} < 1.
    """
    _check_positive(weights)
    index = weights.index(label)
    if not is_fine_interior(weights):
        return False
    others = [i for i in range(len(weights.labels)) if i != index]
    for size in range(1, len(others) + 1):
        for rest in itertools.combinations(others, size):
            rest_total = sum(weights.weights[i] for i in rest)
            if rest_total + weights.weights[index] >= 1 and rest_total < 1:
                return False
    return True


# Enumeration


def _subset_constraint(n, subset, relation):
    coeffs = [0] * n
    for i in subset:
        coeffs[i] = 1
    return linear.inequality(coeffs, relation, 1)


def _domain_constraints(n, genus):
    constraints = []
    for i in range(n):
        unit = [1 if j == i else 0 for j in range(n)]
        constraints.append(linear.inequality(unit, '>', 0))
        constraints.append(linear.inequality(unit, '<=', 1))
    if genus is not None:
        constraints.append(linear.inequality([1] * n, '>', 2 - 2 * genus))
    return constraints


def _in_domain(point, genus):
    if genus is not None and sum(point) <= 2 - 2 * genus:
        return False
    return all(0 < x <= 1 for x in point)


def walls(n, kind=FINE, genus=None):
    """The walls meeting the domain, each with a witness point on it."""
    domain = _domain_constraints(n, genus)
    labels = tuple(str(i + 1) for i in range(n))
    found = []
    for subset in wall_subsets(n, kind):
        point = linear.feasible_point(
            domain + [_subset_constraint(n, subset, '=')], n, nonnegative=True)
        if point is None:
            logger.debug('wall %s is empty in the domain', subset)
            continue
        found.append(Wall(tuple(labels[i] for i in subset), kind, point))
    return found


class _WitnessPool(object):
    """Known points, indexed by every strict prefix of their sign vector."""

    def __init__(self, masks):
        self.masks = masks
        self.prefixes = {}

    def add(self, point):
        prefix = ()
        self.prefixes.setdefault(prefix, point)
        for mask in self.masks:
            sign = Sign.of(_mask_total(point, mask))
            if sign == Sign.ON:
                break
            prefix += (sign,)
            self.prefixes.setdefault(prefix, point)

    def lookup(self, prefix):
        return self.prefixes.get(tuple(prefix))


def _mask_total(point, mask):
    return sum((x for i, x in enumerate(point) if mask >> i & 1), Fraction(0))


def _reduced_system(n, masks, signs):
    """
    Only maximal BELOW sets and minimal ABOVE sets matter, weights being
    positive.
    """
    below = [m for m, s in zip(masks, signs) if s == Sign.BELOW]
    above = [m for m, s in zip(masks, signs) if s == Sign.ABOVE]
    constraints = []
    for mask in below:
        if not any(other != mask and other & mask == mask for other in below):
            constraints.append(
                _subset_constraint(n, _members(mask, n), '<'))
    for mask in above:
        if not any(other != mask and other & mask == other for other in above):
            constraints.append(
                _subset_constraint(n, _members(mask, n), '>'))
    return constraints


def _members(mask, n):
    return [i for i in range(n) if mask >> i & 1]


class _Enumeration(object):

    def __init__(self, n, kind, genus):
        self.n = n
        self.kind = kind
        self.genus = genus
        self.subsets = wall_subsets(n, kind)
        self.masks = [sum(1 << i for i in s) for s in self.subsets]
        self.position = {mask: k for k, mask in enumerate(self.masks)}
        self.domain = _domain_constraints(n, genus)
        self.backend = conf.get_feasibility_backend()
        self.pool = _WitnessPool(self.masks)
        self.lp_calls = 0
        self._seed_pool()

    def _seed_pool(self):
        generator = random.Random(self.n * 7919 + min_wall_size(self.kind))
        for _ in range(POOL_SIZE):
            point = tuple(
                Fraction(generator.randint(1, POOL_DENOMINATOR), POOL_DENOMINATOR)
                for _ in range(self.n))
            if _in_domain(point, self.genus):
                self.pool.add(point)

    def solve(self, signs):
        self.lp_calls += 1
        constraints = self.domain + _reduced_system(self.n, self.masks, signs)
        point = linear.feasible_point(
            constraints, self.n, nonnegative=True, backend=self.backend)
        if point is not None:
            self.pool.add(point)
        return point

    def root(self):
        point = self.pool.lookup(())
        if point is None:
            point = self.solve([])
        return point

    def forced_above(self, depth, signs):
        mask = self.masks[depth]
        for i in range(self.n):
            if mask >> i & 1:
                position = self.position.get(mask & ~(1 << i))
                if position is not None and signs[position] == Sign.ABOVE:
                    return True
        return False

    def children(self, depth, signs, point):
        """Feasible extensions of ``signs`` by the wall at ``depth``."""
        options = (Sign.ABOVE,) if self.forced_above(depth, signs) \
            else (Sign.BELOW, Sign.ABOVE)
        total = _mask_total(point, self.masks[depth])
        result = []
        for option in options:
            extended = signs + [option]
            if Sign.of(total) == option:
                witness = point
            else:
                witness = self.pool.lookup(extended) or self.solve(extended)
            if witness is not None:
                result.append((extended, witness))
        return result

    def walk(self, depth, signs, point):
        if depth == len(self.masks):
            return [(tuple(signs), point)]
        found = []
        for extended, witness in self.children(depth, signs, point):
            found.extend(self.walk(depth + 1, extended, witness))
        return found


def enumerate_chambers(n, kind=FINE, genus=None):
    """
    Every feasible strict signature over (0,1]^n (optionally cut by
    Σ x > 2 − 2g), with witnesses, sorted lexicographically.
    """
    bound = conf.get_max_chamber_labels()
    if n < 1:
        raise ChamberException('too-small', 'need at least one label')
    if n > bound:
        raise ChamberException(
            'too-large', '{} labels exceed the bound {}'.format(n, bound))
    min_wall_size(kind)
    enumeration = _Enumeration(n, kind, genus)
    root = enumeration.root()
    if root is None:
        return []
    if enumeration.masks:
        branches = enumeration.children(0, [], root)
        leaves = conf.parallel_map(
            lambda branch: enumeration.walk(1, *branch), branches)
        leaves = [leaf for branch in leaves for leaf in branch]
    else:
        leaves = [((), root)]

    labels = tuple(str(i + 1) for i in range(n))
    subsets = tuple(
        tuple(labels[i] for i in subset) for subset in enumeration.subsets)
    chambers = [
        ChamberSignature(labels, kind, subsets, signs,
                         WeightData(labels, point))
        for signs, point in leaves]
    chambers.sort(key=ChamberSignature.sort_key)
    logger.info('%d %s chambers for %d labels (%d feasibility checks)',
                len(chambers), kind, n, enumeration.lp_calls)
    return chambers
