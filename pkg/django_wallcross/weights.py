# -*- coding: utf-8 -*-
import itertools
import re
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

RATIONAL_RE = re.compile(r'^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$')


class WallcrossException(Exception):
    """Base error; ``code`` is stable and printed by the commands."""

    code = 'error'

    def __init__(self, code, message=''):
        self.code = code
        super(WallcrossException, self).__init__(message or code)


class WeightException(WallcrossException):
    pass


def parse_rational(value):
    """
    Return the exact Fraction written as "p", "p/q", int or Fraction.
    Floats and decimal strings are refused.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise WeightException('bad-fraction', 'not a rational: {!r}'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise WeightException('bad-fraction', 'not a rational: {!r}'.format(value))
    match = RATIONAL_RE.match(value)
    if match is None:
        raise WeightException('bad-fraction', 'not a rational: {!r}'.format(value))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise WeightException('bad-fraction', 'zero denominator: {!r}'.format(value))
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    return str(Fraction(value))


@dataclass(frozen=True)
class CurveClass:
    """An element of the free commutative monoid N^k."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if any(c < 0 for c in coords):
            raise WeightException('negative-class', 'curve classes are non-negative')
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)

    @property
    def rank(self):
        return len(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if self.rank != other.rank:
            raise WeightException('rank', 'adding classes of different rank')
        return CurveClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def dominated_by(self, other):
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def apply(self, matrix):
        """
        Push the class through a monoid map given as a matrix with one row
        per coordinate of the result; ``None`` is the identity.
        """
        if matrix is None:
            return self
        if any(len(row) != self.rank for row in matrix):
            raise WeightException('rank', 'matrix does not match class rank')
        return CurveClass(tuple(
            sum(a * c for a, c in zip(row, self.coords)) for row in matrix))

    def __str__(self):
        return ','.join(str(c) for c in self.coords) or '-'


def curve_class(value):
    if isinstance(value, CurveClass):
        return value
    return CurveClass(tuple(value))


def compose_matrices(outer, inner):
    """Matrix of ``outer ∘ inner``; ``None`` stands for the identity."""
    if outer is None:
        return inner
    if inner is None:
        return outer
    return tuple(
        tuple(sum(outer[i][k] * inner[k][j] for k in range(len(inner)))
              for j in range(len(inner[0]) if inner else 0))
        for i in range(len(outer)))


@dataclass(frozen=True)
class TargetProfile:
    """dim V and the vector pairing classes with the canonical class."""

    dim_v: int
    kappa: tuple = ()

    def __post_init__(self):
        if self.dim_v < 0:
            raise WeightException('profile', 'dim V must be non-negative')
        object.__setattr__(self, 'kappa', tuple(int(k) for k in self.kappa))

    @classmethod
    def point(cls):
        return cls(0, ())

    @classmethod
    def projective_space(cls, n):
        return cls(n, (-(n + 1),))

    @property
    def rank(self):
        return len(self.kappa)

    def zero_class(self):
        return CurveClass.zero(self.rank)

    def canonical_degree(self, beta):
        """Return K_V·β."""
        self.check_class(beta)
        return sum(k * c for k, c in zip(self.kappa, beta.coords))

    def check_class(self, beta):
        if beta.rank != self.rank:
            raise WeightException(
                'rank', 'class {} has rank {}, profile has rank {}'.format(
                    beta, beta.rank, self.rank))


@dataclass(frozen=True)
class WeightData:
    """
    Exact weights on an ordered label set. Weights live in (0, 1]; zero
    is only accepted with ``allow_zero``.
    """

    labels: tuple
    weights: tuple
    allow_zero: bool = False
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        weights = tuple(parse_rational(w) for w in self.weights)
        if len(labels) != len(weights):
            raise WeightException('malformed', 'labels and weights differ in length')
        if len(set(labels)) != len(labels):
            raise WeightException('duplicate-label', 'labels must be distinct')
        lower = 0 if self.allow_zero else None
        for label, weight in zip(labels, weights):
            if weight > 1 or weight < 0 or (lower is None and weight == 0):
                raise WeightException(
                    'weight-range',
                    'weight {} of label {} outside {}'.format(
                        weight, label, '[0,1]' if self.allow_zero else '(0,1]'))
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(
            self, '_index', {label: i for i, label in enumerate(labels)})

    @classmethod
    def from_values(cls, values, labels=None, allow_zero=False):
        values = tuple(values)
        if labels is None:
            labels = tuple(str(i + 1) for i in range(len(values)))
        return cls(tuple(labels), values, allow_zero)

    @classmethod
    def from_mapping(cls, mapping, allow_zero=False):
        return cls(tuple(mapping), tuple(mapping.values()), allow_zero)

    @classmethod
    def extended(cls, heavy, light, epsilon=None):
        """
        ``heavy`` labels of weight 1 followed by ``light`` labels of weight
        ``epsilon`` (default 1/light) so that all light points may meet.
        """
        if epsilon is None:
            epsilon = Fraction(1, max(light, 1))
        epsilon = parse_rational(epsilon)
        if light and epsilon * light > 1:
            raise WeightException(
                'weight-overflow', 'light weights must sum to at most 1')
        labels = tuple('a{}'.format(i + 1) for i in range(heavy))
        labels += tuple('b{}'.format(i + 1) for i in range(light))
        return cls(labels, (Fraction(1),) * heavy + (epsilon,) * light)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def items(self):
        return zip(self.labels, self.weights)

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise WeightException('unknown-label', 'unknown label {!r}'.format(label))

    def weight(self, label):
        return self.weights[self.index(label)]

    def total(self, group=None):
        if group is None:
            return sum(self.weights, Fraction(0))
        return sum((self.weight(label) for label in group), Fraction(0))

    def is_positive(self):
        return all(w > 0 for w in self.weights)

    def restrict(self, labels):
        labels = tuple(labels)
        return WeightData(
            labels, tuple(self.weight(label) for label in labels), self.allow_zero)

    def replace(self, label, weight):
        weights = list(self.weights)
        weights[self.index(label)] = parse_rational(weight)
        return WeightData(self.labels, tuple(weights), self.allow_zero)

    def check_comparable(self, other):
        if self.labels != other.labels:
            raise WeightException(
                'incomparable', 'weight data on different label sets')

    def dominates(self, other):
        """Return True if every weight is at least the other's."""
        self.check_comparable(other)
        return all(a >= b for a, b in zip(self.weights, other.weights))

    def interpolate(self, other, lam):
        """Return lam·self + (1 − lam)·other."""
        self.check_comparable(other)
        lam = parse_rational(lam)
        return WeightData(
            self.labels,
            tuple(lam * a + (1 - lam) * b
                  for a, b in zip(self.weights, other.weights)),
            self.allow_zero or other.allow_zero)

    def __str__(self):
        return ','.join(format_rational(w) for w in self.weights)


@dataclass(frozen=True)
class AdmissibleData:
    genus: int
    weights: WeightData
    beta: CurveClass


def is_admissible(data):
    """Return True if β ≠ 0 or 2g − 2 + Σ weights > 0."""
    if data.beta:
        return True
    return 2 * data.genus - 2 + data.weights.total() > 0


def coincidence_ok(weights, group):
    """Return True if the sections in ``group`` are allowed to coincide."""
    return weights.total(group) <= 1


def vertex_ample(genus, flag_weights, beta):
    """
    Stability of one vertex: a nonzero class, or 2g − 2 plus the weights of
    its flags (edge flags count 1) positive.
    """
    if beta:
        return True
    return 2 * genus - 2 + sum(flag_weights, Fraction(0)) > 0


def compositions(total, parts):
    """Ordered ways of writing ``total`` as ``parts`` non-negative integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def class_distributions(beta, parts):
    """Every way of writing ``beta`` as an ordered sum of ``parts`` classes."""
    if parts < 1:
        return
    per_coordinate = [list(compositions(c, parts)) for c in beta.coords]
    for choice in itertools.product(*per_coordinate):
        yield tuple(
            CurveClass(tuple(coordinate[i] for coordinate in choice))
            for i in range(parts))
