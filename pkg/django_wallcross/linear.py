# -*- coding: utf-8 -*-
"""
Exact feasibility of systems of linear (in)equalities over the rationals.

Both engines take a list of :class:`Inequality` and a dimension and return
a rational point satisfying every constraint, or ``None``. Which engine the
chamber code uses is decided by ``WSM_FEASIBILITY_BACKEND``.
"""
import logging
import math
from collections import namedtuple
from fractions import Fraction

logger = logging.getLogger(__name__)

RELATIONS = ('<', '<=', '=', '>=', '>')

Inequality = namedtuple('Inequality', ['coeffs', 'relation', 'rhs'])


def inequality(coeffs, relation, rhs):
    if relation not in RELATIONS:
        raise ValueError('unknown relation {!r}'.format(relation))
    return Inequality(
        tuple(Fraction(c) for c in coeffs), relation, Fraction(rhs))


def satisfies(point, constraint):
    value = sum((c * x for c, x in zip(constraint.coeffs, point)), Fraction(0))
    return {
        '<': value < constraint.rhs,
        '<=': value <= constraint.rhs,
        '=': value == constraint.rhs,
        '>=': value >= constraint.rhs,
        '>': value > constraint.rhs,
    }[constraint.relation]


# Simplex


class Unbounded(Exception):
    pass


def _lcm(values):
    result = 1
    for value in values:
        result = result * value // math.gcd(result, value)
    return result


def _integral(values):
    """Scale a list of rationals to coprime-free integers."""
    values = [Fraction(v) for v in values]
    scale = _lcm(v.denominator for v in values)
    return [int(v * scale) for v in values]


def _pivot(tableau, objective, row, column, det):
    """
    Integer-preserving pivot: every entry stays an integer equal to the
    true tableau entry times the returned positive determinant.
    """
    pivot_row = tableau[row]
    pivot = pivot_row[column]
    for other in tableau:
        if other is pivot_row:
            continue
        factor = other[column]
        other[:] = [(a * pivot - factor * b) // det
                    for a, b in zip(other, pivot_row)]
    factor = objective[column]
    objective[:] = [(a * pivot - factor * b) // det
                    for a, b in zip(objective, pivot_row)]
    if pivot < 0:
        for line in tableau:
            line[:] = [-value for value in line]
        objective[:] = [-value for value in objective]
        pivot = -pivot
    return pivot


def _optimize(tableau, objective, basis, allowed, det):
    """Bland's rule on reduced costs stored in ``objective``."""
    while True:
        entering = None
        for column in allowed:
            if objective[column] < 0:
                entering = column
                break
        if entering is None:
            return det
        leaving = None
        for index, row in enumerate(tableau):
            if row[entering] <= 0:
                continue
            if leaving is None:
                leaving = index
                continue
            best = tableau[leaving]
            left = row[-1] * best[entering]
            right = best[-1] * row[entering]
            if left < right or (left == right and basis[index] < basis[leaving]):
                leaving = index
        if leaving is None:
            raise Unbounded()
        det = _pivot(tableau, objective, leaving, entering, det)
        basis[leaving] = entering


def _canonical_objective(costs, tableau, basis, width, det):
    objective = [-c * det for c in costs]
    objective += [0] * (width - len(costs) + 1)
    for index, column in enumerate(basis):
        scale = objective[column]
        if scale:
            # scale is a multiple of det: the row carries det at ``column``
            ratio = scale // det
            objective[:] = [a - ratio * b
                            for a, b in zip(objective, tableau[index])]
    return objective


def maximize(rows, costs):
    """
    Maximize ``costs · y`` over ``y ≥ 0`` subject to ``rows`` given as
    ``(coeffs, '<=' | '=', rhs)``.

    Return ``(value, y)`` with exact rationals, ``None`` when infeasible;
    raise :class:`Unbounded` when the objective is unbounded.
    """
    size = len(costs)
    slacks = [i for i, (_, kind, _) in enumerate(rows) if kind == '<=']
    needs_artificial = [
        i for i, (_, kind, rhs) in enumerate(rows) if kind == '=' or rhs < 0]
    slack_column = {row: size + k for k, row in enumerate(slacks)}
    artificial_column = {
        row: size + len(slacks) + k for k, row in enumerate(needs_artificial)}
    width = size + len(slacks) + len(needs_artificial)

    tableau = []
    basis = []
    for index, (coeffs, kind, rhs) in enumerate(rows):
        values = _integral(list(coeffs) + [rhs])
        line = values[:-1] + [0] * (width - size) + values[-1:]
        if index in slack_column:
            line[slack_column[index]] = 1
        if line[-1] < 0:
            line = [-value for value in line]
        if index in artificial_column:
            line[artificial_column[index]] = 1
            basis.append(artificial_column[index])
        else:
            basis.append(slack_column[index])
        tableau.append(line)

    det = 1
    real_columns = list(range(size + len(slacks)))
    if artificial_column:
        phase_one = [0] * width
        for column in artificial_column.values():
            phase_one[column] = -1
        objective = _canonical_objective(phase_one, tableau, basis, width, det)
        det = _optimize(tableau, objective, basis, list(range(width)), det)
        if objective[-1] < 0:
            return None
        artificial = set(artificial_column.values())
        for index, column in enumerate(basis):
            if column not in artificial:
                continue
            for candidate in real_columns:
                if tableau[index][candidate] != 0:
                    det = _pivot(tableau, objective, index, candidate, det)
                    basis[index] = candidate
                    break

    objective = _canonical_objective(_integral(costs), tableau, basis, width, det)
    det = _optimize(tableau, objective, basis, real_columns, det)
    solution = [Fraction(0)] * size
    for index, column in enumerate(basis):
        if column < size:
            solution[column] = Fraction(tableau[index][-1], det)
    value = sum((Fraction(c) * y for c, y in zip(costs, solution)), Fraction(0))
    return value, solution


def simplex_feasible_point(constraints, dimension, nonnegative=False):
    """
    Feasible point by maximizing a common margin ``t ≤ 1`` added to every
    strict constraint; strict feasibility holds iff the optimum is positive.
    """
    split = not nonnegative
    columns = 2 * dimension if split else dimension
    margin = columns

    def row_of(coeffs):
        coeffs = list(coeffs)
        if split:
            return coeffs + [-c for c in coeffs]
        return coeffs

    rows = []
    strict = False
    for constraint in constraints:
        coeffs = row_of(constraint.coeffs)
        if constraint.relation in ('>', '>='):
            coeffs = [-c for c in coeffs]
            rhs = -constraint.rhs
        else:
            rhs = constraint.rhs
        if constraint.relation == '=':
            rows.append((coeffs + [Fraction(0)], '=', rhs))
        elif constraint.relation in ('<', '>'):
            strict = True
            rows.append((coeffs + [Fraction(1)], '<=', rhs))
        else:
            rows.append((coeffs + [Fraction(0)], '<=', rhs))
    rows.append(([Fraction(0)] * columns + [Fraction(1)], '<=', Fraction(1)))
    costs = [Fraction(0)] * columns + [Fraction(1)]

    result = maximize(rows, costs)
    if result is None:
        return None
    value, solution = result
    if strict and value <= 0:
        return None
    del solution[margin:]
    if split:
        return tuple(
            solution[i] - solution[dimension + i] for i in range(dimension))
    return tuple(solution)


# Fourier-Motzkin


def _normalize(constraints, dimension, nonnegative):
    system = []
    for constraint in constraints:
        coeffs = tuple(Fraction(c) for c in constraint.coeffs)
        negated = tuple(-c for c in coeffs)
        relation, rhs = constraint.relation, Fraction(constraint.rhs)
        if relation in ('<', '<=', '='):
            system.append((coeffs, relation == '<', rhs))
        if relation in ('>', '>=', '='):
            system.append((negated, relation == '>', -rhs))
    if nonnegative:
        for index in range(dimension):
            coeffs = tuple(
                Fraction(-1) if i == index else Fraction(0)
                for i in range(dimension))
            system.append((coeffs, False, Fraction(0)))
    return system


def _prune(system):
    """
    Drop constant rows (or report a contradiction with ``None``) and keep
    only the tightest row per direction.
    """
    tightest = {}
    for coeffs, strict, rhs in system:
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        scale = abs(lead)
        key = tuple(c / scale for c in coeffs)
        rhs = rhs / scale
        known = tightest.get(key)
        if known is None or rhs < known[1] or (rhs == known[1] and strict):
            tightest[key] = (strict, rhs)
    return [(key, strict, rhs)
            for key, (strict, rhs) in sorted(tightest.items())]


def _eliminate(system, variable):
    upper, lower, rest = [], [], []
    for row in system:
        coefficient = row[0][variable]
        if coefficient > 0:
            upper.append(row)
        elif coefficient < 0:
            lower.append(row)
        else:
            rest.append(row)
    for up_coeffs, up_strict, up_rhs in upper:
        for low_coeffs, low_strict, low_rhs in lower:
            up_scale = -low_coeffs[variable]
            low_scale = up_coeffs[variable]
            coeffs = tuple(
                up_scale * a + low_scale * b
                for a, b in zip(up_coeffs, low_coeffs))
            rest.append((
                coeffs, up_strict or low_strict,
                up_scale * up_rhs + low_scale * low_rhs))
    return rest


def _pick(low, low_strict, high, high_strict):
    if low is not None and high is not None:
        if low == high:
            return low
        return (low + high) / 2
    if low is not None:
        return low + 1 if low_strict else low
    if high is not None:
        return high - 1 if high_strict else high
    return Fraction(0)


def fourier_motzkin_feasible_point(constraints, dimension, nonnegative=False):
    """Feasible point by variable elimination and back-substitution."""
    current = _prune(_normalize(constraints, dimension, nonnegative))
    stages = []
    for variable in range(dimension):
        if current is None:
            return None
        stages.append(current)
        current = _prune(_eliminate(current, variable))
    if current is None:
        return None

    point = [Fraction(0)] * dimension
    for variable in reversed(range(dimension)):
        low = high = None
        low_strict = high_strict = False
        for coeffs, strict, rhs in stages[variable]:
            coefficient = coeffs[variable]
            if coefficient == 0:
                continue
            rest = rhs - sum(
                (coeffs[j] * point[j] for j in range(variable + 1, dimension)),
                Fraction(0))
            bound = rest / coefficient
            if coefficient > 0:
                if high is None or bound < high:
                    high, high_strict = bound, strict
                elif bound == high:
                    high_strict = high_strict or strict
            else:
                if low is None or bound > low:
                    low, low_strict = bound, strict
                elif bound == low:
                    low_strict = low_strict or strict
        point[variable] = _pick(low, low_strict, high, high_strict)
    return tuple(point)


def feasible_point(constraints, dimension, nonnegative=False, backend=None):
    if backend is None:
        from django_wallcross.conf import get_feasibility_backend
        backend = get_feasibility_backend()
    point = backend(list(constraints), dimension, nonnegative=nonnegative)
    logger.debug('feasibility of %d constraints in dimension %d: %s',
                 len(constraints), dimension,
                 'feasible' if point is not None else 'infeasible')
    return point
