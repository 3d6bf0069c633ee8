"""Independent exact cone-membership oracle (brute-force rational LP).

This module is the ground truth the decomposers are validated against, so it
is deliberately simple: a dense phase-1 simplex over exact arithmetic with
Bland's rule (no cycling), using fraction-free integer pivoting internally.
A membership query either returns non-negative rational coefficients that
re-sum to the target, or a separating functional that is non-negative on all
generators and negative on the target; both certificates are re-checked by
plain arithmetic before they are returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattice import CurveClass, DivisorClass
from .weyl import _orbit_vectors

MAX_DIMENSION = 10
# Desk scale with headroom for the effective-cone truncations: stabilizing a
# degree-8 target checks the exceptional orbit up to degree 13 (37480 classes).
MAX_GENERATORS = 60_000


class ScaleExceeded(ValueError):
    """The problem is beyond the desk scale this oracle is meant for."""


@dataclass(frozen=True)
class ConeProblem:
    """Is `target` a non-negative rational combination of `generators`?

    Vectors are tuples of exact rationals (plain ints are accepted) of a
    common dimension, at most MAX_DIMENSION.
    """

    target: tuple[Fraction, ...]
    generators: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        dim = len(self.target)
        if not self.generators:
            raise ValueError("at least one generator is required")
        if dim == 0:
            raise ValueError("vectors must have positive dimension")
        if dim > MAX_DIMENSION:
            raise ScaleExceeded(f"dimension {dim} exceeds {MAX_DIMENSION}")
        if len(self.generators) > MAX_GENERATORS:
            raise ScaleExceeded(f"{len(self.generators)} generators exceed {MAX_GENERATORS}")
        for vec in self.generators:
            if len(vec) != dim:
                raise ValueError("all generators must match the target dimension")
        for value in self.target:
            _check_exact(value)
        for vec in self.generators:
            for value in vec:
                _check_exact(value)


def _check_exact(value) -> None:
    if not isinstance(value, (int, Fraction)) or isinstance(value, bool):
        raise TypeError(f"exact rational entry required, got {value!r}")


@dataclass(frozen=True)
class Feasible:
    """Non-negative coefficients, one per generator, re-summing to the target."""

    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class Infeasible:
    """A functional phi with phi(g) >= 0 for every generator and phi(target) < 0."""

    functional: tuple[Fraction, ...]


def divisor_problem(target: DivisorClass, generators) -> ConeProblem:
    return ConeProblem(target.vector(), tuple(g.vector() for g in generators))


def curve_problem(target: CurveClass, generators) -> ConeProblem:
    return ConeProblem(target.vector(), tuple(g.vector() for g in generators))


def cone_member(problem: ConeProblem) -> Feasible | Infeasible:
    """Decide exact cone membership by phase-1 simplex, with a checked certificate."""
    rows = len(problem.target)
    n = len(problem.generators)

    # Scale each row to integers (positive multipliers keep the solution set),
    # then flip signs so the right-hand side is non-negative.
    multipliers: list[int] = []
    A: list[list[int]] = []
    rhs: list[int] = []
    for i in range(rows):
        scale = math.lcm(
            problem.target[i].denominator,
            *(g[i].denominator for g in problem.generators),
        )
        b = problem.target[i] * scale
        row = [int(g[i] * scale) for g in problem.generators]
        if b < 0:
            scale = -scale
            b = -b
            row = [-v for v in row]
        multipliers.append(scale)
        A.append(row)
        rhs.append(int(b))

    coefficients, dual = _phase1_simplex(A, rhs)

    if coefficients is not None:
        result = Feasible(tuple(coefficients))
        _verify_feasible(problem, result)
        return result

    assert dual is not None
    functional = tuple(-y * s for y, s in zip(dual, multipliers))
    result = Infeasible(functional)
    _verify_infeasible(problem, result)
    return result


def _phase1_simplex(A: list[list[int]], rhs: list[int]):
    """Minimize the artificial-variable sum for A x = rhs, x >= 0 (rhs >= 0).

    Returns (coefficients, None) when the problem is feasible and
    (None, dual) otherwise, where `dual` is the optimal phase-1 dual vector y
    with y^T A <= 0 componentwise and y^T rhs > 0.  The tableau is kept
    integral via fraction-free pivoting; Bland's rule guarantees termination.
    """
    rows = len(A)
    n = len(A[0]) if rows else 0
    total = n + rows
    tableau = [A[i] + [1 if j == i else 0 for j in range(rows)] + [rhs[i]] for i in range(rows)]
    # Reduced-cost row z_j - c_j for the artificial starting basis.
    z = [0] * (total + 1)
    for row in tableau:
        for j, value in enumerate(row):
            z[j] += value
    for j in range(n, total):
        z[j] -= 1
    basis = list(range(n, total))
    previous_pivot = 1

    while True:
        entering = -1
        for j in range(total):
            if z[j] > 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best_num = best_den = 0
        for i in range(rows):
            a = tableau[i][entering]
            if a > 0:
                num, den = tableau[i][total], a
                if (
                    leaving < 0
                    or num * best_den < best_num * den
                    or (num * best_den == best_num * den and basis[i] < basis[leaving])
                ):
                    leaving, best_num, best_den = i, num, den
        if leaving < 0:
            raise RuntimeError("phase-1 simplex became unbounded; this cannot happen")

        pivot = tableau[leaving][entering]
        pivot_row = tableau[leaving]
        for i in range(rows):
            if i == leaving:
                continue
            factor = tableau[i][entering]
            row = tableau[i]
            tableau[i] = [
                (pivot * row[j] - factor * pivot_row[j]) // previous_pivot
                for j in range(total + 1)
            ]
        z_factor = z[entering]
        z = [
            (pivot * z[j] - z_factor * pivot_row[j]) // previous_pivot
            for j in range(total + 1)
        ]
        basis[leaving] = entering
        previous_pivot = pivot

    infeasible = any(basis[i] >= n and tableau[i][total] != 0 for i in range(rows))
    if infeasible:
        dual = [Fraction(z[n + i], previous_pivot) + 1 for i in range(rows)]
        return None, dual
    coefficients = [Fraction(0)] * n
    for i in range(rows):
        if basis[i] < n:
            coefficients[basis[i]] = Fraction(tableau[i][total], previous_pivot)
    return coefficients, None


def _verify_feasible(problem: ConeProblem, result: Feasible) -> None:
    if len(result.coefficients) != len(problem.generators):
        raise RuntimeError("internal error: coefficient count mismatch")
    if any(c < 0 for c in result.coefficients):
        raise RuntimeError("internal error: negative coefficient in feasibility certificate")
    dim = len(problem.target)
    total = [Fraction(0)] * dim
    for coefficient, vec in zip(result.coefficients, problem.generators):
        if coefficient:
            for k in range(dim):
                total[k] += coefficient * vec[k]
    if any(total[k] != problem.target[k] for k in range(dim)):
        raise RuntimeError("internal error: feasibility certificate does not re-sum")


def _verify_infeasible(problem: ConeProblem, result: Infeasible) -> None:
    phi = result.functional
    for vec in problem.generators:
        if sum(p * v for p, v in zip(phi, vec)) < 0:
            raise RuntimeError("internal error: separating functional negative on a generator")
    if sum(p * t for p, t in zip(phi, problem.target)) >= 0:
        raise RuntimeError("internal error: separating functional non-negative on target")


# -- effective-cone membership with per-instance truncation ----------------------

_Q_VECTOR = (2,) + (1,) * 8


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of a truncated effective-cone membership query.

    ``conclusive`` is True for Feasible outcomes (the coefficients are a proof)
    and False for Infeasible ones: infeasibility is proven only against the
    truncated generator set, and stability of the verdict across the window of
    truncation degrees is evidence, not proof, for the full cone.
    """

    outcome: Feasible | Infeasible
    truncation_degree: int
    checked_degrees: tuple[int, ...]
    generator_count: int
    conclusive: bool


def effective_generators(truncation_degree: int) -> tuple[DivisorClass, ...]:
    """Orbit classes up to the truncation degree plus the half-anticanonical class."""
    vectors = _orbit_vectors(truncation_degree) + (_Q_VECTOR,)
    return tuple(DivisorClass(v[0], v[1:]) for v in vectors)


# Functionals known to be non-negative on every effective generator: the
# degree, the pairing with the half-anticanonical class, and degree minus each
# multiplicity.  They are re-verified against each truncated generator list
# before use, so a shortcut verdict carries the same guarantee as the LP's.
_CANDIDATE_FUNCTIONALS = (
    ((1,) + (0,) * 8),
    ((4,) + (-1,) * 8),
) + tuple(
    tuple((1 if k == 0 else 0) - (1 if k == i else 0) for k in range(9)) for i in range(1, 9)
)


@lru_cache(maxsize=None)
def _verified_functionals(truncation_degree: int) -> tuple[tuple[int, ...], ...]:
    vectors = _orbit_vectors(truncation_degree) + (_Q_VECTOR,)
    verified = []
    for phi in _CANDIDATE_FUNCTIONALS:
        if all(sum(p * v for p, v in zip(phi, vec)) >= 0 for vec in vectors):
            verified.append(phi)
    return tuple(verified)


def effective_membership(
    divisor: DivisorClass, *, extra_degree: int = 3, window: int = 2
) -> MembershipReport:
    """Truncated LP membership in the effective cone, stabilized over a window.

    The generator set is the exceptional orbit up to degree d + extra_degree
    plus the half-anticanonical class.  Feasibility is monotone in the
    truncation degree, so a Feasible outcome is final; an Infeasible outcome
    is re-checked at `window` further degrees and reported with
    ``conclusive=False`` (see MembershipReport).  A separating functional
    found at one degree is carried to the next and re-verified against the
    newly added generators only, so widening the window rarely needs a new LP.
    """
    target = divisor.vector()
    base = max(0, math.ceil(divisor.d)) + extra_degree
    checked: list[int] = []
    outcome: Feasible | Infeasible | None = None
    count = 0
    carried: tuple[Fraction, ...] | None = None
    carried_degree = -1
    for degree in range(base, base + window + 1):
        vectors = _orbit_vectors(degree) + (_Q_VECTOR,)
        count = len(vectors)
        checked.append(degree)
        shortcut = _separating_shortcut(target, degree)
        if shortcut is not None:
            outcome = shortcut
            continue
        if carried is not None:
            added = (v for v in _orbit_vectors(degree) if v[0] > carried_degree)
            if all(sum(p * x for p, x in zip(carried, v)) >= 0 for v in added):
                carried_degree = degree
                outcome = Infeasible(carried)
                continue
            carried = None
        outcome = cone_member(ConeProblem(target, vectors))
        if isinstance(outcome, Feasible):
            return MembershipReport(outcome, degree, tuple(checked), count, True)
        carried = outcome.functional
        carried_degree = degree
    assert isinstance(outcome, Infeasible)
    return MembershipReport(outcome, checked[-1], tuple(checked), count, False)


def _separating_shortcut(target, truncation_degree: int) -> Infeasible | None:
    for phi in _verified_functionals(truncation_degree):
        if sum(p * t for p, t in zip(phi, target)) < 0:
            return Infeasible(tuple(Fraction(p) for p in phi))
    return None
