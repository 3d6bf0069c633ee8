"""Weyl group action on divisor classes: reflections, Cremona moves, reduction.

The group is generated by eight involutions s_0, ..., s_7.  For i >= 1 the
reflection s_i swaps the multiplicities m_i and m_{i+1}; s_0 is the lattice
action of the standard Cremona transformation centered at the first four
points.  Words are sequences of generator indices applied left to right.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .lattice import (
    EXCEPTIONALS,
    HALF_ANTICANONICAL,
    NUM_POINTS,
    DivisorClass,
    pairing,
)

WeylWord = tuple[int, ...]

DEFAULT_MAX_STEPS = 100_000

#: Reduction always sorts multiplicities descending, so a class in the orbit of
#: any exceptional divisor reduces to this one.
REDUCED_EXCEPTIONAL = EXCEPTIONALS[7]


class StepLimitExceeded(RuntimeError):
    """Raised when reduction does not reach standard form within the step cap.

    This signals that the input most likely admits no standard form at all
    (its degree diverges under Cremona moves); it is never raised for an
    effective class at any realistic cap.
    """

    def __init__(self, message: str, steps: int, last: DivisorClass):
        super().__init__(message)
        self.steps = steps
        self.last = last


def reflect(i: int, divisor: DivisorClass) -> DivisorClass:
    """Apply the simple reflection s_i(D) = D + (alpha_i, D) * alpha_i."""
    if not 0 <= i < 8:
        raise ValueError(f"generator index must be in 0..7, got {i}")
    if i == 0:
        return cremona((1, 2, 3, 4), divisor)
    m = list(divisor.m)
    m[i - 1], m[i] = m[i], m[i - 1]
    return DivisorClass(divisor.d, tuple(m))


def cremona(indices, divisor: DivisorClass) -> DivisorClass:
    """Lattice action of the Cremona transformation centered at four points.

    With t = 2d - sum_{i in I} m_i the image is (d + t; m_i + t for i in I,
    other multiplicities unchanged).  An involution for every 4-element I.
    """
    index_set = frozenset(indices)
    if len(index_set) != 4 or not all(
        isinstance(i, int) and 1 <= i <= NUM_POINTS for i in index_set
    ):
        raise ValueError(f"need four distinct point indices in 1..{NUM_POINTS}, got {indices!r}")
    t = 2 * divisor.d - sum(divisor.m[i - 1] for i in index_set)
    m = list(divisor.m)
    for i in index_set:
        m[i - 1] += t
    return DivisorClass(divisor.d + t, tuple(m))


def apply_word(word, divisor: DivisorClass) -> DivisorClass:
    """Apply a word of generator indices left to right."""
    out = divisor
    for letter in word:
        out = reflect(letter, out)
    return out


def inverse_word(word) -> WeylWord:
    """The inverse of a word: its reversal (every generator is an involution)."""
    return tuple(reversed(word))


def is_standard_form(divisor: DivisorClass) -> bool:
    """True iff m_1 >= ... >= m_8 and 2d >= m_1 + m_2 + m_3 + m_4."""
    m = divisor.m
    return all(m[i] >= m[i + 1] for i in range(NUM_POINTS - 1)) and 2 * divisor.d >= sum(m[:4])


def canonical_shape(divisor: DivisorClass) -> DivisorClass:
    """The class with the same degree and multiplicities sorted descending.

    Shapes identify permutation orbits, e.g. for comparing enumerated
    (-1)-classes against their three low-degree types.
    """
    return DivisorClass(divisor.d, tuple(sorted(divisor.m, reverse=True)))


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of reduction to standard form.

    ``apply_word(word, input) == standard`` holds exactly, and ``steps``
    counts the Cremona (s_0) applications used.
    """

    standard: DivisorClass
    word: WeylWord
    steps: int


def _sort_descending(divisor: DivisorClass, word: list[int]) -> DivisorClass:
    # Bubble sort via adjacent reflections; swaps only on strict inversion,
    # so equal multiplicities keep their order and the word is deterministic.
    m = list(divisor.m)
    while True:
        swapped = False
        for i in range(NUM_POINTS - 1):
            if m[i] < m[i + 1]:
                m[i], m[i + 1] = m[i + 1], m[i]
                word.append(i + 1)
                swapped = True
        if not swapped:
            return DivisorClass(divisor.d, tuple(m))


def to_standard_form(
    divisor: DivisorClass, max_steps: int = DEFAULT_MAX_STEPS
) -> ReductionResult:
    """Reduce a class to standard form, recording the word that achieves it.

    Loop: sort multiplicities descending by adjacent reflections, then apply
    s_0 whenever 2d < m_1 + m_2 + m_3 + m_4.  Each s_0 strictly lowers the
    degree, so any class admitting a standard form is reached; the step cap
    guards against inputs whose degree diverges (see StepLimitExceeded).
    """
    word: list[int] = []
    current = divisor
    steps = 0
    while True:
        current = _sort_descending(current, word)
        if 2 * current.d >= sum(current.m[:4]):
            return ReductionResult(current, tuple(word), steps)
        if steps >= max_steps:
            raise StepLimitExceeded(
                f"no standard form within {max_steps} Cremona steps", steps, current
            )
        current = reflect(0, current)
        word.append(0)
        steps += 1


# -- orbit enumeration --------------------------------------------------------

def _int_vector(divisor: DivisorClass) -> tuple[int, ...]:
    if not divisor.is_integral():
        raise ValueError(f"integral class required, got {divisor}")
    return (int(divisor.d), *(int(x) for x in divisor.m))


@lru_cache(maxsize=None)
def _orbit_vectors(max_degree: int) -> tuple[tuple[int, ...], ...]:
    # Breadth-first closure of the eight exceptional vectors under s_0..s_7,
    # pruning anything above the degree bound.  Pruning is complete: every
    # orbit element reduces to an exceptional class through degree
    # non-increasing moves, so the reverse path stays within the bound.
    seeds = [_int_vector(e) for e in EXCEPTIONALS]
    seen: set[tuple[int, ...]] = set(seeds)
    queue = deque(seeds)
    while queue:
        d, *m = queue.popleft()
        t = 2 * d - (m[0] + m[1] + m[2] + m[3])
        images = [(d + t, m[0] + t, m[1] + t, m[2] + t, m[3] + t, *m[4:])]
        for i in range(NUM_POINTS - 1):
            swapped = list(m)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            images.append((d, *swapped))
        for image in images:
            if image[0] <= max_degree and image not in seen:
                seen.add(image)
                queue.append(image)
    return tuple(sorted(seen))


def exceptional_orbit(max_degree: int) -> tuple[DivisorClass, ...]:
    """All Weyl images of the exceptional classes with degree at most the bound.

    Returned sorted by coefficient vector, so the enumeration is deterministic.
    A bound of 0 yields exactly the eight exceptional classes.
    """
    if not isinstance(max_degree, int) or max_degree < 0:
        raise ValueError(f"max_degree must be a non-negative integer, got {max_degree!r}")
    return tuple(DivisorClass(v[0], v[1:]) for v in _orbit_vectors(max_degree))


def orbit_degree_counts(max_degree: int) -> dict[int, int]:
    """Number of orbit classes of each exact degree up to the bound."""
    counts: dict[int, int] = {}
    for v in _orbit_vectors(max_degree):
        counts[v[0]] = counts.get(v[0], 0) + 1
    return counts


# -- the (-1)-class decision procedure ----------------------------------------

def minus_one_certificate(
    divisor: DivisorClass, max_steps: int = DEFAULT_MAX_STEPS
) -> WeylWord | None:
    """A word carrying the class to a reduced exceptional class, or None.

    Fast necessary filter first: (D, D) = -1 and (D, Q) = 1 against the
    half-anticanonical class Q.  Survivors are reduced to standard form;
    the class is a (-1)-class exactly when the standard form is the reduced
    exceptional class.  StepLimitExceeded propagates from the reduction.
    """
    if not divisor.is_integral():
        raise ValueError(f"integral class required, got {divisor}")
    if pairing(divisor, divisor) != -1 or pairing(divisor, HALF_ANTICANONICAL) != 1:
        return None
    result = to_standard_form(divisor, max_steps)
    if result.standard == REDUCED_EXCEPTIONAL:
        return result.word
    return None


def is_minus_one_divisor(divisor: DivisorClass, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Whether the class lies in the Weyl orbit of an exceptional divisor."""
    return minus_one_certificate(divisor, max_steps) is not None
