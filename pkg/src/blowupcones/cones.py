"""Constructive membership and decomposition for the cones of the blowup.

Four cones are covered: the cone of curves (36 generators), the nef cone
(rational polyhedral, 228 listed generators), the effective cone (generated by
the Weyl orbit of the exceptional classes together with the half-anticanonical
class), and the movable cone (Weyl translates of a 17-generator rational
polyhedral cone).  Every positive answer comes with a certificate that re-sums
to the input by exact arithmetic, and re-summation is asserted inside the
library before a certificate is returned.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattice import (
    EXCEPTIONALS,
    H,
    HALF_ANTICANONICAL,
    NUM_POINTS,
    ROOT_SYSTEM,
    CurveClass,
    DivisorClass,
    curve_intersection,
    exceptional_line,
    line_between,
    pairing,
)
from .weyl import (
    DEFAULT_MAX_STEPS,
    ReductionResult,
    StepLimitExceeded,
    WeylWord,
    _orbit_vectors,
    _sort_descending,
    apply_word,
    inverse_word,
    is_minus_one_divisor,
    reflect,
    to_standard_form,
)

CONE_CURVES = "curves"
CONE_NEF = "nef"
CONE_EFF = "eff"
CONE_MOV = "mov"

CONE_TAGS = (CONE_CURVES, CONE_NEF, CONE_EFF, CONE_MOV)


class CertificateError(ValueError):
    """A decomposition certificate failed its arithmetic or membership check."""


class HypothesisViolated(ValueError):
    """A curve class is outside the region covered by the inductive decomposition."""

    def __init__(self, constraint: str, curve: CurveClass):
        super().__init__(f"hypothesis {constraint} violated by {curve}")
        self.constraint = constraint
        self.curve = curve


class NotNef(ValueError):
    def __init__(self, divisor: DivisorClass, witness: CurveClass):
        value = curve_intersection(divisor, witness)
        super().__init__(f"{divisor} is not nef: meets {witness} in {value}")
        self.witness = witness


class NotEffective(ValueError):
    def __init__(self, reason: str, last: DivisorClass | None = None):
        super().__init__(reason)
        self.reason = reason
        self.last = last


class NotMovable(ValueError):
    def __init__(self, reason: str, reduced: DivisorClass | None = None, word: WeylWord = ()):
        super().__init__(reason)
        self.reason = reason
        self.reduced = reduced
        self.word = word


# -- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """A non-negative decomposition over the generating set of one cone.

    ``terms`` sums exactly to ``apply_word(word, target)``; an empty word means
    the terms sum to the target itself.  Generators of effective certificates
    are either the half-anticanonical class or pass the (-1)-class test.
    """

    cone: str
    target: DivisorClass | CurveClass
    word: WeylWord
    terms: tuple[tuple[DivisorClass | CurveClass, Fraction], ...]

    def reduced_target(self):
        if isinstance(self.target, CurveClass):
            return self.target
        return apply_word(self.word, self.target)

    def resummation(self):
        total = _zero_like(self.target)
        for generator, coefficient in self.terms:
            total = total + _scale(generator, coefficient)
        return total

    def check(self) -> None:
        """Re-check the certificate by exact arithmetic; raise CertificateError."""
        if self.cone not in CONE_TAGS:
            raise CertificateError(f"unknown cone tag {self.cone!r}")
        if isinstance(self.target, CurveClass) and self.word:
            raise CertificateError("curve certificates carry no Weyl word")
        for generator, coefficient in self.terms:
            if coefficient < 0:
                raise CertificateError(f"negative coefficient {coefficient} on {generator}")
            if not _generator_allowed(self.cone, generator):
                raise CertificateError(f"{generator} is not a generator of the {self.cone} cone")
        if self.resummation() != self.reduced_target():
            raise CertificateError(
                f"terms sum to {self.resummation()}, expected {self.reduced_target()}"
            )

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "cone": self.cone,
            "input": str(self.target),
            "word": list(self.word),
            "terms": [
                {"gen": str(generator), "coeff": str(coefficient)}
                for generator, coefficient in self.terms
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        try:
            cone = data["cone"]
            parse = CurveClass.parse if cone == CONE_CURVES else DivisorClass.parse
            target = parse(data["input"])
            word = tuple(int(x) for x in data["word"])
            terms = tuple(
                (parse(item["gen"]), Fraction(item["coeff"])) for item in data["terms"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from None
        return cls(cone, target, word, terms)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed certificate: {exc}") from None
        return cls.from_dict(data)


def _zero_like(value):
    if isinstance(value, CurveClass):
        return CurveClass(0, (0,) * NUM_POINTS)
    return DivisorClass(0, (0,) * NUM_POINTS)


def _scale(generator, coefficient: Fraction):
    if isinstance(generator, CurveClass):
        if coefficient.denominator != 1:
            raise CertificateError(f"curve coefficient {coefficient} is not an integer")
        return generator * int(coefficient)
    return generator * coefficient


def _freeze_terms(terms: dict) -> tuple:
    return tuple(
        (generator, coefficient)
        for generator, coefficient in sorted(terms.items(), key=lambda kv: kv[0].vector())
        if coefficient != 0
    )


# -- generating sets -----------------------------------------------------------

def _quadric_through(indices) -> DivisorClass:
    m = [0] * NUM_POINTS
    for i in indices:
        m[i - 1] = 1
    return DivisorClass(2, tuple(m))


def _plane_through(indices) -> DivisorClass:
    m = [0] * NUM_POINTS
    for i in indices:
        m[i - 1] = 1
    return DivisorClass(1, tuple(m))


@lru_cache(maxsize=1)
def curve_generators() -> tuple[CurveClass, ...]:
    """The 36 generators of the cone of curves: e_i and the line classes h-e_i-e_j."""
    lines = tuple(
        line_between(i, j) for i, j in itertools.combinations(range(1, NUM_POINTS + 1), 2)
    )
    return tuple(exceptional_line(i) for i in range(1, NUM_POINTS + 1)) + lines


@lru_cache(maxsize=1)
def nef_generators() -> tuple[DivisorClass, ...]:
    """The 228 nef-cone generators: H, H-E_i, and quadrics through 3..8 points."""
    gens = [H]
    gens.extend(_plane_through((i,)) for i in range(1, NUM_POINTS + 1))
    for size in range(3, NUM_POINTS + 1):
        for subset in itertools.combinations(range(1, NUM_POINTS + 1), size):
            gens.append(_quadric_through(subset))
    return tuple(gens)


@lru_cache(maxsize=1)
def pi_generators() -> tuple[DivisorClass, ...]:
    """The 17 generators of the fundamental movable cone.

    H; H-E_i and H-E_i-E_j supported on the first three points; the quadrics
    L_k = (2;1^k) for 4 <= k <= 8; and M_l = (3;3,1^(l-1)) for 4 <= l <= 8.
    """
    gens = [H]
    gens.extend(_plane_through((i,)) for i in (1, 2, 3))
    gens.extend(_plane_through(pair) for pair in itertools.combinations((1, 2, 3), 2))
    gens.extend(_quadric_through(range(1, k + 1)) for k in range(4, NUM_POINTS + 1))
    for size in range(4, NUM_POINTS + 1):
        m = [0] * NUM_POINTS
        m[0] = 3
        for i in range(1, size):
            m[i] = 1
        gens.append(DivisorClass(3, tuple(m)))
    return tuple(gens)


def effective_seed() -> tuple[DivisorClass, ...]:
    """The seed generators of the effective cone; the rest come from the orbit."""
    return EXCEPTIONALS + (HALF_ANTICANONICAL,)


@dataclass(frozen=True)
class GeneratorSets:
    """The generating sets used by the membership and decomposition oracles."""

    curve_gens: tuple[CurveClass, ...]
    nef_gens: tuple[DivisorClass, ...]
    pi_gens: tuple[DivisorClass, ...]
    eff_gen_seed: tuple[DivisorClass, ...]

    @classmethod
    def standard(cls) -> "GeneratorSets":
        sets = cls(curve_generators(), nef_generators(), pi_generators(), effective_seed())
        if len(sets.nef_gens) != 228:
            raise ValueError(f"nef generator count {len(sets.nef_gens)}, want 228")
        for curve in sets.curve_gens:
            if curve_intersection(H, curve) < 0:
                raise ValueError(f"curve generator {curve} meets H negatively")
        for generator in sets.pi_gens:
            if not is_nef(generator)[0]:
                movable_decompose(generator)
        return sets


@lru_cache(maxsize=1)
def _nef_certificate_generators() -> frozenset[DivisorClass]:
    # The decomposition formula also emits quadrics through exactly two points;
    # each equals (H-E_i) + (H-E_j), so the generated cone is unchanged.
    extra = (
        _quadric_through(pair) for pair in itertools.combinations(range(1, NUM_POINTS + 1), 2)
    )
    return frozenset(nef_generators()) | frozenset(extra)


def _generator_allowed(cone: str, generator) -> bool:
    if cone == CONE_CURVES:
        return isinstance(generator, CurveClass) and generator in frozenset(curve_generators())
    if not isinstance(generator, DivisorClass):
        return False
    if cone == CONE_NEF:
        return generator in _nef_certificate_generators()
    if cone == CONE_MOV:
        return generator in frozenset(pi_generators())
    if cone == CONE_EFF:
        return generator == HALF_ANTICANONICAL or is_minus_one_divisor(generator)
    return False


# -- cone of curves -------------------------------------------------------------

def curve_decompose(curve: CurveClass) -> Certificate:
    """Write a curve class as a non-negative sum of the 36 curve generators.

    Implements the induction on the line degree a: with multiplicities
    b_i = -c_i, while at least two are positive subtract the line through the
    two largest; the remaining cases are finished directly.  Requires
    0 <= b_i <= a and 2a >= sum b_i (with pure e_i combinations when a = 0);
    anything else raises HypothesisViolated.
    """
    terms: dict[CurveClass, Fraction] = {}

    def add(generator: CurveClass, coefficient: int) -> None:
        if coefficient:
            terms[generator] = terms.get(generator, Fraction(0)) + coefficient

    current = curve
    while True:
        a = current.a
        b = current.multiplicities()
        if a < 0:
            raise HypothesisViolated("a >= 0", curve)
        if a == 0:
            if any(x > 0 for x in b):
                raise HypothesisViolated("a >= b_i", curve)
            for i, coefficient in enumerate(current.c):
                add(exceptional_line(i + 1), coefficient)
            break
        if any(x < 0 for x in b):
            raise HypothesisViolated("b_i >= 0", curve)
        if any(x > a for x in b):
            raise HypothesisViolated("a >= b_i", curve)
        if 2 * a < sum(b):
            raise HypothesisViolated("2a >= sum(b_i)", curve)
        positive = [i for i in range(NUM_POINTS) if b[i] > 0]
        if len(positive) >= 2:
            i1, i2 = sorted(positive, key=lambda i: (-b[i], i))[:2]
            line = line_between(i1 + 1, i2 + 1)
            add(line, 1)
            current = current - line
        elif len(positive) == 1:
            i1 = positive[0]
            k = 0 if i1 != 0 else 1
            add(exceptional_line(i1 + 1), a - b[i1])
            add(exceptional_line(k + 1), a)
            add(line_between(i1 + 1, k + 1), a)
            break
        else:
            add(exceptional_line(1), a)
            add(exceptional_line(2), a)
            add(line_between(1, 2), a)
            break

    certificate = Certificate(CONE_CURVES, curve, (), _freeze_terms(terms))
    certificate.check()
    return certificate


# -- nef cone --------------------------------------------------------------------

def is_nef(divisor: DivisorClass) -> tuple[bool, CurveClass | None]:
    """Whether the class meets all 36 curve generators non-negatively.

    Returns (True, None) or (False, witness) where the witness is the first
    generator met negatively.
    """
    for generator in curve_generators():
        if curve_intersection(divisor, generator) < 0:
            return False, generator
    return True, None


def nef_decompose(divisor: DivisorClass) -> Certificate:
    """Write a nef class over H, H-E_i and quadrics through >= 2 points.

    After ordering the multiplicities descending the class equals
    (d-m1-m2)*H + (m1-m2)*(H-E_{i1}) + sum_k (m_k - m_{k+1}) * (2; 1 at the k
    largest positions); the permutation is folded back into the generator
    index sets, so the terms sum to the input itself.
    """
    ok, witness = is_nef(divisor)
    if not ok:
        assert witness is not None
        raise NotNef(divisor, witness)
    order = sorted(range(NUM_POINTS), key=lambda i: (-divisor.m[i], i))
    sorted_m = [divisor.m[i] for i in order] + [Fraction(0)]

    terms: dict[DivisorClass, Fraction] = {}

    def add(generator: DivisorClass, coefficient: Fraction) -> None:
        if coefficient:
            terms[generator] = terms.get(generator, Fraction(0)) + coefficient

    add(H, divisor.d - sorted_m[0] - sorted_m[1])
    add(_plane_through((order[0] + 1,)), sorted_m[0] - sorted_m[1])
    for k in range(2, NUM_POINTS + 1):
        indices = tuple(order[i] + 1 for i in range(k))
        add(_quadric_through(indices), sorted_m[k - 1] - sorted_m[k])

    certificate = Certificate(CONE_NEF, divisor, (), _freeze_terms(terms))
    certificate.check()
    return certificate


# -- reduction with a degree floor ------------------------------------------------

class _DegreeWentNegative(Exception):
    def __init__(self, last: DivisorClass, word: WeylWord):
        self.last = last
        self.word = word


def _reduce_nonnegative(divisor: DivisorClass, max_steps: int) -> ReductionResult:
    """Reduce to standard form, failing fast once the degree drops below zero.

    Weyl moves preserve effectivity and effective classes have non-negative
    degree, so a negative degree anywhere along the reduction certifies that
    the input is outside the effective cone.  The floor also bounds the loop:
    integral inputs admit at most d+1 Cremona moves before tripping it.
    """
    word: list[int] = []
    current = divisor
    steps = 0
    while True:
        if current.d < 0:
            raise _DegreeWentNegative(current, tuple(word))
        current = _sort_descending(current, word)
        if 2 * current.d >= sum(current.m[:4]):
            return ReductionResult(current, tuple(word), steps)
        if steps >= max_steps:
            raise NotEffective(f"reduction exceeded {max_steps} Cremona steps", current)
        current = reflect(0, current)
        word.append(0)
        steps += 1


# -- effective cone ----------------------------------------------------------------

def effective_decompose(
    divisor: DivisorClass, max_steps: int = DEFAULT_MAX_STEPS
) -> Certificate:
    """Write an effective class over the exceptional orbit and -K/2.

    Pipeline: reduce to standard form while splitting off exceptional
    components for negative multiplicities; reject when the degree turns
    negative or a multiplicity exceeds the degree (both are supporting
    half-spaces of the effective cone).  Then peel (3;3,1^(a-1)) pieces while
    d < m1+m4, split off quadrics through the k largest points, and expand
    what remains over planes and exceptional classes.  Every generator of the
    result is pulled back to the input frame, so the terms sum to the input.
    """
    if not divisor.is_integral():
        raise ValueError(f"integral class required, got {divisor}")

    terms: dict[DivisorClass, Fraction] = {}
    word_acc: list[int] = []

    def pull(generator: DivisorClass) -> DivisorClass:
        return apply_word(inverse_word(word_acc), generator)

    def add(generator: DivisorClass, coefficient) -> None:
        coefficient = Fraction(coefficient)
        if coefficient:
            pulled = pull(generator)
            terms[pulled] = terms.get(pulled, Fraction(0)) + coefficient

    current = divisor
    while True:
        try:
            result = _reduce_nonnegative(current, max_steps)
        except _DegreeWentNegative as floor:
            raise NotEffective(
                f"degree became negative under reduction (reached {floor.last})",
                floor.last,
            ) from None
        word_acc.extend(result.word)
        current = result.standard
        negatives = [i for i in range(NUM_POINTS) if current.m[i] < 0]
        if not negatives:
            break
        for i in negatives:
            add(EXCEPTIONALS[i], -current.m[i])
        current = DivisorClass(
            current.d,
            tuple(Fraction(0) if i in negatives else x for i, x in enumerate(current.m)),
        )

    if current.m[0] > current.d:
        raise NotEffective(
            f"multiplicity exceeds degree in standard form ({current}); "
            "every effective class satisfies m_i <= d",
            current,
        )

    current = _peel_cubics(current, add)
    _expand_standard(current, add)

    certificate = Certificate(CONE_EFF, divisor, (), _freeze_terms(terms))
    certificate.check()
    return certificate


#: (2; 2,1,1,1,1,1,0,0), the degree-2 shape of the exceptional orbit.
_DOUBLE_QUADRIC = DivisorClass(2, (2, 1, 1, 1, 1, 1, 0, 0))
#: (1; 1,0,0,0,0,0,1,1), the plane completing (3;3,1^7) with the quadric above.
_CUBIC_COMPLEMENT = DivisorClass(1, (1, 0, 0, 0, 0, 0, 1, 1))


def _peel_cubics(current: DivisorClass, add) -> DivisorClass:
    # While d < m1 + m4, subtract (3;3,1^(a-1)) with a the last non-zero
    # position; the difference stays in standard form with 0 <= m_i <= d and
    # the defect m1 + m4 - d drops by one each round.
    while current.d < current.m[0] + current.m[3]:
        a = max(i + 1 for i in range(NUM_POINTS) if current.m[i] != 0)
        assert a >= 4
        add(_DOUBLE_QUADRIC, 1)
        add(_CUBIC_COMPLEMENT, 1)
        for i in range(a, NUM_POINTS):
            add(EXCEPTIONALS[i], 1)
        m = list(current.m)
        m[0] -= 3
        for i in range(1, a):
            m[i] -= 1
        current = DivisorClass(current.d - 3, tuple(m))
    return current


def _expand_standard(current: DivisorClass, add) -> None:
    # Standard form with d >= m1 + m4 and 0 <= m_i <= d splits as
    # D' + sum_{k=4..8} (m_k - m_{k+1}) * (2;1^k) with
    # D' = (d - 2*m4; m1-m4, m2-m4, m3-m4), and D' expands over the plane
    # through the first three points and exceptional classes.
    m = list(current.m) + [Fraction(0)]
    m4 = m[3]
    add(_plane_through((1, 2, 3)), current.d - 2 * m4)
    for i in range(3):
        add(EXCEPTIONALS[i], current.d - m4 - m[i])
    for k in range(4, NUM_POINTS + 1):
        coefficient = m[k - 1] - m[k]
        if not coefficient:
            continue
        if k == 8:
            add(HALF_ANTICANONICAL, coefficient)
        elif k == 7:
            add(HALF_ANTICANONICAL, coefficient)
            add(EXCEPTIONALS[7], coefficient)
        else:
            add(_DOUBLE_QUADRIC, coefficient)
            add(EXCEPTIONALS[0], coefficient)
            for j in range(k, 6):
                add(EXCEPTIONALS[j], coefficient)


# -- movable cone --------------------------------------------------------------------

def movable_decompose(
    divisor: DivisorClass, max_steps: int = DEFAULT_MAX_STEPS
) -> Certificate:
    """Certify membership in the Weyl translates of the fundamental movable cone.

    The class is reduced to standard form (the word is recorded in the
    certificate); membership requires 0 <= m_i <= d afterwards.  The reduced
    class is then decomposed over the 17 movable generators: peel
    M_a = (3;3,1^(a-1)) while d < m1+m4, split off the quadrics L_k, and run
    the three-point induction on what remains.  Rational classes are handled
    by clearing denominators, which scales the certificate exactly.
    """
    if divisor in frozenset(pi_generators()):
        certificate = Certificate(CONE_MOV, divisor, (), ((divisor, Fraction(1)),))
        certificate.check()
        return certificate

    scale = math.lcm(divisor.d.denominator, *(x.denominator for x in divisor.m))
    integral = divisor * scale

    try:
        result = _reduce_nonnegative(integral, max_steps)
    except _DegreeWentNegative as floor:
        raise NotMovable(
            f"degree became negative under reduction (reached {floor.last}); "
            "the class is not even effective",
            floor.last,
            floor.word,
        ) from None
    except NotEffective as exc:
        raise NotMovable(str(exc), exc.last) from None
    reduced = result.standard

    bad_negative = [i + 1 for i in range(NUM_POINTS) if reduced.m[i] < 0]
    if bad_negative:
        raise NotMovable(
            f"negative multiplicity at points {bad_negative} in standard form ({reduced}); "
            "the corresponding exceptional divisors are fixed components",
            reduced,
            result.word,
        )
    if reduced.m[0] > reduced.d:
        raise NotMovable(
            f"multiplicity exceeds degree in standard form ({reduced})",
            reduced,
            result.word,
        )

    terms: dict[DivisorClass, Fraction] = {}
    fraction = Fraction(1, scale)

    def add(generator: DivisorClass, coefficient) -> None:
        coefficient = Fraction(coefficient) * fraction
        if coefficient:
            terms[generator] = terms.get(generator, Fraction(0)) + coefficient

    current = reduced
    while current.d < current.m[0] + current.m[3]:
        a = max(i + 1 for i in range(NUM_POINTS) if current.m[i] != 0)
        assert a >= 4
        m = [0] * NUM_POINTS
        m[0] = 3
        for i in range(1, a):
            m[i] = 1
        add(DivisorClass(3, tuple(m)), 1)
        m = list(current.m)
        m[0] -= 3
        for i in range(1, a):
            m[i] -= 1
        current = DivisorClass(current.d - 3, tuple(m))

    m = list(current.m) + [Fraction(0)]
    m4 = m[3]
    for k in range(4, NUM_POINTS + 1):
        add(_quadric_through(range(1, k + 1)), m[k - 1] - m[k])
    _three_point_decompose(current.d - 2 * m4, [m[0] - m4, m[1] - m4, m[2] - m4], add)

    certificate = Certificate(CONE_MOV, divisor, result.word, _freeze_terms(terms))
    certificate.check()
    return certificate


def _three_point_decompose(d: Fraction, m: list[Fraction], add) -> None:
    # Induction on d for (d; m1, m2, m3) with 2d >= m1+m2+m3 and 0 <= m_i <= d:
    # strip multiples of H and H-E_j, otherwise subtract the plane through the
    # two points of non-minimal multiplicity; the invariant is preserved.
    while True:
        assert d >= 0 and 2 * d >= sum(m) and all(0 <= x <= d for x in m)
        nonzero = [j for j in range(3) if m[j] != 0]
        if not nonzero:
            add(H, d)
            return
        if len(nonzero) == 1:
            j = nonzero[0]
            add(_plane_through((j + 1,)), m[j])
            add(H, d - m[j])
            return
        j_min = min(range(3), key=lambda j: (m[j], j))
        p, q = sorted(set(range(3)) - {j_min})
        add(_plane_through((p + 1, q + 1)), 1)
        d -= 1
        m[p] -= 1
        m[q] -= 1


# -- chamber and region tests -----------------------------------------------------

def in_fundamental_chamber(divisor: DivisorClass, strict: bool = False) -> bool:
    """Whether the class pairs non-negatively (positively if strict) with all roots.

    The closed chamber is exactly the set of classes in standard form:
    m_1 >= ... >= m_8 and 2d >= m_1 + m_2 + m_3 + m_4.
    """
    if strict:
        return all(pairing(divisor, alpha) > 0 for alpha in ROOT_SYSTEM.roots)
    return all(pairing(divisor, alpha) >= 0 for alpha in ROOT_SYSTEM.roots)


def in_tits_cone(
    divisor: DivisorClass, max_steps: int = DEFAULT_MAX_STEPS
) -> ReductionResult | None:
    """Membership in the union of Weyl translates of the closed chamber.

    Returns the reduction witness on success.  Returns None when the step cap
    trips, which means "unknown": reaching the cap is strong evidence that no
    standard form exists, but it is never reported as a definite no.
    """
    try:
        return to_standard_form(divisor, max_steps)
    except StepLimitExceeded:
        return None


def in_box(divisor: DivisorClass) -> bool:
    """Whether 0 <= m_i <= d for all i (the region cut out by planes and points)."""
    return all(0 <= x <= divisor.d for x in divisor.m)


# -- accumulation of orbit rays ------------------------------------------------------

_KAPPA = (2,) + (1,) * NUM_POINTS
_KAPPA_NORM = sum(x * x for x in _KAPPA)


def ray_distance(divisor: DivisorClass) -> Fraction:
    """Exact squared-sine distance between the ray of the class and the -K/2 ray.

    Computed as 1 - <x, kappa>^2 / (<x, x> <kappa, kappa>) with the Euclidean
    inner product on coefficient vectors and kappa = (2; 1, ..., 1); zero iff
    the class is proportional to the half-anticanonical class.
    """
    vec = divisor.vector()
    cross = sum(a * b for a, b in zip(vec, _KAPPA))
    norm = sum(a * a for a in vec)
    if norm == 0:
        raise ValueError("the zero class spans no ray")
    return 1 - Fraction(cross * cross, norm * _KAPPA_NORM)


def accumulation_report(max_degree: int) -> tuple[tuple[int, Fraction], ...]:
    """Per-degree maximum ray distance of the exceptional orbit to the -K/2 ray.

    Enumerates the orbit up to the degree bound and reports, for each exact
    degree, the largest distance.  The maxima shrink as the degree grows: the
    orbit rays accumulate only at the half-anticanonical ray.
    """
    if not isinstance(max_degree, int) or max_degree < 2:
        raise ValueError(f"max_degree must be an integer >= 2, got {max_degree!r}")
    maxima: dict[int, Fraction] = {}
    for vec in _orbit_vectors(max_degree):
        cross = sum(a * b for a, b in zip(vec, _KAPPA))
        norm = sum(a * a for a in vec)
        distance = 1 - Fraction(cross * cross, norm * _KAPPA_NORM)
        degree = vec[0]
        if degree not in maxima or distance > maxima[degree]:
            maxima[degree] = distance
    return tuple(sorted(maxima.items()))
