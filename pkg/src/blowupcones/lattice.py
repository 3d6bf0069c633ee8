"""Exact lattice model for the blowup of P^3 at eight very general points.

Divisor classes live in the rank-9 Neron-Severi lattice with basis
(H, E_1, ..., E_8); a class is stored as a coefficient tuple (d; m_1, ..., m_8)
meaning d*H - sum_i m_i*E_i.  Curve classes live in the dual rank-9 lattice
with basis (h, e_1, ..., e_8) and are stored as (a; c_1, ..., c_8) meaning
a*h + sum_i c_i*e_i.  Every coefficient is an arbitrary-precision rational
(integers for curves); nothing in this package ever stores a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

NUM_POINTS = 8

RationalLike = Fraction | int | str


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed; use Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class d*H - sum_i m_i*E_i with exact rational coefficients."""

    d: Fraction
    m: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", _as_fraction(self.d))
        mult = tuple(_as_fraction(x) for x in self.m)
        if len(mult) != NUM_POINTS:
            raise ValueError(f"expected {NUM_POINTS} multiplicities, got {len(mult)}")
        object.__setattr__(self, "m", mult)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.d - other.d, tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.d, tuple(-x for x in self.m))

    def __mul__(self, scalar) -> "DivisorClass":
        if isinstance(scalar, float):
            return NotImplemented
        s = Fraction(scalar)
        return DivisorClass(self.d * s, tuple(x * s for x in self.m))

    __rmul__ = __mul__

    # -- views --------------------------------------------------------------

    def vector(self) -> tuple[Fraction, ...]:
        """Coefficient vector (d, m_1, ..., m_8)."""
        return (self.d, *self.m)

    def is_integral(self) -> bool:
        return self.d.denominator == 1 and all(x.denominator == 1 for x in self.m)

    def is_zero(self) -> bool:
        return self.d == 0 and all(x == 0 for x in self.m)

    # -- text form ----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        """Parse the canonical text form ``d;m1,m2,...,m8`` (entries may be p/q)."""
        return cls(*_parse_vector(text, NUM_POINTS))

    def __str__(self) -> str:
        return f"{self.d};{','.join(str(x) for x in self.m)}"


@dataclass(frozen=True)
class CurveClass:
    """A curve class a*h + sum_i c_i*e_i with integer coefficients."""

    a: int
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_int(self.a))
        coeffs = tuple(_as_int(x) for x in self.c)
        if len(coeffs) != NUM_POINTS:
            raise ValueError(f"expected {NUM_POINTS} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "c", coeffs)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        if not isinstance(other, CurveClass):
            return NotImplemented
        return CurveClass(self.a + other.a, tuple(x + y for x, y in zip(self.c, other.c)))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        if not isinstance(other, CurveClass):
            return NotImplemented
        return CurveClass(self.a - other.a, tuple(x - y for x, y in zip(self.c, other.c)))

    def __neg__(self) -> "CurveClass":
        return CurveClass(-self.a, tuple(-x for x in self.c))

    def __mul__(self, scalar: int) -> "CurveClass":
        s = _as_int(scalar)
        return CurveClass(self.a * s, tuple(x * s for x in self.c))

    __rmul__ = __mul__

    def multiplicities(self) -> tuple[int, ...]:
        """Point multiplicities b_i of the curve, i.e. b_i = -c_i."""
        return tuple(-x for x in self.c)

    def vector(self) -> tuple[Fraction, ...]:
        return (Fraction(self.a), *(Fraction(x) for x in self.c))

    def is_zero(self) -> bool:
        return self.a == 0 and all(x == 0 for x in self.c)

    @classmethod
    def parse(cls, text: str) -> "CurveClass":
        """Parse the canonical text form ``a;c1,c2,...,c8`` (integers only)."""
        a, coeffs = _parse_vector(text, NUM_POINTS)
        if a.denominator != 1 or any(x.denominator != 1 for x in coeffs):
            raise ValueError(f"curve classes must be integral: {text!r}")
        return cls(int(a), tuple(int(x) for x in coeffs))

    def __str__(self) -> str:
        return f"{self.a};{','.join(str(x) for x in self.c)}"


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an integer coefficient, got {value!r}")
    return value


def _parse_vector(text: str, width: int) -> tuple[Fraction, tuple[Fraction, ...]]:
    head, sep, tail = text.strip().partition(";")
    if not sep:
        raise ValueError(f"missing ';' separator in class {text!r}")
    try:
        lead = Fraction(head.strip())
        rest = tuple(Fraction(part.strip()) for part in tail.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse class {text!r}: {exc}") from None
    if len(rest) != width:
        raise ValueError(f"expected {width} entries after ';' in {text!r}, got {len(rest)}")
    return lead, rest


# -- distinguished classes --------------------------------------------------

H = DivisorClass(1, (0,) * 8)


def exceptional(i: int) -> DivisorClass:
    """The exceptional divisor class E_i over the i-th point, 1 <= i <= 8."""
    if not 1 <= i <= NUM_POINTS:
        raise ValueError(f"point index must be in 1..{NUM_POINTS}, got {i}")
    m = [0] * NUM_POINTS
    m[i - 1] = -1
    return DivisorClass(0, tuple(m))


EXCEPTIONALS = tuple(exceptional(i) for i in range(1, NUM_POINTS + 1))

#: The canonical class, -4H + 2*sum(E_i).
CANONICAL = DivisorClass(-4, (-2,) * 8)

#: Class of the half-anticanonical surface (a quadric through the eight points).
HALF_ANTICANONICAL = DivisorClass(2, (1,) * 8)

#: Class of the transform of a general line.
LINE = CurveClass(1, (0,) * 8)


def exceptional_line(i: int) -> CurveClass:
    """The class e_i of a line inside the exceptional divisor E_i."""
    if not 1 <= i <= NUM_POINTS:
        raise ValueError(f"point index must be in 1..{NUM_POINTS}, got {i}")
    c = [0] * NUM_POINTS
    c[i - 1] = 1
    return CurveClass(0, tuple(c))


def line_between(i: int, j: int) -> CurveClass:
    """The class h - e_i - e_j of the transform of the line through points i and j."""
    if i == j or not (1 <= i <= NUM_POINTS and 1 <= j <= NUM_POINTS):
        raise ValueError(f"need two distinct point indices in 1..{NUM_POINTS}, got {i}, {j}")
    c = [0] * NUM_POINTS
    c[i - 1] = -1
    c[j - 1] = -1
    return CurveClass(1, tuple(c))


EXCEPTIONAL_LINES = tuple(exceptional_line(i) for i in range(1, NUM_POINTS + 1))


# -- the bilinear form and intersection numbers ------------------------------

def pairing(a: DivisorClass, b: DivisorClass) -> Fraction:
    """The symmetric bilinear form with (H,H)=2, (E_i,E_j)=-delta_ij, (H,E_i)=0."""
    return 2 * a.d * b.d - sum(x * y for x, y in zip(a.m, b.m))


def curve_intersection(divisor: DivisorClass, curve: CurveClass) -> Fraction:
    """Intersection number; satisfies D.e_i = m_i and D.(h-e_i-e_j) = d - m_i - m_j."""
    return divisor.d * curve.a + sum(x * y for x, y in zip(divisor.m, curve.c))


def dq_numbers(divisor: DivisorClass) -> tuple[Fraction, Fraction]:
    """The pair (D^2.Q, D.Q^2) against the half-anticanonical surface Q.

    Equals (2d^2 - sum m_i^2, 4d - sum m_i), which coincides with
    (pairing(D, D), pairing(D, Q)); the identity is asserted on every call.
    """
    square = 2 * divisor.d * divisor.d - sum(x * x for x in divisor.m)
    degree = 4 * divisor.d - sum(divisor.m)
    assert square == pairing(divisor, divisor)
    assert degree == pairing(divisor, HALF_ANTICANONICAL)
    return square, degree


# -- the T_{2,4,4} root data --------------------------------------------------

def _simple_root(i: int) -> DivisorClass:
    if i == 0:
        return DivisorClass(1, (1, 1, 1, 1, 0, 0, 0, 0))
    m = [0] * NUM_POINTS
    m[i - 1] = -1
    m[i] = 1
    return DivisorClass(0, tuple(m))


_WEIGHT_DATA = (
    (Fraction(1, 2), 0),
    (Fraction(1, 2), 1),
    (Fraction(1), 2),
    (Fraction(3, 2), 3),
    (Fraction(2), 4),
    (Fraction(2), 5),
    (Fraction(2), 6),
    (Fraction(2), 7),
)


def _fundamental_weight(i: int) -> DivisorClass:
    degree, ones = _WEIGHT_DATA[i]
    return DivisorClass(degree, tuple(Fraction(1) if k < ones else Fraction(0) for k in range(8)))


@dataclass(frozen=True)
class RootSystem:
    """Simple roots and fundamental weights of the T_{2,4,4} diagram on the lattice.

    The Gram contract is checked on construction: (alpha_i, alpha_i) = -2,
    (alpha_i, alpha_j) in {0, 1} for i != j, (f_i, alpha_j) = delta_ij, and
    (K, alpha_i) = 0.
    """

    roots: tuple[DivisorClass, ...]
    weights: tuple[DivisorClass, ...]

    @classmethod
    def standard(cls) -> "RootSystem":
        system = cls(
            roots=tuple(_simple_root(i) for i in range(8)),
            weights=tuple(_fundamental_weight(i) for i in range(8)),
        )
        system._check_gram()
        return system

    def _check_gram(self) -> None:
        for i, alpha in enumerate(self.roots):
            if pairing(alpha, alpha) != -2:
                raise ValueError(f"root {i} has self-pairing {pairing(alpha, alpha)}, want -2")
            if pairing(CANONICAL, alpha) != 0:
                raise ValueError(f"root {i} is not orthogonal to the canonical class")
            for j, beta in enumerate(self.roots):
                if i != j and pairing(alpha, beta) not in (0, 1):
                    raise ValueError(f"roots {i},{j} pair to {pairing(alpha, beta)}, want 0 or 1")
            for j, weight in enumerate(self.weights):
                expected = 1 if i == j else 0
                if pairing(weight, alpha) != expected:
                    raise ValueError(
                        f"(f_{j}, alpha_{i}) = {pairing(weight, alpha)}, want {expected}"
                    )


ROOT_SYSTEM = RootSystem.standard()
