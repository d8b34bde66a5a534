"""Shifted r-spin field theory data.

For an integer r >= 3 the state space has basis indices 0..r-2, the metric is
the anti-diagonal pairing eta(a, b) = [a + b == r - 2], and the theory is
taken at the semisimple shift point along the second basis direction.  This
module holds everything that is a pure function of r:

* the coefficient polynomials P_m(r, a) defined by a two-sum recursion,
  numerically and symbolically in r,
* the entries of the R-matrix of the theory and of its inverse (without the
  uniform scalar factor, which callers accumulate in :class:`ScaleFactor`),
* degree-zero (topological) values of the theory,
* the quantum product at the shift point, with its idempotent basis checked
  in exact cyclotomic arithmetic,
* codimension bookkeeping: the intrinsic class degree and the auxiliary
  exponent that gates the existence of a divisor relation.

For the record: the Euler field of the underlying Frobenius structure at the
shift point is (r-1) phi^(r/(r-1)) along the second rescaled basis vector.
Nothing here consumes it; the closed coefficient formulas below replace the
recursion it would drive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from .cyclotomic import CyclotomicField
from .rpoly import RPoly, poly_interpolate


@dataclass(frozen=True)
class RSpinTheory:
    """The data (r, metric, shifted basis conventions); r >= 3."""

    r: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("r must be at least 3")

    @property
    def dimension(self) -> int:
        return self.r - 1

    @property
    def unit_index(self) -> int:
        return 0

    def check_index(self, a: int) -> None:
        if not 0 <= a <= self.r - 2:
            raise ValueError(f"basis index {a} out of range 0..{self.r - 2}")

    def metric(self, a: int, b: int) -> Fraction:
        self.check_index(a)
        self.check_index(b)
        return Fraction(1 if a + b == self.r - 2 else 0)

    def metric_matrix(self) -> list[list[Fraction]]:
        d = self.dimension
        return [[self.metric(a, b) for b in range(d)] for a in range(d)]


@dataclass(frozen=True)
class PhiExponent:
    """Exponent of the codimension-tracking variable, as numerator/(r - 1).

    The denominator is always the fixed polynomial r - 1, so only the
    numerator is stored (a Fraction in numeric mode, an RPoly in symbolic
    mode).  Exponents are equal iff their numerators are equal; they are
    deliberately never reduced.
    """

    numerator: Union[Fraction, RPoly]

    def __add__(self, other: "PhiExponent") -> "PhiExponent":
        return PhiExponent(self.numerator + other.numerator)

    @classmethod
    def of(cls, value) -> "PhiExponent":
        if isinstance(value, RPoly):
            return cls(value)
        return cls(Fraction(value))


@dataclass(frozen=True)
class ScaleFactor:
    """Omitted uniform scalar [r(r-1) phi^(r/(r-1))]^(-power_m) with a sign."""

    power_m: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.power_m < 0:
            raise ValueError("scale power must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def combine(self, other: "ScaleFactor") -> "ScaleFactor":
        return ScaleFactor(self.power_m + other.power_m, self.sign * other.sign)


@dataclass(frozen=True)
class StructureConstants:
    """Quantum product at the shift point in the rescaled basis.

    The product of basis vectors a and b is the single basis vector with
    index a + b mod r - 1, so the table stores that index; the structure
    constant c^i_ab is 1 when i equals table[a][b] and 0 otherwise.
    """

    r: int
    table: tuple[tuple[int, ...], ...]

    def product_index(self, a: int, b: int) -> int:
        return self.table[a][b]

    def coefficient(self, i: int, a: int, b: int) -> int:
        return 1 if self.table[a][b] == i else 0


class PhiDegreeReport(NamedTuple):
    value: int                 # numerator of the exponent times (r - 1)
    relation_exists: bool      # value < 0, i.e. the class in this degree vanishes
    d_integral: bool           # value divisible by r - 1


@lru_cache(maxsize=None)
def p_polynomial(m: int, a: int, r: int) -> Fraction:
    """P_m(r, a) by the two-sum recursion with P_0 = 1.

    Memoized behind the standard library's internally locked LRU cache, so
    concurrent sweeps over r stay safe.  For m >= 1:

        P_m(r,a) = 1/2 sum_{b=1}^{a} (2mr - r - 2b) P_{m-1}(r, b-1)
                 - 1/(4mr(r-1)) sum_{b=1}^{r-2}
                       (r-1-b)(2mr - b)(2mr - r - 2b) P_{m-1}(r, b-1)
    """
    if r < 3:
        raise ValueError("r must be at least 3")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not 0 <= a <= r - 2:
        raise ValueError(f"index a={a} out of range 0..{r - 2}")
    if m == 0:
        return Fraction(1)
    first = Fraction(0)
    for b in range(1, a + 1):
        first += (2 * m * r - r - 2 * b) * p_polynomial(m - 1, b - 1, r)
    first /= 2
    second = Fraction(0)
    for b in range(1, r - 1):
        second += (
            (r - 1 - b)
            * (2 * m * r - b)
            * (2 * m * r - r - 2 * b)
            * p_polynomial(m - 1, b - 1, r)
        )
    second /= 4 * m * r * (r - 1)
    return first - second


def p_polynomial_symbolic(m: int, a: int) -> RPoly:
    """P_m(r, a) as a polynomial in r of degree at most 2m, for fixed a.

    Interpolated from numeric values at 2m + 2 consecutive r (one more than
    the degree bound needs); the extra sample is a consistency check, and a
    failure surfaces as an InterpolationError rather than a silently raised
    bound.  Sampled r start above a + 1 so that a is a valid index.
    """
    if m < 0 or a < 0:
        raise ValueError("m and a must be nonnegative")
    r_start = max(3, a + 2)
    samples = [
        (Fraction(r), p_polynomial(m, a, r))
        for r in range(r_start, r_start + 2 * m + 2)
    ]
    return poly_interpolate(samples, degree_bound=2 * m)


def r_inverse_entry(m: int, a: int, b: int, theory: RSpinTheory) -> Fraction:
    """Entry of the inverse R-matrix (upper index b, lower index a) at order m.

    Equals P_m(r, a) when b + m = a mod r - 1 and 0 otherwise.  The uniform
    scalar [r(r-1) phi^(r/(r-1))]^(-m) is not folded in; callers track it in
    a ScaleFactor.
    """
    theory.check_index(a)
    theory.check_index(b)
    if (b + m - a) % (theory.r - 1) != 0:
        return Fraction(0)
    return p_polynomial(m, a, theory.r)


def r_forward_entry(m: int, a: int, b: int, theory: RSpinTheory) -> Fraction:
    """Entry of the R-matrix itself: (-1)^m P_m(r, r-2-b) under b + m = a mod r-1.

    The sign comes from the bracket of the omitted scalar being negated for
    the forward series.
    """
    theory.check_index(a)
    theory.check_index(b)
    if (b + m - a) % (theory.r - 1) != 0:
        return Fraction(0)
    return (-1) ** m * p_polynomial(m, theory.r - 2 - b, theory.r)


def r_inverse_matrix(m: int, theory: RSpinTheory) -> list[list[Fraction]]:
    """Order-m inverse R-matrix; rows are the upper (output) index."""
    d = theory.dimension
    return [[r_inverse_entry(m, a, b, theory) for a in range(d)] for b in range(d)]


def r_forward_matrix(m: int, theory: RSpinTheory) -> list[list[Fraction]]:
    """Order-m R-matrix; rows are the upper (output) index."""
    d = theory.dimension
    return [[r_forward_entry(m, a, b, theory) for a in range(d)] for b in range(d)]


def topological_value(
    g: int, insertions: Sequence[int], theory: RSpinTheory
) -> tuple[Fraction, PhiExponent]:
    """Degree-zero value of the shifted theory on one vertex.

    Returns ((r-1)^g, exponent (g-1)(r-2)/(r-1)) when g - 1 - sum(insertions)
    is divisible by r - 1, and (0, same exponent) otherwise.
    """
    n = len(insertions)
    if 2 * g - 2 + n <= 0:
        raise ValueError(f"unstable vertex (g={g}, n={n})")
    for a in insertions:
        theory.check_index(a)
    r = theory.r
    exponent = PhiExponent.of(Fraction((g - 1) * (r - 2)))
    if (g - 1 - sum(insertions)) % (r - 1) == 0:
        return Fraction((r - 1) ** g), exponent
    return Fraction(0), exponent


def quantum_structure_constants(theory: RSpinTheory) -> StructureConstants:
    """Structure constants of the quantum product at the shift point."""
    d = theory.dimension
    table = tuple(
        tuple((a + b) % (theory.r - 1) for b in range(d)) for a in range(d)
    )
    return StructureConstants(r=theory.r, table=table)


@dataclass(frozen=True)
class IdempotentReport:
    r: int
    ok: bool
    geometric_sums_ok: bool
    idempotent_identity_ok: bool
    failures: tuple[str, ...]


def idempotent_check(theory: RSpinTheory) -> IdempotentReport:
    """Verify the discrete-Fourier basis diagonalizes the quantum product.

    With zeta a primitive (r-1)-th root of unity and f_i = sum_a zeta^(a*i) v_a
    over the rescaled basis v_a, checks f_i . f_j = (r-1) delta_ij f_j in exact
    cyclotomic arithmetic, along with the geometric-sum identity
    1 + zeta^x + ... + zeta^((r-2)x) = 0 for x != 0 mod r-1 that drives it.
    """
    m = theory.r - 1
    field = CyclotomicField(m)
    failures: list[str] = []

    geometric_ok = True
    for x in range(1, m):
        total = field.zero()
        for k in range(m):
            total = field.add(total, field.root_power(k * x))
        if not field.is_zero(total):
            geometric_ok = False
            failures.append(f"geometric sum nonzero for x={x}")

    product_ok = True
    for i in range(m):
        for j in range(m):
            for c in range(m):
                # Coefficient of v_c in f_i . f_j: sum over a+b = c mod r-1
                # of zeta^(a i + b j).
                coeff = field.zero()
                for a in range(m):
                    b = (c - a) % m
                    coeff = field.add(coeff, field.root_power(a * i + b * j))
                if i == j:
                    expected = field.scale(field.root_power(c * j), m)
                else:
                    expected = field.zero()
                if coeff != expected:
                    product_ok = False
                    failures.append(f"product mismatch at i={i} j={j} c={c}")

    return IdempotentReport(
        r=theory.r,
        ok=geometric_ok and product_ok,
        geometric_sums_ok=geometric_ok,
        idempotent_identity_ok=product_ok,
        failures=tuple(failures),
    )


def witten_degree(g: int, n: int, a_vec: Sequence[int], r: int) -> Fraction:
    """Intrinsic complex degree ((r-2)(g-1) + sum a_i) / r of the class."""
    if len(a_vec) != n:
        raise ValueError("a_vec length must equal n")
    for a in a_vec:
        if not 0 <= a <= r - 2:
            raise ValueError(f"insertion {a} out of range 0..{r - 2}")
    return Fraction((r - 2) * (g - 1) + sum(a_vec), r)


def phi_degree(g: int, D: int, a_vec: Sequence[int], r: int) -> PhiDegreeReport:
    """Total-degree bookkeeping for a codimension-D relation candidate.

    Returns d*(r-1) = sum(a_i) + (g-1)(r-2) - r*D together with the existence
    flag (negative value means the degree-D part vanishes, hence a relation)
    and whether d itself is an integer.
    """
    if D < 0:
        raise ValueError("D must be nonnegative")
    value = sum(a_vec) + (g - 1) * (r - 2) - r * D
    return PhiDegreeReport(
        value=value,
        relation_exists=value < 0,
        d_integral=value % (r - 1) == 0,
    )
