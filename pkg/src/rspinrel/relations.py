"""Assembly and verification of divisor relations.

A relation in degree-2 cohomology of the moduli space of genus-g stable
curves with n markings, for shift data (r, a_1..a_n), is the codimension-1
part of the reconstructed shifted r-spin class.  It vanishes exactly when the
auxiliary total degree is negative, which is what :func:`assemble_relation`
gates on.

The codimension-1 part receives contributions from four graph families
(enumerated in :mod:`rspinrel.strata`):

* smooth graph, one psi power on one leg:     (r-1)^g-weighted leg entries,
* smooth graph, one dilaton leg:              the kappa_1 term,
* the one-loop graph:                         the irreducible boundary term,
* one-edge separating graphs:                 the delta_{h,S} terms.

Node insertions at an edge are resolved by brute force: both insertion
indices run over 0..r-2 and the topological vertex values zero out every
mismatched pair.  For one-edge graphs the gluing map onto the boundary
divisor has degree equal to the automorphism order of the graph, so the two
cancel and the divisor coefficient is the plain contraction sum; the golden
totals pin this convention.

Symbolic-in-r relations are supported in genus 1 (where the contributing
index patterns are independent of r): every divisor coefficient is a
polynomial in r of degree at most 3, recovered by exact interpolation from
numeric assemblies with an extra consistency sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product as iter_product
from typing import Sequence, Union

from .cohft import (
    PhiExponent,
    RSpinTheory,
    ScaleFactor,
    phi_degree,
    r_inverse_entry,
    topological_value,
    witten_degree,
)
from .linalg import RationalMatrix, determinant, rank_and_solve, rref
from .rpoly import RPoly, poly_interpolate
from .strata import (
    DivisorClass,
    GraphContribution,
    UnsupportedGenusError,
    delta_irr,
    delta_sep,
    divisor_class_of,
    divisor_generators,
    enumerate_contributing_graphs,
    kappa1,
    psi,
)

SYMBOLIC = "symbolic"

# Sample points for symbolic-in-r interpolation: degree bound 3 for genus-1
# coefficients, plus consistency samples beyond the 4 needed nodes.
_SYMBOLIC_SAMPLE_RS = (3, 4, 5, 6, 7, 8)
_SYMBOLIC_DEGREE_BOUND = 3


class DegreeGateError(ValueError):
    """No relation exists at this degree: the class degree is not exceeded."""

    def __init__(self, g: int, n: int, a_vec: tuple[int, ...], r: int):
        self.witten_degree = witten_degree(g, n, a_vec, r)
        self.report = phi_degree(g, 1, a_vec, r)
        super().__init__(
            f"no relation in codimension D = 1 for (g, n, a, r) = "
            f"({g}, {n}, {list(a_vec)}, {r}): the class has degree "
            f"{self.witten_degree} and the degree-1 part need not vanish"
        )


class AssemblyError(RuntimeError):
    """Internal bookkeeping violation during relation assembly."""


class BasisMismatchError(ValueError):
    """Two relation sets do not share a generator basis."""


@dataclass(frozen=True)
class Provenance:
    g: int
    n: int
    a_vec: tuple[int, ...] | None
    r_mode: Union[int, str]  # numeric r, "symbolic", "r^k", "reference", "reduced"


Coefficient = Union[Fraction, RPoly]


@dataclass
class Relation:
    """Linear combination of divisor classes; zero coefficients never stored."""

    coefficients: dict[DivisorClass, Coefficient]
    phi_exponent: PhiExponent
    scale: ScaleFactor
    provenance: Provenance

    def __post_init__(self):
        self.coefficients = {
            d: c for d, c in self.coefficients.items() if not _is_zero(c)
        }

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_symbolic(self) -> bool:
        return any(isinstance(c, RPoly) for c in self.coefficients.values())

    def vector(self, basis: Sequence[DivisorClass]) -> tuple[Coefficient, ...]:
        missing = set(self.coefficients) - set(basis)
        if missing:
            raise BasisMismatchError(f"classes outside the basis: {missing}")
        zero = Fraction(0)
        return tuple(self.coefficients.get(d, zero) for d in basis)

    def normalized_vector(self, basis: Sequence[DivisorClass]) -> tuple[int, ...]:
        """Primitive integer coefficients, first nonzero entry positive."""
        vec = self.vector(basis)
        if any(isinstance(c, RPoly) for c in vec):
            raise ValueError("normalized_vector requires a numeric relation")
        return _primitive_int_vector(vec)

    def scaled(self, factor: Coefficient) -> "Relation":
        return Relation(
            coefficients={d: c * factor for d, c in self.coefficients.items()},
            phi_exponent=self.phi_exponent,
            scale=self.scale,
            provenance=self.provenance,
        )

    def payload(self, basis: Sequence[DivisorClass]) -> dict:
        """JSON-ready record: generator names with integer coefficients."""
        prov = self.provenance
        return {
            "generators": [d.render() for d in basis],
            "coeffs": list(self.normalized_vector(basis)),
            "g": prov.g,
            "n": prov.n,
            "a": list(prov.a_vec) if prov.a_vec is not None else None,
            "r": prov.r_mode,
        }


@dataclass
class RelationSet:
    """Relations over one shared ordered generator basis."""

    basis: tuple[DivisorClass, ...]
    relations: list[Relation]

    def __post_init__(self):
        for rel in self.relations:
            rel.vector(self.basis)  # raises on basis mismatch

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [rel.vector(self.basis) for rel in self.relations]

    def rank(self) -> int:
        rows = [v for v in self.vectors() if any(x != 0 for x in v)]
        if not rows:
            return 0
        rank, _ = rank_and_solve(RationalMatrix(rows))
        return rank

    def reduced_rows(self) -> list[tuple[int, ...]]:
        """Row-reduced basis of the span as primitive integer vectors."""
        rows = [v for v in self.vectors() if any(x != 0 for x in v)]
        if not rows:
            return []
        reduced, _ = rref(RationalMatrix(rows))
        return [_primitive_int_vector(tuple(row)) for row in reduced]


@dataclass(frozen=True)
class GraphTerm:
    """One graph family's contribution to one divisor class."""

    contribution: GraphContribution
    divisor: DivisorClass
    coefficient: Fraction
    phi_exponent: PhiExponent
    scale: ScaleFactor


def _is_zero(c: Coefficient) -> bool:
    if isinstance(c, RPoly):
        return c.is_zero()
    return c == 0


def _primitive_int_vector(vec: Sequence[Fraction]) -> tuple[int, ...]:
    if all(x == 0 for x in vec):
        return tuple(0 for _ in vec)
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // math.gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


# ---------------------------------------------------------------------------
# Edge factor as a truncated series
# ---------------------------------------------------------------------------

def edge_numerator_coefficient(
    mp: int, mq: int, p: int, q: int, theory: RSpinTheory
) -> Fraction:
    """Coefficient of psi'^mp psi''^mq in the edge numerator, for the
    insertion pair (p at the first branch, q at the second).

    The numerator is eta - (inverse R) eta (inverse R transposed); the order
    (0,0) term cancels by the identity leading term.
    """
    if mp == 0 and mq == 0:
        return Fraction(0)
    d = theory.dimension
    total = Fraction(0)
    for j in range(d):
        left = r_inverse_entry(mp, j, p, theory) if mp else Fraction(1 if j == p else 0)
        if left == 0:
            continue
        jj = theory.r - 2 - j
        right = r_inverse_entry(mq, jj, q, theory) if mq else Fraction(1 if jj == q else 0)
        total += left * right
    return -total


def edge_series_coefficients(
    p: int, q: int, theory: RSpinTheory, max_order: int = 0
) -> dict[tuple[int, int], Fraction]:
    """Coefficients of the edge factor (numerator divided by psi' + psi'')
    for the insertion pair (p, q), up to the given total order.

    Codimension 1 only uses the constant term, but the truncation order is a
    parameter so that the restriction stays a choice rather than a formula
    assumption.  Divisibility of the numerator by psi' + psi'' is asserted.
    """
    out: dict[tuple[int, int], Fraction] = {}
    for total in range(max_order + 1):
        # Q_{u,0} = N_{u+1,0}; Q_{u,v} = N_{u+1,v} - Q_{u+1,v-1}.
        for u in range(total, -1, -1):
            v = total - u
            if v == 0:
                out[(u, v)] = edge_numerator_coefficient(u + 1, 0, p, q, theory)
            else:
                out[(u, v)] = edge_numerator_coefficient(u + 1, v, p, q, theory) - out[
                    (u + 1, v - 1)
                ]
        # Redundant equation at (0, total+1): checks exact divisibility.
        residual = edge_numerator_coefficient(0, total + 1, p, q, theory) - out[(0, total)]
        if residual != 0:
            raise AssemblyError(
                f"edge numerator not divisible by psi' + psi'' at order {total}"
            )
    return out


def edge_constant_term(p: int, q: int, theory: RSpinTheory) -> Fraction:
    """Constant term of the edge factor: -(inverse R_1)^q_{r-2-p}."""
    return edge_series_coefficients(p, q, theory, max_order=0)[(0, 0)]


# ---------------------------------------------------------------------------
# Numeric assembly
# ---------------------------------------------------------------------------

def _graph_phi(contribution: GraphContribution, a_vec: Sequence[int], theory: RSpinTheory) -> PhiExponent:
    """Exponent carried by a graph: vertex factors, one factor r-2 per edge,
    and the rescaled-basis factor of the primary legs.  Dilaton legs
    contribute nothing."""
    r = theory.r
    total = Fraction(sum(a_vec))
    for v in contribution.graph.vertices:
        total += Fraction((v.genus - 1) * (r - 2))
    total += Fraction(len(contribution.graph.edges) * (r - 2))
    return PhiExponent.of(total)


def graph_contribution_terms(
    g: int, n: int, a_vec: Sequence[int], theory: RSpinTheory
) -> list[GraphTerm]:
    """Per-graph, per-divisor coefficients of the codimension-1 part.

    Zero contributions are kept so callers can see each graph vanish
    individually.  The overall r^(g-1) prefactor is applied by
    :func:`assemble_relation`, not here.
    """
    r = theory.r
    a_vec = tuple(a_vec)
    scale = ScaleFactor(power_m=1, sign=1)
    terms: list[GraphTerm] = []

    for contribution in enumerate_contributing_graphs(g, n, theory):
        phi = _graph_phi(contribution, a_vec, theory)
        kind = contribution.kind

        if kind == "leg_psi":
            for i in range(1, n + 1):
                total = Fraction(0)
                for b in range(r - 1):
                    entry = r_inverse_entry(1, a_vec[i - 1], b, theory)
                    if entry == 0:
                        continue
                    insertions = list(a_vec)
                    insertions[i - 1] = b
                    value, _ = topological_value(g, insertions, theory)
                    total += entry * value
                terms.append(
                    GraphTerm(contribution, psi(i), total, phi, scale)
                )

        elif kind == "dilaton_kappa":
            # psi^2 on the dilaton leg pushes forward to kappa_1; the dilaton
            # series carries an explicit minus sign and inserts along the
            # unit direction.
            total = Fraction(0)
            for b in range(r - 1):
                entry = r_inverse_entry(1, 0, b, theory)
                if entry == 0:
                    continue
                value, _ = topological_value(g, list(a_vec) + [b], theory)
                total += entry * value
            terms.append(
                GraphTerm(contribution, kappa1(), -total, phi, scale)
            )

        elif kind == "loop_edge":
            total = Fraction(0)
            for p in range(r - 1):
                for q in range(r - 1):
                    entry = edge_constant_term(p, q, theory)
                    if entry == 0:
                        continue
                    value, _ = topological_value(
                        g - 1, list(a_vec) + [p, q], theory
                    )
                    total += entry * value
            terms.append(
                GraphTerm(contribution, delta_irr(), total, phi, scale)
            )

        elif kind == "separating_edge":
            v0, v1 = contribution.graph.vertices
            a0 = [a_vec[i - 1] for i in sorted(v0.markings)]
            a1 = [a_vec[i - 1] for i in sorted(v1.markings)]
            total = Fraction(0)
            for p in range(r - 1):
                value0, _ = topological_value(v0.genus, a0 + [p], theory)
                if value0 == 0:
                    continue
                for q in range(r - 1):
                    entry = edge_constant_term(p, q, theory)
                    if entry == 0:
                        continue
                    value1, _ = topological_value(v1.genus, a1 + [q], theory)
                    total += entry * value0 * value1
            divisor = divisor_class_of(contribution.graph, g, n)
            terms.append(GraphTerm(contribution, divisor, total, phi, scale))

        else:  # pragma: no cover - enumeration emits only the kinds above
            raise AssemblyError(f"unknown contribution kind {kind}")

    return terms


def assemble_relation(
    g: int,
    n: int,
    a_vec: Sequence[int],
    r: int | None = None,
    *,
    symbolic: bool = False,
) -> Relation:
    """The codimension-1 relation for shift data (g, n, a_vec, r).

    Raises :class:`DegreeGateError` when the degree bookkeeping reports no
    relation.  A non-integral auxiliary exponent is allowed: every graph
    contribution then vanishes through the congruence conditions and the
    zero relation is returned.  All contributions must agree on their
    exponent; disagreement is an assembly error, not a warning.
    """
    a_vec = tuple(a_vec)
    if len(a_vec) != n:
        raise ValueError("a_vec length must equal n")
    if symbolic:
        if r is not None:
            raise ValueError("give either a numeric r or symbolic=True, not both")
        return _assemble_symbolic(g, n, a_vec)
    if r is None:
        raise ValueError("numeric assembly needs r")

    theory = RSpinTheory(r)
    for a in a_vec:
        theory.check_index(a)
    gate = phi_degree(g, 1, a_vec, r)
    if not gate.relation_exists:
        raise DegreeGateError(g, n, a_vec, r)

    terms = graph_contribution_terms(g, n, a_vec, theory)
    expected_phi = PhiExponent.of(Fraction(sum(a_vec) + (g - 1) * (r - 2)))
    for term in terms:
        if term.phi_exponent != expected_phi or term.scale != ScaleFactor(1, 1):
            raise AssemblyError(
                f"graph {term.contribution.kind} carries exponent "
                f"{term.phi_exponent}, expected {expected_phi}"
            )

    prefactor = Fraction(r ** (g - 1))
    coefficients: dict[DivisorClass, Fraction] = {}
    for term in terms:
        if term.coefficient == 0:
            continue
        coefficients[term.divisor] = (
            coefficients.get(term.divisor, Fraction(0)) + term.coefficient * prefactor
        )
    return Relation(
        coefficients=coefficients,
        phi_exponent=expected_phi,
        scale=ScaleFactor(power_m=1, sign=1),
        provenance=Provenance(g=g, n=n, a_vec=a_vec, r_mode=r),
    )


def _assemble_symbolic(g: int, n: int, a_vec: tuple[int, ...]) -> Relation:
    """Symbolic-in-r assembly by interpolation of numeric assemblies.

    Only genus 1 has an r-independent contribution pattern (the auxiliary
    exponent is -1 for every r), so only genus 1 is supported symbolically.
    """
    if g != 1:
        raise UnsupportedGenusError(
            "symbolic-in-r assembly is only meaningful in genus 1"
        )
    basis = divisor_generators(g, n)
    numeric = {
        rr: assemble_relation(g, n, a_vec, rr) for rr in _SYMBOLIC_SAMPLE_RS
    }
    coefficients: dict[DivisorClass, RPoly] = {}
    for divisor in basis:
        samples = [
            (Fraction(rr), numeric[rr].coefficients.get(divisor, Fraction(0)))
            for rr in _SYMBOLIC_SAMPLE_RS
        ]
        coefficients[divisor] = poly_interpolate(
            samples, degree_bound=_SYMBOLIC_DEGREE_BOUND
        )
    # Numerator of the shared exponent, as a polynomial in r.
    phi_num = RPoly((sum(a_vec) - 2 * (g - 1), g - 1))
    return Relation(
        coefficients=coefficients,
        phi_exponent=PhiExponent.of(phi_num),
        scale=ScaleFactor(power_m=1, sign=1),
        provenance=Provenance(g=g, n=n, a_vec=a_vec, r_mode=SYMBOLIC),
    )


# ---------------------------------------------------------------------------
# Extraction, pullback, reference set, span comparison
# ---------------------------------------------------------------------------

def extract_r_coefficients(rel: Relation) -> RelationSet:
    """Split a symbolic relation into one relation per power of r.

    The relation is first normalized to a primitive joint integer form
    (denominators cleared across all coefficients, global content removed),
    then the coefficient of each power of r gives one relation.  Redundant
    relations are kept; span analysis is a separate concern.
    """
    if not rel.is_symbolic() and not rel.is_zero():
        raise ValueError("extraction needs a symbolic-mode relation")
    prov = rel.provenance
    if prov.r_mode != SYMBOLIC:
        raise ValueError("extraction needs a symbolic-mode relation")
    basis = tuple(divisor_generators(prov.g, prov.n))
    polys = [rel.coefficients.get(d, RPoly.zero()) for d in basis]
    polys = [p if isinstance(p, RPoly) else RPoly((p,)) for p in polys]

    # Joint content normalization across every coefficient of every power.
    all_coeffs = [c for p in polys for c in p.coeffs]
    denom_lcm = 1
    for c in all_coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [[int(c * denom_lcm) for c in p.coeffs] for p in polys]
    g = 0
    for row in ints:
        for v in row:
            g = math.gcd(g, abs(v))
    if g:
        ints = [[v // g for v in row] for row in ints]

    max_deg = max((len(row) for row in ints), default=0)
    relations = []
    for power in range(max_deg - 1, -1, -1):
        coeffs = {}
        for divisor, row in zip(basis, ints):
            value = Fraction(row[power]) if power < len(row) else Fraction(0)
            if value != 0:
                coeffs[divisor] = value
        if not coeffs:
            continue
        row_rel = Relation(
            coefficients=coeffs,
            phi_exponent=rel.phi_exponent,
            scale=rel.scale,
            provenance=replace(prov, r_mode=f"r^{power}"),
        )
        # Content-normalize each extracted row as well.
        vec = _primitive_int_vector(row_rel.vector(basis))
        row_rel.coefficients = {
            d: Fraction(v) for d, v in zip(basis, vec) if v != 0
        }
        relations.append(row_rel)
    return RelationSet(basis=basis, relations=relations)


def pullback_genus2(rel: Relation, n: int) -> Relation:
    """Pull a relation on the genus-2, unmarked space back along the map
    forgetting n points.

    kappa_1 picks up -sum(psi_i) + sum of genus-0 boundary corrections, the
    irreducible boundary pulls back to itself, and the genus 1+1 boundary
    pulls back to the sum over all canonical marking splittings.
    """
    allowed = {kappa1(), delta_irr(), delta_sep(1, frozenset())}
    support = set(rel.coefficients)
    if not support <= allowed:
        raise BasisMismatchError(
            "pullback source must live on the unmarked genus-2 space "
            "(kappa_1, delta_irr, genus 1+1 boundary)"
        )
    if n == 0:
        return rel
    zero = Fraction(0)
    k = rel.coefficients.get(kappa1(), zero)
    irr = rel.coefficients.get(delta_irr(), zero)
    d1 = rel.coefficients.get(delta_sep(1, frozenset()), zero)

    coeffs: dict[DivisorClass, Fraction] = {}

    def add(d: DivisorClass, value: Fraction) -> None:
        if value != 0:
            coeffs[d] = coeffs.get(d, zero) + value

    add(kappa1(), k)
    for i in range(1, n + 1):
        add(psi(i), -k)
    add(delta_irr(), irr)
    for divisor in divisor_generators(2, n):
        if divisor.kind != "delta_sep":
            continue
        if divisor.h == 0:
            add(divisor, k)
        else:
            add(divisor, d1)
    return Relation(
        coefficients=coeffs,
        phi_exponent=rel.phi_exponent,
        scale=rel.scale,
        provenance=replace(rel.provenance, n=n),
    )


def ac_relations(g: int, n: int) -> RelationSet:
    """The known complete set of degree-2 relations (Arbarello-Cornalba).

    Genus 1: 12 psi_i = delta_irr + 12 sum over subsets containing i, for
    each i, plus kappa_1 = sum(psi) - sum over all subsets.  Genus 2: the
    single pulled-back relation 5 kappa_1 = delta_irr + 7 (genus 1+1 sum)
    corrected by markings.  Genus 3: empty; the only relations are the
    identifications already absorbed by divisor canonicalization.
    """
    if g not in (1, 2, 3):
        raise UnsupportedGenusError(f"no reference relation set for genus {g}")
    basis = tuple(divisor_generators(g, n))
    provenance = Provenance(g=g, n=n, a_vec=None, r_mode="reference")
    phi = PhiExponent.of(Fraction(0))
    scale = ScaleFactor(0, 1)
    relations: list[Relation] = []

    if g == 1:
        sep_classes = [d for d in basis if d.kind == "delta_sep"]
        for i in range(1, n + 1):
            coeffs: dict[DivisorClass, Fraction] = {
                psi(i): Fraction(12),
                delta_irr(): Fraction(-1),
            }
            for d in sep_classes:
                if i in d.markings:
                    coeffs[d] = Fraction(-12)
            relations.append(Relation(coeffs, phi, scale, provenance))
        coeffs = {kappa1(): Fraction(1)}
        for i in range(1, n + 1):
            coeffs[psi(i)] = Fraction(-1)
        for d in sep_classes:
            coeffs[d] = Fraction(1)
        relations.append(Relation(coeffs, phi, scale, provenance))

    elif g == 2:
        base = Relation(
            coefficients={
                kappa1(): Fraction(5),
                delta_irr(): Fraction(-1),
                delta_sep(1, frozenset()): Fraction(-7),
            },
            phi_exponent=phi,
            scale=scale,
            provenance=Provenance(g=2, n=0, a_vec=None, r_mode="reference"),
        )
        relations.append(pullback_genus2(base, n))

    return RelationSet(basis=basis, relations=relations)


@dataclass(frozen=True)
class SpanReport:
    equal: bool
    rank_left: int
    rank_right: int
    rank_union: int


def spans_equal(a: RelationSet, b: RelationSet) -> SpanReport:
    """Whether two relation sets span the same subspace over the rationals."""
    if a.basis != b.basis:
        raise BasisMismatchError("relation sets use different generator bases")
    rank_left = a.rank()
    rank_right = b.rank()
    rows = [v for v in a.vectors() + b.vectors() if any(x != 0 for x in v)]
    if rows:
        rank_union, _ = rank_and_solve(RationalMatrix(rows))
    else:
        rank_union = 0
    return SpanReport(
        equal=rank_left == rank_right == rank_union,
        rank_left=rank_left,
        rank_right=rank_right,
        rank_union=rank_union,
    )


def admissible_leg_vectors(g: int, n: int, r: int, D: int = 1) -> list[tuple[int, ...]]:
    """Leg vectors whose relation is potentially nonzero: the degree gate
    passes and the topological parity condition sum(a) = g - 1 + D mod r - 1
    holds.  In genus 1 these are exactly the n unit vectors."""
    out = []
    for a_vec in iter_product(range(r - 1), repeat=n):
        report = phi_degree(g, D, a_vec, r)
        if not report.relation_exists:
            continue
        if (sum(a_vec) - (g - 1) - D) % (r - 1) != 0:
            continue
        out.append(a_vec)
    return out


def ppz_relation_set(g: int, n: int, r: int) -> RelationSet:
    """The full relation set this construction yields for (g, n, r).

    Genus 1: the n fixed-r assembled relations together with the relations
    extracted from the symbolic-in-r assembly for each leg choice (the fixed-r
    relations alone span one dimension less).  Genus 2: the single relation on
    the unmarked space, pulled back when n > 0; never assembled directly with
    markings.  Genus 3: whatever the admissible leg vectors give (nothing).
    Zero relations are dropped.
    """
    basis = tuple(divisor_generators(g, n))
    relations: list[Relation] = []
    if g == 2:
        try:
            base = assemble_relation(2, 0, (), r)
        except DegreeGateError:
            base = None
        if base is not None and not base.is_zero():
            relations.append(pullback_genus2(base, n) if n else base)
    else:
        for a_vec in admissible_leg_vectors(g, n, r):
            rel = assemble_relation(g, n, a_vec, r)
            if not rel.is_zero():
                relations.append(rel)
            if g == 1:
                symbolic = assemble_relation(g, n, a_vec, symbolic=True)
                relations.extend(extract_r_coefficients(symbolic).relations)
    return RelationSet(basis=basis, relations=relations)


# ---------------------------------------------------------------------------
# The determinant of the genus-1 leg/kappa system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SystemDetReport:
    """Determinant of the (n+1)x(n+1) genus-1 system matrix and comparisons.

    reference_value is the closed form -(1-r)^n (2-r)^2 / 4; product_form is
    -((r-1)(r-2)/2)^n, which is what elimination actually yields.  The two
    agree only at n = 2 (and for even n at r = 4).
    """

    n: int
    r_mode: Union[int, str]
    det: Coefficient
    reference_value: Coefficient
    residual: Coefficient
    matches_reference: bool
    product_form_value: Coefficient
    matches_product_form: bool


def _system_matrix(n: int, diag: Coefficient, off: Coefficient, one, minus_one):
    rows = []
    for i in range(n):
        row = [off] * n + [-off]
        row[i] = diag
        rows.append(row)
    rows.append([one] * n + [minus_one])
    return rows


def system_matrix_det(
    n: int, r: int | None = None, *, symbolic: bool = False
) -> SystemDetReport:
    """Determinant of the genus-1 system expressing each psi and kappa_1 in
    boundary terms: rows i = 1..n carry (r-1) P_1(r,1) on the diagonal,
    (r-1) P_1(r,0) off it and minus that in the kappa column; the last row is
    (1, ..., 1, -1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    from .cohft import p_polynomial, p_polynomial_symbolic

    if symbolic:
        rv = RPoly.variable()
        p1_1 = p_polynomial_symbolic(1, 1)
        p1_0 = p_polynomial_symbolic(1, 0)
        diag = (rv - 1) * p1_1
        off = (rv - 1) * p1_0
        matrix = RationalMatrix(
            _system_matrix(n, diag, off, RPoly((1,)), RPoly((-1,)))
        )
        det = determinant(matrix)
        reference = (RPoly((1,)) - rv) ** n * (RPoly((2,)) - rv) ** 2 * Fraction(-1, 4)
        product_form = ((rv - 1) * (rv - 2) * Fraction(1, 2)) ** n * Fraction(-1)
        r_mode: Union[int, str] = SYMBOLIC
    else:
        if r is None or r < 3:
            raise ValueError("numeric mode needs r >= 3")
        diag = (r - 1) * p_polynomial(1, 1, r)
        off = (r - 1) * p_polynomial(1, 0, r)
        matrix = RationalMatrix(
            _system_matrix(n, diag, off, Fraction(1), Fraction(-1))
        )
        det = determinant(matrix)
        reference = Fraction(-((1 - r) ** n) * (2 - r) ** 2, 4)
        product_form = -Fraction((r - 1) * (r - 2), 2) ** n
        r_mode = r
    residual = det - reference
    return SystemDetReport(
        n=n,
        r_mode=r_mode,
        det=det,
        reference_value=reference,
        residual=residual,
        matches_reference=_is_zero(residual),
        product_form_value=product_form,
        matches_product_form=_is_zero(det - product_form),
    )
