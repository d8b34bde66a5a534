from fractions import Fraction

import pytest

from rspinrel.cohft import (
    PhiExponent,
    RSpinTheory,
    ScaleFactor,
    idempotent_check,
    p_polynomial,
    p_polynomial_symbolic,
    phi_degree,
    quantum_structure_constants,
    r_forward_entry,
    r_forward_matrix,
    r_inverse_entry,
    r_inverse_matrix,
    topological_value,
    witten_degree,
)
from rspinrel.rpoly import RPoly


def p1_closed(a, r):
    return Fraction(a * (r - 1 - a), 2) - Fraction((2 * r - 1) * (r - 2), 24)


class TestPPolynomial:
    def test_order_zero_is_one(self):
        for r in range(3, 8):
            for a in range(r - 1):
                assert p_polynomial(0, a, r) == 1

    def test_first_order_values(self):
        assert p_polynomial(1, 0, 3) == Fraction(-5, 24)
        assert p_polynomial(1, 1, 3) == Fraction(7, 24)

    def test_second_order_frozen_values(self):
        # Frozen from the direct double-sum of the recursion.
        assert p_polynomial(2, 0, 3) == Fraction(385, 1152)
        assert p_polynomial(2, 1, 3) == Fraction(-455, 1152)

    def test_closed_form_everywhere(self):
        for r in range(3, 13):
            for a in range(r - 1):
                assert p_polynomial(1, a, r) == p1_closed(a, r)

    def test_symmetry(self):
        for r in range(3, 13):
            for a in range(r - 1):
                partner = (r - 1 - a) % (r - 1)
                assert p_polynomial(1, a, r) == p_polynomial(1, partner, r)

    def test_row_sum_identity(self):
        for r in range(3, 13):
            total = sum(p_polynomial(1, a, r) for a in range(r - 1))
            assert total == Fraction((r - 1) * (r - 2), 24)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            p_polynomial(1, 5, 3)
        with pytest.raises(ValueError):
            p_polynomial(1, -1, 4)


class TestPSymbolic:
    def test_order_zero(self):
        assert p_polynomial_symbolic(0, 3) == RPoly((1,))

    def test_first_order_closed_form(self):
        r = RPoly.variable()
        for a in range(5):
            expected = (
                Fraction(a, 2) * (r - 1 - a)
                - (2 * r - 1) * (r - 2) * Fraction(1, 24)
            )
            assert p_polynomial_symbolic(1, a) == expected

    def test_second_order_degree_bound_holds(self):
        # The interpolation consistency sample would raise if degree 2m failed.
        poly = p_polynomial_symbolic(2, 1)
        assert poly.degree <= 4
        assert poly(3) == p_polynomial(2, 1, 3)


class TestRMatrixEntries:
    def test_order_zero_is_identity(self):
        theory = RSpinTheory(5)
        for a in range(4):
            for b in range(4):
                expected = Fraction(1 if a == b else 0)
                assert r_inverse_entry(0, a, b, theory) == expected
                assert r_forward_entry(0, a, b, theory) == expected

    def test_inverse_entry_values(self):
        theory = RSpinTheory(3)
        assert r_inverse_entry(1, 1, 0, theory) == Fraction(7, 24)
        assert r_inverse_entry(1, 0, 0, theory) == 0  # congruence fails

    def test_forward_entry_sign(self):
        theory = RSpinTheory(3)
        assert r_forward_entry(1, 1, 0, theory) == Fraction(-7, 24)

    def test_unit_column_vanishing_used_in_genus_3(self):
        # The entry with both indices 0 at order 1 is zero; this is what
        # kills the genus 1+2 separating graph.
        assert r_inverse_entry(1, 0, 0, RSpinTheory(3)) == 0

    def test_index_range_checked(self):
        theory = RSpinTheory(3)
        with pytest.raises(ValueError):
            r_inverse_entry(1, 2, 0, theory)


def matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


class TestRMatrixIdentities:
    def test_truncated_product_is_identity(self):
        # The uniform scalar factors out of each order, so the bare entries
        # must already satisfy sum_k R_k R^{-1}_{m-k} = 0 for m >= 1 (and
        # the order-0 product is the identity).
        for r in range(3, 9):
            theory = RSpinTheory(r)
            d = theory.dimension
            order_zero = matmul(r_forward_matrix(0, theory), r_inverse_matrix(0, theory))
            assert order_zero == [
                [Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)
            ]
            for m in (1, 2):
                total = [[Fraction(0)] * d for _ in range(d)]
                for k in range(m + 1):
                    prod = matmul(
                        r_forward_matrix(k, theory), r_inverse_matrix(m - k, theory)
                    )
                    for i in range(d):
                        for j in range(d):
                            total[i][j] += prod[i][j]
                assert all(x == 0 for row in total for x in row), (r, m)

    def test_symplectic_through_order_two(self):
        for r in range(3, 9):
            theory = RSpinTheory(r)
            d = theory.dimension
            eta = theory.metric_matrix()
            for m in (1, 2):
                total = [[Fraction(0)] * d for _ in range(d)]
                for k in range(m + 1):
                    sign = (-1) ** (m - k)
                    left = r_forward_matrix(k, theory)
                    right = r_forward_matrix(m - k, theory)
                    for a in range(d):
                        for b in range(d):
                            total[a][b] += sign * sum(
                                left[i][a] * eta[i][j] * right[j][b]
                                for i in range(d)
                                for j in range(d)
                            )
                assert all(x == 0 for row in total for x in row), (r, m)


class TestTopologicalValue:
    def test_genus_zero_triple(self):
        for r in (3, 4, 5):
            theory = RSpinTheory(r)
            value, _ = topological_value(0, (1, 0, r - 3), theory)
            assert value == 1

    def test_genus_one_values(self):
        theory = RSpinTheory(3)
        assert topological_value(1, (0, 0), theory)[0] == 2
        assert topological_value(1, (1, 0), theory)[0] == 0

    def test_phi_exponent(self):
        theory = RSpinTheory(5)
        _, phi = topological_value(2, (0,), theory)
        assert phi == PhiExponent.of(Fraction(3))  # (g-1)(r-2) = 1*3

    def test_unstable_raises(self):
        with pytest.raises(ValueError):
            topological_value(0, (0, 0), RSpinTheory(3))

    def test_separating_contraction(self):
        # Value of the glued vertex equals the metric contraction of the two
        # pieces; exponents match once the edge factor r-2 is credited.
        for r in (3, 4, 5):
            theory = RSpinTheory(r)
            cases = [
                (1, (0,), 1, (0,)),
                (1, (1, 0), 1, ()),
                (2, (0,), 1, (1,)),
            ]
            for g1, a1, g2, a2 in cases:
                if 2 * g1 - 2 + len(a1) + 1 <= 0 or 2 * g2 - 2 + len(a2) + 1 <= 0:
                    continue
                whole, _ = topological_value(g1 + g2, tuple(a1) + tuple(a2), theory)
                contraction = Fraction(0)
                for j in range(r - 1):
                    left, _ = topological_value(g1, tuple(a1) + (j,), theory)
                    right, _ = topological_value(g2, tuple(a2) + (r - 2 - j,), theory)
                    contraction += left * right
                assert contraction == whole

    def test_nonseparating_contraction(self):
        for r in (3, 4):
            theory = RSpinTheory(r)
            for g, a_vec in ((2, (0,)), (2, (1,)), (3, (0,))):
                whole, _ = topological_value(g, a_vec, theory)
                contraction = Fraction(0)
                for j in range(r - 1):
                    value, _ = topological_value(
                        g - 1, tuple(a_vec) + (j, r - 2 - j), theory
                    )
                    contraction += value
                assert contraction == whole


class TestQuantumProduct:
    def test_unit(self):
        for r in range(3, 7):
            sc = quantum_structure_constants(RSpinTheory(r))
            for b in range(r - 1):
                assert sc.product_index(0, b) == b
                assert sc.coefficient(b, 0, b) == 1

    def test_r3_square(self):
        sc = quantum_structure_constants(RSpinTheory(3))
        assert sc.product_index(1, 1) == 0

    def test_associative_commutative(self):
        for r in range(3, 7):
            sc = quantum_structure_constants(RSpinTheory(r))
            d = r - 1
            for a in range(d):
                for b in range(d):
                    assert sc.product_index(a, b) == sc.product_index(b, a)
                    for c in range(d):
                        assert sc.product_index(
                            sc.product_index(a, b), c
                        ) == sc.product_index(a, sc.product_index(b, c))


class TestIdempotents:
    def test_all_small_r(self):
        for r in range(3, 7):
            report = idempotent_check(RSpinTheory(r))
            assert report.ok, report.failures
            assert report.geometric_sums_ok and report.idempotent_identity_ok

    def test_r3_by_hand(self):
        # With the primitive square root of unity -1: f_0 = v_0 + v_1 and
        # f_1 = v_0 - v_1 multiply to zero, squares have coefficient 2.
        report = idempotent_check(RSpinTheory(3))
        assert report.ok


class TestDegrees:
    def test_witten_degree_values(self):
        assert witten_degree(2, 0, (), 3) == Fraction(1, 3)
        assert witten_degree(4, 0, (), 3) == 1
        assert witten_degree(1, 2, (1, 0), 3) == Fraction(1, 3)

    def test_witten_degree_validation(self):
        with pytest.raises(ValueError):
            witten_degree(1, 2, (1,), 3)
        with pytest.raises(ValueError):
            witten_degree(1, 1, (5,), 3)

    def test_phi_degree_examples(self):
        report = phi_degree(1, 1, (1, 0), 3)
        assert report.value == -2 and report.relation_exists and report.d_integral
        report = phi_degree(2, 1, (), 3)
        assert report.value == -2 and report.relation_exists and report.d_integral
        report = phi_degree(4, 1, (), 3)
        assert report.value == 0 and not report.relation_exists
        report = phi_degree(3, 1, (), 3)
        assert report.value == -1 and report.relation_exists and not report.d_integral


class TestDataTypes:
    def test_theory_validation(self):
        with pytest.raises(ValueError):
            RSpinTheory(2)
        theory = RSpinTheory(4)
        assert theory.dimension == 3
        assert theory.metric(0, 2) == 1
        assert theory.metric(0, 0) == 0

    def test_scale_factor(self):
        assert ScaleFactor(1, 1).combine(ScaleFactor(2, -1)) == ScaleFactor(3, -1)
        with pytest.raises(ValueError):
            ScaleFactor(-1, 1)
        with pytest.raises(ValueError):
            ScaleFactor(0, 2)

    def test_phi_exponent_addition(self):
        total = PhiExponent.of(Fraction(2)) + PhiExponent.of(Fraction(3))
        assert total == PhiExponent.of(Fraction(5))
