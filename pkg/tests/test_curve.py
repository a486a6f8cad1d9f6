"""Curve construction, point enumeration, Cantor arithmetic, Jacobian
enumeration (cross-checked against a naive scan oracle) and budgets."""

import pytest

from xjac.curve import (
    AffinePoint,
    HyperellipticCurve,
    MumfordDivisor,
    find_squarefree_quintic,
)
from xjac.errors import (
    BudgetExceededError,
    FieldMismatchError,
    InvalidDivisorError,
    NegativeScalarError,
    NotMonicError,
    NotSquarefreeError,
    PointNotOnCurveError,
    WrongDegreeError,
)
from xjac.field import finite_field
from xjac.poly import Poly
from xjac.stats import RandomSource


def naive_enumeration(curve):
    """Oracle: scan every (u, v) shape and keep pairs with u | v^2 - f.

    Independent of the production enumerator; only shares Poly division.
    """
    K = curve.field
    q = K.q
    out = [(Poly.one(K), Poly.zero(K))]
    for u0 in range(q):
        u = Poly(K, (u0, 1))
        for v0 in range(q):
            v = Poly(K, (v0,))
            if ((v * v - curve.f) % u).is_zero:
                out.append((u, v))
    for u0 in range(q):
        for u1 in range(q):
            u = Poly(K, (u0, u1, 1))
            for v0 in range(q):
                for v1 in range(q):
                    v = Poly(K, (v0, v1))
                    if ((v * v - curve.f) % u).is_zero:
                        out.append((u, v))
    return out


class TestConstruction:
    def test_rejects_bad_f(self, F7):
        with pytest.raises(WrongDegreeError):
            HyperellipticCurve(F7, "1,0,0,0,1")       # degree 4
        with pytest.raises(NotMonicError):
            HyperellipticCurve(F7, "1,0,0,0,0,2")
        with pytest.raises(NotSquarefreeError):
            HyperellipticCurve(F7, "0,0,0,0,0,1")     # x^5
        with pytest.raises(FieldMismatchError):
            HyperellipticCurve(F7, Poly(finite_field(11), (1, 0, 0, 0, 0, 1)))

    def test_accepts_poly_and_sequence(self, F7):
        a = HyperellipticCurve(F7, (1, 0, 0, 0, 0, 1))
        b = HyperellipticCurve(F7, Poly(F7, (1, 0, 0, 0, 0, 1)))
        assert a == b

    def test_find_squarefree_quintic(self, F7, F27):
        # every f with c0 = c1 = 0 is divisible by x^2, so the search
        # lands on x^5 + x, the first candidate after those
        assert find_squarefree_quintic(F7).to_string() == "0,1,0,0,0,1"
        assert find_squarefree_quintic(F27).to_string() == "0,1,0,0,0,1"


class TestPoints:
    def test_reference_curve_points(self, c7):
        assert c7.points() == (
            AffinePoint(0, 1), AffinePoint(0, 6),
            AffinePoint(1, 3), AffinePoint(1, 4),
            AffinePoint(5, 2), AffinePoint(5, 5),
            AffinePoint(6, 0),
        )

    def test_points_match_direct_scan(self, c9):
        K = c9.field
        expected = sorted(
            (x, y) for x in range(K.q) for y in range(K.q)
            if K.mul(y, y) == c9.f(x)
        )
        assert [tuple(P) for P in c9.points()] == expected

    def test_is_point(self, c7):
        assert c7.is_point(0, 1)
        assert not c7.is_point(0, 2)

    def test_divisor_from_point(self, c7):
        D = c7.divisor_from_point((0, 1))
        assert D.u.coeffs == (0, 1) and D.v.coeffs == (1,)
        with pytest.raises(PointNotOnCurveError):
            c7.divisor_from_point((0, 2))


class TestDivisorValidity:
    def test_neutral_is_valid(self, c7):
        assert c7.is_valid_divisor(c7.zero())

    def test_u_divides_rule(self, F7, c7):
        # v^2 - f = -x^5 and x^2 | x^5, so [x^2, 1] is a valid pair
        assert c7.is_valid_divisor((Poly(F7, (0, 0, 1)), Poly.one(F7)))
        # x^2 + 1 does not divide x^5 + 1 over F_7
        assert not c7.is_valid_divisor((Poly(F7, (1, 0, 1)), Poly.zero(F7)))

    def test_shape_violations_are_invalid(self, F7, c7):
        assert not c7.is_valid_divisor((Poly(F7, (0, 0, 2)), Poly.zero(F7)))
        assert not c7.is_valid_divisor("nonsense")
        assert not c7.is_valid_divisor((Poly(finite_field(11), (0, 1)), Poly.zero(finite_field(11))))

    def test_mumford_shape_enforced(self, F7):
        with pytest.raises(InvalidDivisorError):
            MumfordDivisor(Poly(F7, (0, 0, 0, 1)), Poly.zero(F7))  # deg 3
        with pytest.raises(InvalidDivisorError):
            MumfordDivisor(Poly(F7, (0, 2)), Poly.zero(F7))        # not monic
        with pytest.raises(InvalidDivisorError):
            MumfordDivisor(Poly(F7, (0, 1)), Poly(F7, (1, 1)))     # deg v too big


class TestCantor:
    def test_worked_addition(self, F7, c7):
        # [x, 1] + [x + 6, 3] on y^2 = x^5 + 1
        D1 = c7.divisor_from_point((0, 1))
        D2 = c7.divisor_from_point((1, 3))
        S = c7.cantor_add(D1, D2)
        assert S.u.coeffs == (0, 6, 1)   # x^2 + 6x
        assert S.v.coeffs == (1, 2)      # 2x + 1

    def test_worked_doubling(self, c7):
        D = c7.divisor_from_point((0, 1))
        S = c7.cantor_add(D, D)
        assert S.u.coeffs == (0, 0, 1)   # x^2
        assert S.v.coeffs == (1,)

    def test_point_plus_opposite_is_neutral(self, c7):
        D1 = c7.divisor_from_point((0, 1))
        D2 = c7.divisor_from_point((0, 6))
        assert c7.cantor_add(D1, D2).is_zero

    def test_neg(self, F7, c7):
        D = c7.cantor_add(
            c7.divisor_from_point((0, 1)), c7.divisor_from_point((1, 3))
        )
        N = c7.neg(D)
        assert N.u == D.u
        assert N.v.coeffs == (6, 5)      # -(2x + 1) = 5x + 6
        assert c7.cantor_add(D, N).is_zero

    def test_weight2_interpolation_semantics(self, c7):
        # adding two distinct non-opposite points gives u with those roots
        # and v through both points
        for P in [(0, 1), (1, 3)]:
            for Q in [(5, 2), (6, 0)]:
                D = c7.cantor_add(
                    c7.divisor_from_point(P), c7.divisor_from_point(Q)
                )
                K = c7.field
                assert D.u(P[0]) == 0 and D.u(Q[0]) == 0
                assert D.v(P[0]) == P[1] and D.v(Q[0]) == Q[1]

    def test_invalid_operand_rejected(self, F7, c7):
        ghost = MumfordDivisor(Poly(F7, (1, 0, 1)), Poly.zero(F7))
        with pytest.raises(InvalidDivisorError):
            c7.cantor_add(ghost, c7.zero())
        with pytest.raises(InvalidDivisorError):
            c7.cantor_add("no", c7.zero())


class TestEnumeration:
    def test_matches_naive_oracle_f7(self, c7):
        got = [(D.u, D.v) for D in c7.enumerate_jacobian()]
        assert sorted(
            ((tuple(u.coeffs), tuple(v.coeffs)) for u, v in got)
        ) == sorted(
            ((tuple(u.coeffs), tuple(v.coeffs)) for u, v in naive_enumeration(c7))
        )

    def test_matches_naive_oracle_f9(self, c9):
        got = {(D.u.coeffs, D.v.coeffs) for D in c9.enumerate_jacobian()}
        want = {(u.coeffs, v.coeffs) for u, v in naive_enumeration(c9)}
        assert got == want

    def test_orders(self, c7, c9, c11, c13, c27):
        assert c7.jacobian_order() == 50
        assert c9.jacobian_order() == 100
        assert c11.jacobian_order() == 88
        assert c13.jacobian_order() == 234
        assert c27.jacobian_order() == 684

    def test_ordering_contract(self, c7):
        J = c7.enumerate_jacobian()
        assert J[0].is_zero
        npts = len(c7.points())
        for i, P in enumerate(c7.points()):
            D = J[1 + i]
            assert D.weight == 1 and D == c7.divisor_from_point(P)
        keys = [
            (D.u.coeff(0), D.u.coeff(1), D.v.coeff(0), D.v.coeff(1))
            for D in J[1 + npts:]
        ]
        assert keys == sorted(keys)
        assert all(D.weight == 2 for D in J[1 + npts:])

    def test_all_enumerated_are_valid(self, c7, c9):
        for curve in (c7, c9):
            for D in curve.enumerate_jacobian():
                assert curve.is_valid_divisor(D)

    def test_weil_interval(self, c7, c9, c11, c13, c27):
        for curve in (c7, c9, c11, c13, c27):
            lo, hi = curve.weil_interval()
            assert lo <= curve.jacobian_order() <= hi


class TestGroupLaws:
    def test_closure_and_commutativity_exhaustive(self, c7):
        J = c7.enumerate_jacobian()
        table = {}
        for i, A in enumerate(J):
            for B in J[i:]:
                S = c7.cantor_add(A, B)
                assert c7.is_valid_divisor(S)
                table[(A, B)] = S
        for (A, B), S in table.items():
            assert c7.cantor_add(B, A) == S

    def test_identity_and_inverse_every_element(self, c7):
        zero = c7.zero()
        for D in c7.enumerate_jacobian():
            assert c7.cantor_add(D, zero) == D
            assert c7.cantor_add(D, c7.neg(D)) == zero

    def test_associativity_seeded_triples(self, c11):
        J = c11.enumerate_jacobian()
        rng = RandomSource(2024)
        n = len(J)
        for _ in range(1000):
            A, B, C = (J[rng.next_below(n)] for _ in range(3))
            assert c11.cantor_add(c11.cantor_add(A, B), C) == c11.cantor_add(
                A, c11.cantor_add(B, C)
            )

    def test_element_order_divides_group_order(self, c7):
        n = c7.jacobian_order()
        for D in c7.enumerate_jacobian():
            assert c7.scalar_mul(D, n).is_zero

    def test_scalar_mul_small_multiples(self, c7):
        D = c7.divisor_from_point((0, 1))
        acc = c7.zero()
        for k in range(12):
            assert c7.scalar_mul(D, k) == acc
            acc = c7.cantor_add(acc, D)

    def test_scalar_mul_rejects_negative(self, c7):
        with pytest.raises(NegativeScalarError):
            c7.scalar_mul(c7.zero(), -1)


class TestBudget:
    def test_enumeration_budget(self, F13):
        curve = HyperellipticCurve(F13, "1,2,0,0,0,1")
        with pytest.raises(BudgetExceededError):
            curve.enumerate_jacobian(budget=100)

    def test_budget_checked_before_cache(self, F7):
        curve = HyperellipticCurve(F7, "1,0,0,0,0,1")
        curve.enumerate_jacobian()  # warm the in-memory cache
        with pytest.raises(BudgetExceededError):
            curve.enumerate_jacobian(budget=10)
        with pytest.raises(BudgetExceededError):
            curve.points(budget=3)

    def test_points_budget(self, F7):
        curve = HyperellipticCurve(F7, "1,0,0,0,0,1")
        with pytest.raises(BudgetExceededError):
            curve.points(budget=6)
        assert len(curve.points(budget=7)) == 7
