"""Genus-2 imaginary hyperelliptic curves y^2 = f(x) and their Jacobians.

f is monic of degree 5 and squarefree over F_q, q odd, so there is a
single point at infinity and every divisor class has a unique reduced
Mumford representative [u, v] with u monic, deg u <= 2, deg v < deg u
and u | v^2 - f.  The neutral class is [1, 0].

Group operations run on raw coefficient lists (poly.raw_*) and only wrap
results, which keeps the exhaustive group-law sweeps in the test-suite
fast enough to be routine.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    InvalidDivisorError,
    NegativeScalarError,
    NotMonicError,
    NotSquarefreeError,
    PointNotOnCurveError,
    WrongDegreeError,
)
from .field import FiniteField
from .poly import (
    Poly,
    raw_add,
    raw_divmod,
    raw_eval,
    raw_monic,
    raw_mul,
    raw_neg,
    raw_sub,
    raw_xgcd,
)

DEFAULT_BUDGET = 10**6


def find_squarefree_quintic(field: FiniteField) -> Poly:
    """Smallest monic squarefree quintic over the field.

    Candidates x^5 + c4*x^4 + ... + c0 are ordered lexicographically on
    the encoding tuple (c0, ..., c4), constant coefficient first, the
    same convention find_irreducible uses."""
    for tail in itertools.product(range(field.q), repeat=5):
        f = Poly(field, (*tail, 1))
        if f.is_squarefree():
            return f
    raise AssertionError("unreachable: squarefree quintics exist over any field")


class AffinePoint(NamedTuple):
    """Affine curve point; coordinates are element encodings, so tuple
    order doubles as the canonical point order."""

    x: int
    y: int


class MumfordDivisor:
    """Reduced Mumford pair [u, v].

    Construction enforces the shape constraints (u monic, deg u <= 2,
    deg v < deg u, neutral is exactly [1, 0]); whether u | v^2 - f holds
    is curve-specific and checked by HyperellipticCurve.is_valid_divisor.
    """

    __slots__ = ("u", "v")

    def __init__(self, u: Poly, v: Poly):
        if not isinstance(u, Poly) or not isinstance(v, Poly):
            raise InvalidDivisorError("u and v must be Poly instances")
        if u.field != v.field:
            raise FieldMismatchError("u and v over different fields")
        if not u.is_monic:
            raise InvalidDivisorError(f"u = {u} is not monic")
        if u.degree > 2:
            raise InvalidDivisorError(f"deg u = {u.degree} > 2 is not reduced")
        if v.degree >= u.degree:
            raise InvalidDivisorError(
                f"deg v = {v.degree} must be below deg u = {u.degree}"
            )
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("MumfordDivisor is immutable")

    @property
    def weight(self) -> int:
        return self.u.degree

    @property
    def is_zero(self) -> bool:
        return self.u.degree == 0

    def __eq__(self, other):
        if isinstance(other, MumfordDivisor):
            return self.u == other.u and self.v == other.v
        return NotImplemented

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"[{self.u}, {self.v}]"


class HyperellipticCurve:
    """y^2 = f(x) with monic squarefree f of degree 5 over an odd-
    characteristic field."""

    __slots__ = ("field", "f", "_fraw", "_sqrt", "_points", "_jacobian")

    def __init__(self, field: FiniteField, f):
        if isinstance(f, str):
            f = Poly.from_string(field, f)
        elif not isinstance(f, Poly):
            f = Poly(field, f)
        if f.field != field:
            raise FieldMismatchError(f"f is over {f.field!r}, not {field!r}")
        if f.degree != 5:
            raise WrongDegreeError(f"deg f = {f.degree}, need exactly 5")
        if not f.is_monic:
            raise NotMonicError("f must be monic")
        if not f.is_squarefree():
            raise NotSquarefreeError(f"f = {f} has a repeated root")
        self.field = field
        self.f = f
        self._fraw = list(f.coeffs)
        self._sqrt = None
        self._points = None
        self._jacobian = None

    # -- points ---------------------------------------------------------------

    def _sqrt_table(self) -> list[list[int]]:
        """sqrt[r] = ascending list of y with y*y == r."""
        if self._sqrt is None:
            K = self.field
            table: list[list[int]] = [[] for _ in range(K.q)]
            mul = K._mul
            for y in range(K.q):
                table[mul(y, y)].append(y)
            self._sqrt = table
        return self._sqrt

    def points(self, budget: int | None = None) -> tuple[AffinePoint, ...]:
        """All affine points, ordered by (x, y) encodings."""
        # budget is judged on the work estimate, not on cache warmth, so
        # the outcome of a call does not depend on what ran before it
        if budget is not None and self.field.q > budget:
            raise BudgetExceededError(
                f"point enumeration needs q = {self.field.q} evaluations, "
                f"budget is {budget}"
            )
        if self._points is None:
            K = self.field
            sqrt = self._sqrt_table()
            fraw = self._fraw
            out = []
            for x in range(K.q):
                for y in sqrt[raw_eval(K, fraw, x)]:
                    out.append(AffinePoint(x, y))
            self._points = tuple(out)
        return self._points

    def is_point(self, x: int, y: int) -> bool:
        K = self.field
        K._check(x)
        K._check(y)
        return K._mul(y, y) == self.f(x)

    # -- divisor construction --------------------------------------------------

    def zero(self) -> MumfordDivisor:
        return MumfordDivisor(Poly.one(self.field), Poly.zero(self.field))

    def divisor_from_point(self, point) -> MumfordDivisor:
        x, y = point
        if not self.is_point(x, y):
            raise PointNotOnCurveError(f"({x}, {y}) does not satisfy y^2 = f(x)")
        K = self.field
        return MumfordDivisor(Poly(K, (K._neg(x), 1)), Poly(K, (y,)))

    def is_valid_divisor(self, D) -> bool:
        """True when D is a reduced Mumford representative on this curve."""
        if isinstance(D, MumfordDivisor):
            u, v = D.u, D.v
        else:
            try:
                u, v = D
            except (TypeError, ValueError):
                return False
            if not isinstance(u, Poly) or not isinstance(v, Poly):
                return False
            if u.field != v.field or not u.is_monic or u.degree > 2:
                return False
            if v.degree >= u.degree:
                return False
        if u.field != self.field:
            return False
        diff = raw_sub(self.field, raw_mul(self.field, v.coeffs, v.coeffs), self._fraw)
        _, rem = raw_divmod(self.field, diff, u.coeffs)
        return not rem

    def _require_valid(self, D) -> None:
        if not isinstance(D, MumfordDivisor):
            raise InvalidDivisorError(f"{D!r} is not a MumfordDivisor")
        if not self.is_valid_divisor(D):
            raise InvalidDivisorError(f"{D!r} is not a divisor on {self!r}")

    # -- group law ------------------------------------------------------------

    def _cantor_raw(self, u1, v1, u2, v2) -> tuple[list, list]:
        """One full composition + reduction on raw lists."""
        K = self.field
        if len(u1) == 1:  # u1 == 1: neutral
            return list(u2), list(v2)
        if len(u2) == 1:
            return list(u1), list(v1)
        f = self._fraw

        d1, e1, e2 = raw_xgcd(K, u1, u2)
        vsum = raw_add(K, v1, v2)
        d, c1, c2 = raw_xgcd(K, d1, vsum)
        s1 = raw_mul(K, c1, e1)
        s2 = raw_mul(K, c1, e2)

        u, rem = raw_divmod(K, raw_mul(K, u1, u2), raw_mul(K, d, d))
        assert not rem, "composition: d^2 must divide u1*u2"

        t = raw_add(
            K,
            raw_mul(K, raw_mul(K, s1, u1), v2),
            raw_mul(K, raw_mul(K, s2, u2), v1),
        )
        t = raw_add(K, t, raw_mul(K, c2, raw_add(K, raw_mul(K, v1, v2), f)))
        t, rem = raw_divmod(K, t, d)
        assert not rem, "composition: d must divide the v numerator"
        _, v = raw_divmod(K, t, u)

        while len(u) - 1 > 2:
            unew, rem = raw_divmod(K, raw_sub(K, f, raw_mul(K, v, v)), u)
            assert not rem, "reduction: u must divide f - v^2"
            unew = raw_monic(K, unew)
            _, v = raw_divmod(K, raw_neg(K, v), unew)
            u = unew
        if u[-1] != 1:
            u = raw_monic(K, u)
        return u, v

    def _wrap_divisor(self, u: list, v: list) -> MumfordDivisor:
        return MumfordDivisor(Poly(self.field, u), Poly(self.field, v))

    def cantor_add(self, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
        self._require_valid(D1)
        self._require_valid(D2)
        u, v = self._cantor_raw(
            list(D1.u.coeffs), list(D1.v.coeffs), list(D2.u.coeffs), list(D2.v.coeffs)
        )
        return self._wrap_divisor(u, v)

    def neg(self, D: MumfordDivisor) -> MumfordDivisor:
        self._require_valid(D)
        return MumfordDivisor(D.u, -D.v)

    def scalar_mul(self, D: MumfordDivisor, m: int) -> MumfordDivisor:
        if not isinstance(m, int):
            raise NegativeScalarError(f"scalar must be an int, got {m!r}")
        if m < 0:
            raise NegativeScalarError(f"scalar must be >= 0, got {m}")
        self._require_valid(D)
        ru, rv = [1], []
        au, av = list(D.u.coeffs), list(D.v.coeffs)
        while m:
            if m & 1:
                ru, rv = self._cantor_raw(ru, rv, au, av)
            m >>= 1
            if m:
                au, av = self._cantor_raw(au, av, au, av)
        return self._wrap_divisor(ru, rv)

    # -- enumeration ----------------------------------------------------------

    def weil_interval(self) -> tuple[int, int]:
        """Closed integer interval certainly containing the group order."""
        s = math.sqrt(self.field.q)
        return (math.floor((s - 1) ** 4), math.ceil((s + 1) ** 4))

    def enumerate_jacobian(
        self, budget: int = DEFAULT_BUDGET
    ) -> tuple[MumfordDivisor, ...]:
        """Every reduced divisor, in canonical order: [1,0] first, then
        weight 1 following the point order, then weight 2 ordered by the
        coefficient vectors (u0, u1, v0, v1)."""
        K = self.field
        q = K.q
        upper = (math.sqrt(q) + 1) ** 4
        if upper > budget:
            raise BudgetExceededError(
                f"Jacobian may hold up to {math.ceil(upper)} classes, "
                f"budget is {budget}"
            )
        if self._jacobian is not None:
            return self._jacobian

        out: list[MumfordDivisor] = [self.zero()]
        for P in self.points(budget):
            out.append(self.divisor_from_point(P))

        sqrt = self._sqrt_table()
        add, sub, mul, neg, inv = K._add, K._sub, K._mul, K._neg, K._inv
        fraw = self._fraw
        wrap = self._wrap_divisor
        for b in range(q):  # u0
            for a in range(q):  # u1
                # f mod (x^2 + a*x + b) via x^k == A_k*x + B_k
                r1, r0 = 0, fraw[0]
                Ak, Bk = 1, 0  # k = 1
                for k in range(1, 6):
                    fk = 1 if k == 5 else fraw[k]
                    if fk:
                        r1 = add(r1, mul(fk, Ak))
                        r0 = add(r0, mul(fk, Bk))
                    if k < 5:
                        Ak, Bk = sub(Bk, mul(a, Ak)), neg(mul(b, Ak))
                # v = c*x + d with v^2 == f mod u:
                #   2cd - a c^2 = r1  and  d^2 - b c^2 = r0
                cand = []
                if r1 == 0:
                    for d in sqrt[r0]:
                        cand.append((d, 0))
                for c in range(1, q):
                    cc = mul(c, c)
                    d = mul(add(r1, mul(a, cc)), inv(add(c, c)))
                    if sub(mul(d, d), mul(b, cc)) == r0:
                        cand.append((d, c))
                cand.sort()
                for d, c in cand:
                    out.append(wrap([b, a, 1], [d, c] if c else ([d] if d else [])))
        self._jacobian = tuple(out)
        return self._jacobian

    def jacobian_order(self, budget: int = DEFAULT_BUDGET) -> int:
        return len(self.enumerate_jacobian(budget))

    def preload_enumeration(
        self,
        points: Iterable[AffinePoint],
        divisors: Sequence[MumfordDivisor] | None = None,
    ) -> None:
        """Install previously computed enumeration results (cache loads).

        Callers are expected to have validated the data; see cache.py.
        """
        self._points = tuple(AffinePoint(*P) for P in points)
        if divisors is not None:
            self._jacobian = tuple(divisors)

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, HyperellipticCurve):
            return self.field == other.field and self.f == other.f
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.f))

    def __repr__(self):
        return f"y^2 = {self.f} over {self.field!r}"
