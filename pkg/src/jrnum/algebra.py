"""Exact arithmetic in the cosine basis of K_n and the CM tower above it.

Elements of K_n are written as lambda_0 + sum lambda_k cos(k*theta/n) with
rational coefficients; the tower L_n carries them as rational combinations of
alpha^(k/n) and omega*alpha^(k/n), where alpha = (a + omega)/b and
omega^2 = a^2 - b^2.  That representation makes traces, products, and
characteristic polynomials exact, so algebraic integrality can be decided two
independent ways: by the valuation lattice conditions and by the integrality
of the characteristic polynomial of multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np
from gmpy2 import mpq

from .field import FieldDescriptor
from .lattice import JRResult, shortest_vector, sk_membership
from .numeth import Surd, ceil_sqrt, factor, surd_of_square

#: integrality_charpoly works on a 2n-dimensional matrix; refuse beyond this.
DEFAULT_CHARPOLY_LEVEL_CAP = 64

#: jr_witnesses keeps denominators within this cap before widening the window.
DEFAULT_WITNESS_LEVEL_CAP = 64


class ResourceCapError(RuntimeError):
    """A computation would exceed its configured size cap."""


# ----------------------------------------------------------------------
# elements of K_n in the cosine basis (sparse coefficient storage)


@dataclass(frozen=True, eq=False)
class CosElement:
    """lambda_0 + sum over k >= 1 of lambda_k * cos(k*theta/n)."""

    n: int
    coeffs: tuple[tuple[int, Fraction], ...]  # sorted, nonzero entries only

    def coeff(self, k: int) -> Fraction:
        for i, c in self.coeffs:
            if i == k:
                return c
        return Fraction(0)

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return self.coeffs

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def dense(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.n
        for k, c in self.coeffs:
            out[k] = c
        return tuple(out)

    def reduced(self) -> frozenset[tuple[Fraction, Fraction]]:
        """Level-independent form: {(k/n, coeff)}; equal iff same field element."""
        return frozenset((Fraction(k, self.n), c) for k, c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CosElement):
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self) -> int:
        return hash(self.reduced())

    def __neg__(self) -> "CosElement":
        return CosElement(self.n, tuple((k, -c) for k, c in self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs:
            term = str(c) if k == 0 else f"{c}*cos({k}theta/{self.n})"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def cos_element(n: int, coeffs) -> CosElement:
    """Build a CosElement from a sequence, mapping, or (index, value) pairs."""
    if n < 1:
        raise ValueError("level n must be >= 1")
    if isinstance(coeffs, dict):
        pairs = coeffs.items()
    elif coeffs and isinstance(coeffs[0], tuple):
        pairs = coeffs
    else:
        pairs = enumerate(coeffs)
    acc: dict[int, Fraction] = {}
    for k, c in pairs:
        if not 0 <= k < n:
            raise ValueError(f"coefficient index {k} outside [0, {n})")
        c = Fraction(c)
        if c:
            acc[k] = acc.get(k, Fraction(0)) + c
    return CosElement(n, tuple(sorted((k, c) for k, c in acc.items() if c)))


def constant(c) -> CosElement:
    return cos_element(1, {0: Fraction(c)})


def two_cos(n: int, t: int, lam, mu, const=0) -> CosElement:
    """const + lam*cos(t*theta/n) + mu*cos((n-t)*theta/n), merged when t = n-t."""
    if not 1 <= t <= n - 1:
        raise ValueError("t must lie in [1, n-1]")
    return cos_element(n, [(0, Fraction(const)), (t, Fraction(lam)), (n - t, Fraction(mu))])


def lift(e: CosElement, m: int) -> CosElement:
    """The same field element written at level n*m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return cos_element(e.n * m, [(k * m, c) for k, c in e.items()])


def _require_level(desc: FieldDescriptor, n: int) -> None:
    # degree hypotheses need n to divide a power of r
    for p, _ in factor(n).factors:
        if desc.r % p:
            raise ValueError(f"level {n} does not divide a power of r = {desc.r}")


# ----------------------------------------------------------------------
# the tower L_n: coordinates over the basis alpha^(k/n) * {1, omega}


@dataclass(frozen=True)
class TowerElement:
    n: int
    coords: tuple[tuple[Fraction, Fraction], ...]  # (p_k, q_k) for alpha^(k/n)


def tower_constant(n: int, c) -> TowerElement:
    coords = [(Fraction(0), Fraction(0))] * n
    coords[0] = (Fraction(c), Fraction(0))
    return TowerElement(n, tuple(coords))


def embed(desc: FieldDescriptor, e: CosElement) -> TowerElement:
    """Exact image via cos(k*theta/n) = alpha^(k/n)/2 + conj(alpha)*alpha^((n-k)/n)/2."""
    n = e.n
    a, b = desc.a, desc.b
    acc = [[Fraction(0), Fraction(0)] for _ in range(n)]
    for k, c in e.items():
        if k == 0:
            acc[0][0] += c
            continue
        half = c / 2
        acc[k][0] += half
        acc[n - k][0] += half * Fraction(a, b)
        acc[n - k][1] -= half * Fraction(1, b)
    return TowerElement(n, tuple((p, q) for p, q in acc))


def tower_mul(desc: FieldDescriptor, x: TowerElement, y: TowerElement) -> TowerElement:
    """Exact product; omega^2 = a^2 - b^2 and alpha^((n+j)/n) = alpha * alpha^(j/n)."""
    if x.n != y.n:
        raise ValueError(f"mismatched levels {x.n} and {y.n}")
    n = x.n
    a, b = desc.a, desc.b
    D = a * a - b * b
    acc = [[Fraction(0), Fraction(0)] for _ in range(n)]
    for j1, (p1, q1) in enumerate(x.coords):
        if not p1 and not q1:
            continue
        for j2, (p2, q2) in enumerate(y.coords):
            if not p2 and not q2:
                continue
            p = p1 * p2 + q1 * q2 * D
            q = p1 * q2 + q1 * p2
            j = j1 + j2
            if j >= n:
                j -= n
                p, q = Fraction(p * a + q * D, b), Fraction(p + q * a, b)
            acc[j][0] += p
            acc[j][1] += q
    return TowerElement(n, tuple((p, q) for p, q in acc))


def tower_add_const(x: TowerElement, c) -> TowerElement:
    coords = list(x.coords)
    coords[0] = (coords[0][0] + Fraction(c), coords[0][1])
    return TowerElement(x.n, tuple(coords))


def tower_trace(x: TowerElement) -> Fraction:
    """Normalized trace: alpha^(k/n) for k != 0 and omega all have trace zero."""
    return x.coords[0][0]


def tower_is_rational(x: TowerElement) -> bool:
    return x.coords[0][1] == 0 and all(
        p == 0 and q == 0 for p, q in x.coords[1:]
    )


# ----------------------------------------------------------------------
# traces in the cosine basis


def trace_avg(e: CosElement) -> Fraction:
    """Normalized trace; every cos(k*theta/n) with k >= 1 has trace zero."""
    return e.coeff(0)


def trace_avg_square(desc: FieldDescriptor, e: CosElement) -> Fraction:
    """Exact normalized trace of e^2.

    Closed form lambda_0^2 + (1/2) * sum over k >= 1 of
    lambda_k^2 + lambda_k * lambda_{n-k} * a/b; the k = n/2 term enters the
    sum once, matching the product trace table.
    """
    total = e.coeff(0) ** 2
    half = Fraction(1, 2)
    for k, c in e.items():
        if k == 0:
            continue
        total += half * (c * c + c * e.coeff(e.n - k) * desc.cos_theta)
    return total


# ----------------------------------------------------------------------
# dual integrality tests


def integrality_valuations(desc: FieldDescriptor, e: CosElement) -> bool:
    """Valuation characterization: lambda_0 integral and coefficient pairs in S_k."""
    _require_level(desc, e.n)
    if e.coeff(0).denominator != 1:
        return False
    n, N = e.n, desc.big_n
    support = set()
    for k, _ in e.items():
        if k:
            support.add(k)
            support.add(n - k)
    for ell in sorted(support):
        # ell/n falls strictly inside (k/N, (k+1)/N) because gcd(n, N) = 1
        k_idx = (ell * N) // n
        if not sk_membership(desc, k_idx, e.coeff(ell), e.coeff(n - ell)):
            return False
    return True


def _mult_matrix(desc: FieldDescriptor, g: TowerElement) -> list[list[Fraction]]:
    """Matrix of multiplication by g on the basis alpha^(j/n) * {1, omega}."""
    n = g.n
    a, b = desc.a, desc.b
    D = a * a - b * b
    d = 2 * n
    M = [[Fraction(0)] * d for _ in range(d)]
    for jp in range(n):
        for c in (0, 1):
            col = 2 * jp + c
            for j0, (p, q) in enumerate(g.coords):
                if not p and not q:
                    continue
                j = j0 + jp
                if j >= n:
                    j -= n
                    p, q = Fraction(p * a + q * D, b), Fraction(p + q * a, b)
                if c == 1:
                    p, q = q * D, p
                M[2 * j][col] += p
                M[2 * j + 1][col] += q
    return M


def _charpoly_monic(M: list[list[Fraction]]) -> list[mpq]:
    """Coefficients of det(xI - M), ascending, via exact Hessenberg reduction."""
    d = len(M)
    H = [[mpq(x.numerator, x.denominator) for x in row] for row in M]
    zero, one = mpq(0), mpq(1)
    for j in range(d - 2):
        piv_row = None
        for i in range(j + 1, d):
            if H[i][j]:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != j + 1:
            H[j + 1], H[piv_row] = H[piv_row], H[j + 1]
            for row in H:
                row[j + 1], row[piv_row] = row[piv_row], row[j + 1]
        piv = H[j + 1][j]
        for i in range(j + 2, d):
            if H[i][j]:
                f = H[i][j] / piv
                rowi, rowp = H[i], H[j + 1]
                for col in range(j, d):
                    rowi[col] -= f * rowp[col]
                for rr in range(d):
                    H[rr][j + 1] += f * H[rr][i]
    # characteristic polynomials of the leading principal blocks
    polys: list[list[mpq]] = [[one]]
    for m in range(1, d + 1):
        prev = polys[m - 1]
        pm = [zero] * (m + 1)
        hm = H[m - 1][m - 1]
        for idx, cv in enumerate(prev):
            pm[idx + 1] += cv
            pm[idx] -= hm * cv
        prod = one
        for i in range(1, m):
            prod *= H[m - i][m - i - 1]
            if not prod:
                break
            coeff = H[m - 1 - i][m - 1] * prod
            if coeff:
                for idx, cv in enumerate(polys[m - 1 - i]):
                    pm[idx] -= coeff * cv
        polys.append(pm)
    return polys[d]


def integrality_charpoly(
    desc: FieldDescriptor, e: CosElement, nmax: int = DEFAULT_CHARPOLY_LEVEL_CAP
) -> bool:
    """Oracle: e is an algebraic integer iff the characteristic polynomial of
    multiplication by e on the 2n-dimensional rational coordinate space has
    integer coefficients."""
    _require_level(desc, e.n)
    if e.n > nmax:
        raise ResourceCapError(f"charpoly level {e.n} exceeds cap {nmax}")
    coeffs = _charpoly_monic(_mult_matrix(desc, embed(desc, e)))
    return all(c.denominator == 1 for c in coeffs)


# ----------------------------------------------------------------------
# numeric conjugates


def theta_of(desc: FieldDescriptor) -> float:
    return math.acos(desc.a / desc.b)


def conjugates(desc: FieldDescriptor, e: CosElement, digits: int | None = None):
    """The n conjugate values lambda_0 + sum lambda_k cos(k(theta + 2*pi*t)/n).

    Rotation indices are reduced exactly (k*t mod n), so float64 evaluation
    keeps absolute errors near 1e-15 even for large n; pass `digits` for an
    mpmath evaluation at that working precision instead.
    """
    n = e.n
    if digits is None:
        th = theta_of(desc)
        t = np.arange(n, dtype=np.int64)
        vals = np.full(n, float(e.coeff(0)), dtype=np.float64)
        for k, c in e.items():
            if k == 0:
                continue
            m = (k * t) % n
            vals = vals + float(c) * np.cos(k * th / n + (2.0 * math.pi / n) * m)
        return vals
    import mpmath

    with mpmath.workdps(digits):
        th = mpmath.acos(mpmath.mpf(desc.a) / desc.b)
        out = []
        for tt in range(n):
            s = mpmath.mpf(0)
            for k, c in e.items():
                cm = mpmath.mpf(c.numerator) / c.denominator
                if k == 0:
                    s += cm
                else:
                    m = (k * tt) % n
                    s += cm * mpmath.cos(k * th / n + 2 * mpmath.pi * m / n)
            out.append(s)
        return out


def max_conjugate_bound(desc: FieldDescriptor, lam, mu) -> Surd:
    """Exact sqrt(N(lam, mu)); no conjugate of lam*cos(t*theta/n) +
    mu*cos((n-t)*theta/n) can exceed it in absolute value."""
    from .lattice import quad_form

    return surd_of_square(quad_form(desc, Fraction(lam), Fraction(mu)))


def find_large_conjugate(
    desc: FieldDescriptor,
    e: CosElement,
    target: float,
    eps: float,
    digits: int | None = None,
) -> int | None:
    """Smallest rotation index t whose conjugate is >= target - eps."""
    vals = conjugates(desc, e, digits)
    thr = target - eps
    if digits is None:
        hits = np.nonzero(vals >= thr)[0]
        return int(hits[0]) if hits.size else None
    for i, v in enumerate(vals):
        if v >= thr:
            return i
    return None


# ----------------------------------------------------------------------
# spread lower bounds


@dataclass(frozen=True)
class SpreadCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class SpreadReport:
    spread: float
    trace: Fraction
    trace_square: Fraction
    rho: Fraction | None
    checks: tuple[SpreadCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def spread_checks(
    desc: FieldDescriptor,
    e: CosElement,
    digits: int | None = None,
    tol: float = 1e-9,
) -> SpreadReport:
    """Numeric conjugate spread against the exact trace lower bounds.

    With T(e) = 0 the spread is at least 2*sqrt(T(e^2)); when additionally
    T(e^3) = 0 (decided exactly in the tower) it is at least
    2*sqrt(2*sqrt(rho)) with rho = T((e^2 - T(e^2))^2).
    """
    vals = conjugates(desc, e, digits)
    dc = float(max(vals) - min(vals))
    tr = trace_avg(e)
    t2 = trace_avg_square(desc, e)
    checks: list[SpreadCheck] = []
    rho = None
    if tr == 0:
        bound1 = 2.0 * math.sqrt(t2)
        checks.append(
            SpreadCheck(
                "spread >= 2*sqrt(T(e^2))",
                dc >= bound1 - tol,
                f"spread = {dc:.12g}, bound = {bound1:.12g}",
            )
        )
        g = embed(desc, e)
        g2 = tower_mul(desc, g, g)
        if tower_trace(tower_mul(desc, g2, g)) == 0:
            te2 = tower_trace(g2)
            h = tower_add_const(g2, -te2)
            rho = tower_trace(tower_mul(desc, h, h))
            bound2 = 2.0 * math.sqrt(2.0 * math.sqrt(rho))
            checks.append(
                SpreadCheck(
                    "spread >= 2*sqrt(2*sqrt(rho))",
                    dc >= bound2 - tol,
                    f"spread = {dc:.12g}, bound = {bound2:.12g}",
                )
            )
    return SpreadReport(dc, tr, t2, rho, tuple(checks))


# ----------------------------------------------------------------------
# explicit elements witnessing the JR number


def _admissible_ts(n: int, k: int, N: int) -> list[int]:
    """t coprime to n with t/n inside (k/N, (k+1)/N), closest to center first.

    t = n - t is excluded: the two coefficients must land in distinct slots.
    """
    center = Fraction(2 * k + 1, 2 * N)
    width = Fraction(1, 2 * N)
    ranked = []
    for t in range(1, n):
        if gcd(t, n) != 1 or 2 * t == n:
            continue
        d = abs(Fraction(t, n) - center)
        if d < width:
            ranked.append((d, t))
    ranked.sort()
    return [t for _, t in ranked]


def jr_witnesses(
    desc: FieldDescriptor,
    count: int,
    result: JRResult | None = None,
    level_cap: int = DEFAULT_WITNESS_LEVEL_CAP,
) -> list[CosElement]:
    """`count` distinct algebraic integers with all conjugates in [0, JR].

    Each is ceil(s) + lam*cos(t*theta/n) + mu*cos((n-t)*theta/n) for the first
    minimizing pair (lam, mu) in S_k, with n = r^e and t/n inside the k-th
    window.  Denominators sweep round-robin over the levels within level_cap,
    best-ranked t first, so successive witnesses climb through the levels; the
    window widens only once every level inside it is exhausted.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    res = result if result is not None else shortest_vector(desc)
    w = res.witnesses[0]
    c0 = ceil_sqrt(res.s_squared)
    N, r = desc.big_n, desc.r

    levels: list[list] = []  # [n, ts, next index]
    e = 0

    def push_next_level(ignore_cap: bool) -> None:
        nonlocal e
        for _ in range(64):
            e += 1
            n = r**e
            if not ignore_cap and n > level_cap and levels:
                return
            ts = _admissible_ts(n, w.k, N)
            if ts:
                levels.append([n, ts, 0])
                return
        raise ResourceCapError("no admissible witness denominator found")

    push_next_level(ignore_cap=True)
    while r ** (e + 1) <= level_cap:
        push_next_level(ignore_cap=False)

    out: list[CosElement] = []
    while len(out) < count:
        emitted = False
        for lev in levels:
            n, ts, ptr = lev
            if ptr < len(ts):
                lev[2] += 1
                out.append(two_cos(n, ts[ptr], w.x, w.y, const=c0))
                emitted = True
                if len(out) == count:
                    return out
        if not emitted:
            push_next_level(ignore_cap=True)
    return out
