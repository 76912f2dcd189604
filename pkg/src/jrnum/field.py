"""Good triples (a, b, r) and the field descriptor derived from them.

A good triple fixes a totally real field tower; the descriptor carries the
invariants every downstream computation needs: the factorization of b, the
exponent lcm N, the square factors u of b+a and v of b-a, the odd radical t
of b, and cos(theta) = a/b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .numeth import Factorization, factor, square_part


@dataclass(frozen=True)
class GoodTriple:
    a: int
    b: int
    r: int


class BadTripleError(ValueError):
    """Carries the full list of violated goodness conditions."""

    def __init__(self, a: int, b: int, r: int, violations: tuple[str, ...]):
        self.violations = violations
        super().__init__(f"({a}, {b}, {r}) is not good: " + "; ".join(violations))


@dataclass(frozen=True)
class GoodnessReport:
    a: int
    b: int
    r: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def triple(self) -> GoodTriple | None:
        return GoodTriple(self.a, self.b, self.r) if self.ok else None


def check_good(a: int, b: int, r: int) -> GoodnessReport:
    """Check every goodness condition; the report lists all failures."""
    bad: list[str] = []
    if not (0 < a < b):
        bad.append("0 < a < b")
    if b >= 1 and a >= 1 and gcd(a, b) != 1:
        bad.append("gcd(a, b) = 1")
    if b < 1 or b % 4 != 0:
        bad.append("4 divides b")
    if r < 2:
        bad.append("r >= 2")
    if b >= 1 and r >= 1 and b % r != 0:
        bad.append("r divides b")
    if b >= 1 and r >= 1:
        fb = factor(b).as_dict()
        v2 = fb.get(2, 0)
        if gcd(v2 - 1, r) != 1:
            bad.append("v2(b) - 1 coprime to r")
        for p, e in sorted(fb.items()):
            if p != 2 and gcd(e, r) != 1:
                bad.append(f"v_{p}(b) coprime to r")
    return GoodnessReport(a, b, r, tuple(bad))


@dataclass(frozen=True)
class FieldDescriptor:
    """Derived invariants of a good triple."""

    triple: GoodTriple
    b_fact: Factorization
    big_n: int
    u: int
    v: int
    t: int
    cos_theta: Fraction

    @property
    def a(self) -> int:
        return self.triple.a

    @property
    def b(self) -> int:
        return self.triple.b

    @property
    def r(self) -> int:
        return self.triple.r

    @property
    def v2b(self) -> int:
        return self.b_fact.exponent(2)

    @property
    def odd_factors(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, e) for p, e in self.b_fact.factors if p != 2)


def describe(triple: GoodTriple) -> FieldDescriptor:
    """Compute N, u, v, t, and cos(theta) for a good triple."""
    fb = factor(triple.b)
    v2 = fb.exponent(2)
    odd_exps = [e for p, e in fb.factors if p != 2]
    big_n = lcm(v2 - 1, *odd_exps) if odd_exps else v2 - 1
    u, _ = square_part(triple.b + triple.a)
    v, _ = square_part(triple.b - triple.a)
    t = 1
    for p, _ in fb.factors:
        if p != 2:
            t *= p
    return FieldDescriptor(triple, fb, big_n, u, v, t, Fraction(triple.a, triple.b))


def descriptor(a: int, b: int, r: int) -> FieldDescriptor:
    """Validate (a, b, r) and describe it; raises BadTripleError on failure."""
    report = check_good(a, b, r)
    if not report.ok:
        raise BadTripleError(a, b, r, report.violations)
    return describe(GoodTriple(a, b, r))


def valid_r_values(b: int) -> list[int]:
    """Divisors r >= 2 of b that make (a, b, r) good for coprime a."""
    if b % 4 != 0:
        return []
    fb = factor(b).as_dict()
    v2 = fb[2]
    out = []
    for r in range(2, b + 1):
        if b % r:
            continue
        if gcd(v2 - 1, r) != 1:
            continue
        if all(gcd(e, r) == 1 for p, e in fb.items() if p != 2):
            out.append(r)
    return out


def iter_good_triples(bmax: int):
    """Yield every good triple with b <= bmax, sorted by (b, a, r)."""
    for b in range(4, bmax + 1, 4):
        rs = valid_r_values(b)
        if not rs:
            continue
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            for r in rs:
                yield GoodTriple(a, b, r)
