"""Property suites behind the `verify` command; tests reuse them directly.

Each suite returns CheckResult items; a suite passes when every item does.
All sampling flows from a single seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import algebra, lattice
from .field import FieldDescriptor

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _levels(r: int, nmax: int) -> list[int]:
    """Levels n <= nmax dividing a power of r (every prime of n divides r)."""
    out = []
    for n in range(1, nmax + 1):
        m = n
        for p in range(2, n + 1):
            while m % p == 0:
                if r % p:
                    m = 0
                    break
                m //= p
            if m <= 1:
                break
        if m == 1:
            out.append(n)
    return out


def random_cos_element(
    rng: random.Random, n: int, max_num: int = 8, dens: tuple[int, ...] = (1, 2, 4)
) -> algebra.CosElement:
    coeffs = {
        k: Fraction(rng.randint(-max_num, max_num), rng.choice(dens)) for k in range(n)
    }
    return algebra.cos_element(n, coeffs)


def random_rational(rng: random.Random, max_num: int = 64) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.choice((1, 2, 3, 4, 6, 8)))


def lattice_suite(
    desc: FieldDescriptor,
    samples: int = 200,
    seed: int = DEFAULT_SEED,
    tol: float = 1e-9,
) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    N = desc.big_n
    uv2 = 2 * desc.u * desc.v

    # membership in valuation form vs divisibility form on the scaled integers
    bad = 0
    for _ in range(samples):
        k = rng.randrange(N)
        spec = lattice.sk_integer_form(desc, k)
        x, y = random_rational(rng), random_rational(rng)
        direct = lattice.sk_membership(desc, k, x, y)
        X, Y = uv2 * x, uv2 * y
        integral = (
            X.denominator == 1
            and Y.denominator == 1
            and spec.contains(X.numerator, Y.numerator)
        )
        bad += direct != integral
    # also a small exhaustive window on the coarse grid itself
    for k in range(N):
        spec = lattice.sk_integer_form(desc, k)
        for i in range(-4, 5):
            for j in range(-4, 5):
                X, Y = i * spec.dx, j * spec.dy
                direct = lattice.sk_membership(
                    desc, k, Fraction(X, uv2), Fraction(Y, uv2)
                )
                bad += direct != spec.contains(X, Y)
    out.append(CheckResult("membership matches integer form", bad == 0, f"{bad} mismatches"))

    bad = 0
    for _ in range(samples):
        k = rng.randrange(N)
        x, y = random_rational(rng), random_rational(rng)
        bad += lattice.sk_membership(desc, k, x, y) != lattice.sk_membership(
            desc, N - 1 - k, y, x
        )
    out.append(CheckResult("swap symmetry S_k <-> S_{N-1-k}", bad == 0, f"{bad} mismatches"))

    anchor = lattice.sk_membership(desc, 0, Fraction(4 * desc.t), Fraction(0))
    out.append(CheckResult("(4t, 0) lies in S_0", anchor, f"t = {desc.t}"))

    bad = 0
    floor_ratio = 1 - desc.cos_theta
    for _ in range(samples):
        x, y = random_rational(rng), random_rational(rng)
        if lattice.quad_form(desc, x, y) < floor_ratio * (x * x + y * y):
            bad += 1
    out.append(
        CheckResult(
            "N(x,y) >= (1 - a/b)(x^2 + y^2)", bad == 0, f"{bad} violations"
        )
    )

    base = lattice.shortest_vector(desc)
    reordered = lattice.shortest_vector(desc, k_order=tuple(reversed(range(N))))
    tightened = lattice.shortest_vector(desc, initial_cap=base.s_squared)
    same = base == reordered == tightened
    out.append(
        CheckResult(
            "enumeration order and cap tightening are irrelevant",
            same,
            f"s^2 = {base.s_squared}",
        )
    )

    bounds = lattice.verify_bounds(desc, base)
    out.append(
        CheckResult(
            "all s^2 bounds and conditional equalities hold",
            bounds.ok,
            "; ".join(c.name for c in bounds.checks if c.applicable and not c.passed)
            or "all pass",
        )
    )
    return out


def algebra_suite(
    desc: FieldDescriptor,
    samples: int = 200,
    seed: int = DEFAULT_SEED,
    nmax: int = 8,
    tol: float = 1e-9,
) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    levels = _levels(desc.r, nmax)

    disagree = trace_bad = exact_bad = 0
    for _ in range(samples):
        n = rng.choice(levels)
        e = random_cos_element(rng, n)
        if algebra.integrality_valuations(desc, e) != algebra.integrality_charpoly(desc, e):
            disagree += 1
        conj = algebra.conjugates(desc, e)
        if abs(float(sum(conj)) / n - algebra.trace_avg(e)) > tol:
            trace_bad += 1
        t2 = algebra.trace_avg_square(desc, e)
        if abs(float(sum(v * v for v in conj)) / n - t2) > tol:
            trace_bad += 1
        g = algebra.embed(desc, e)
        if algebra.tower_trace(algebra.tower_mul(desc, g, g)) != t2:
            exact_bad += 1
    out.append(
        CheckResult(
            "valuation test agrees with charpoly oracle", disagree == 0, f"{disagree} of {samples}"
        )
    )
    out.append(
        CheckResult("conjugate means match exact traces", trace_bad == 0, f"{trace_bad} failures")
    )
    out.append(
        CheckResult(
            "tower trace of e^2 equals closed formula", exact_bad == 0, f"{exact_bad} failures"
        )
    )

    bad = 0
    for _ in range(samples):
        n = rng.choice([n for n in levels if n >= 2])
        t = rng.randrange(1, n)
        lam, mu = Fraction(rng.randint(-6, 6)), Fraction(rng.randint(-6, 6))
        e = algebra.two_cos(n, t, lam, mu)
        bound = float(algebra.max_conjugate_bound(desc, lam, mu))
        if any(abs(v) > bound + tol for v in algebra.conjugates(desc, e)):
            bad += 1
    out.append(
        CheckResult("conjugates bounded by sqrt(N(lam, mu))", bad == 0, f"{bad} violations")
    )

    bad = 0
    for n in [n for n in levels if n in (2, 4, 8)]:
        for k in range(1, n):
            for lam in (-2, -1, 1, 2):
                for mu in (-2, -1, 1, 2):
                    e = algebra.two_cos(n, k, lam, mu)
                    sq = algebra.tower_mul(
                        desc, algebra.embed(desc, e), algebra.embed(desc, e)
                    )
                    if algebra.tower_is_rational(sq) != (2 * k == n):
                        bad += 1
    out.append(
        CheckResult(
            "square is rational exactly when 2k = n", bad == 0, f"{bad} violations"
        )
    )

    bad = 0
    for _ in range(max(10, samples // 10)):
        n = rng.choice(levels)
        xs = [algebra.embed(desc, random_cos_element(rng, n, max_num=3)) for _ in range(3)]
        one = algebra.tower_constant(n, 1)
        ab = algebra.tower_mul(desc, xs[0], xs[1])
        if ab != algebra.tower_mul(desc, xs[1], xs[0]):
            bad += 1
        if algebra.tower_mul(desc, ab, xs[2]) != algebra.tower_mul(
            desc, xs[0], algebra.tower_mul(desc, xs[1], xs[2])
        ):
            bad += 1
        if algebra.tower_mul(desc, one, xs[0]) != xs[0]:
            bad += 1
    out.append(
        CheckResult("tower product commutative, associative, unital", bad == 0, f"{bad} failures")
    )

    result = lattice.shortest_vector(desc)
    jr = float(result.jr)
    bad = 0
    for e in algebra.jr_witnesses(desc, 5, result=result):
        if not algebra.integrality_valuations(desc, e):
            bad += 1
        if not algebra.integrality_charpoly(desc, e):
            bad += 1
        conj = algebra.conjugates(desc, e)
        if min(conj) < -tol or max(conj) > jr + tol:
            bad += 1
    out.append(
        CheckResult(
            "witnesses are integral with conjugates in [0, JR]", bad == 0, f"{bad} failures"
        )
    )

    bad = 0
    for _ in range(5):
        n = rng.choice([n for n in levels if n >= 2])
        ks = [t for t in range(1, n) if math.gcd(t, n) == 1]
        t = rng.choice(ks)
        e = algebra.two_cos(n, t, 4, -4)
        rep = algebra.spread_checks(desc, e, tol=tol)
        if not rep.ok:
            bad += 1
    out.append(CheckResult("spread lower bounds hold", bad == 0, f"{bad} failures"))
    return out


def run_all(
    desc: FieldDescriptor,
    samples: int = 200,
    seed: int = DEFAULT_SEED,
    nmax: int = 8,
    tol: float = 1e-9,
) -> list[CheckResult]:
    return lattice_suite(desc, samples, seed, tol) + algebra_suite(
        desc, samples, seed, nmax, tol
    )
