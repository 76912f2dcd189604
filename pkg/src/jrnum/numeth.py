"""Exact integer and rational number-theory kernel.

Everything here is exact: rationals are `fractions.Fraction`, algebraic
values of the form c + q*sqrt(d) are carried symbolically as `Surd`, and
primality is decided deterministically for the supported input range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

# Exact rational scalar used throughout the package.
Rat = Fraction

# Deterministic Miller-Rabin with the first 12 prime bases is correct
# strictly below this bound (Sorenson & Webster), far beyond 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_VALID_BELOW = 3_317_044_064_679_887_385_961_981

#: factor() refuses inputs above this bound.
FACTOR_BUDGET = 1 << 64

_TRIAL_LIMIT = 10**6


class FactorBudgetError(RuntimeError):
    """Input exceeds the configured factoring or primality budget."""


def is_prime(n: int) -> bool:
    """Deterministic primality test, valid for n below ~3.3e24."""
    if n >= _MR_VALID_BELOW:
        raise FactorBudgetError(f"{n} exceeds the deterministic primality range")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization with strictly increasing certified primes."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _brent_rho(n: int) -> int:
    """One nontrivial factor of an odd composite n, deterministic parameters."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorBudgetError(f"rho failed to split {n}")


@lru_cache(maxsize=8192)
def factor(n: int, budget: int = FACTOR_BUDGET) -> Factorization:
    """Factor a positive integer by trial division, then Brent's rho."""
    if n < 1:
        raise ValueError("factor() needs n >= 1")
    if n > budget:
        raise FactorBudgetError(f"{n} exceeds the factoring budget {budget}")
    out: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    d = 7
    # 2,4,2,4,6,2,6,4 wheel mod 30
    wheel = (4, 2, 4, 6, 2, 6, 4, 2)
    i = 0
    while d <= _TRIAL_LIMIT and d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += wheel[i]
        i = (i + 1) % 8
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        g = _brent_rho(m)
        stack.append(g)
        stack.append(m // g)
    return Factorization(n, tuple(sorted(out.items())))


def vp(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("p-adic valuation of zero is undefined")
    v = 0
    num = abs(x.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def square_part(n: int) -> tuple[int, int]:
    """Largest u with u*u dividing n, and the square-free core n/u^2."""
    if n < 1:
        raise ValueError("square_part() needs n >= 1")
    u = core = 1
    for p, e in factor(n).factors:
        u *= p ** (e // 2)
        if e % 2:
            core *= p
    return u, core


def is_squarefree(n: int) -> bool:
    return square_part(n)[0] == 1


def is_perfect_square(n: int) -> bool:
    """Exact square test; never factors, so it works well past FACTOR_BUDGET."""
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def rad_power(b: int, u: Fraction | int) -> int:
    """Product of p**ceil(e*u) over the prime powers p**e of b.

    For u in [0, 1] this is the least integer d such that d * b**(-u) has
    nonnegative valuation at every prime of b; rad_power(b, 0) == 1 and
    rad_power(b, 1) == b.
    """
    u = Fraction(u)
    if u < 0:
        raise ValueError("rad_power() needs u >= 0")
    out = 1
    for p, e in factor(b).factors:
        out *= p ** math.ceil(e * u)
    return out


def ceil_sqrt(r: Fraction | int) -> int:
    """Smallest integer c >= 0 with c*c >= r, computed without floats."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("ceil_sqrt() needs r >= 0")
    num, den = r.numerator, r.denominator
    c = isqrt(num // den)
    while c * c * den < num:
        c += 1
    while c > 0 and (c - 1) * (c - 1) * den >= num:
        c -= 1
    return c


def _round_half_even(x: Fraction) -> int:
    f = math.floor(x)
    r = x - f
    half = Fraction(1, 2)
    if r < half:
        return f
    if r > half:
        return f + 1
    return f if f % 2 == 0 else f + 1


@dataclass(frozen=True, eq=False)
class Surd:
    """Exact real number int_part + coeff * sqrt(radicand), radicand square-free."""

    int_part: int
    coeff: Fraction
    radicand: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff < 0:
            raise ValueError("Surd coefficient must be >= 0")
        if self.radicand < 1 or not is_squarefree(self.radicand):
            raise ValueError("Surd radicand must be a square-free positive integer")
        if self.coeff == 0 and self.radicand != 1:
            raise ValueError("zero coefficient requires radicand 1")

    def _key(self):
        if self.radicand == 1:
            return ("rat", Fraction(self.int_part) + self.coeff)
        return ("irr", self.int_part, self.coeff, self.radicand)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1 or self.coeff == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.int_part) + self.coeff

    def __float__(self) -> float:
        return self.int_part + float(self.coeff) * math.sqrt(self.radicand)

    def decimal(self, digits: int = 10) -> str:
        """Decimal rendering correct to the last digit (half-even rounding)."""
        if digits < 0:
            raise ValueError("digits must be >= 0")
        scale = 10**digits
        if self.is_rational:
            m = _round_half_even(self.as_fraction() * scale)
        else:
            # floor(x) and floor(2x) of the scaled irrational part decide the
            # rounding; x is irrational so an exact tie cannot occur.
            p, q = self.coeff.numerator, self.coeff.denominator
            m2 = p * p * scale * scale * self.radicand
            fl = isqrt(m2) // q
            dbl = isqrt(4 * m2) // q
            m = self.int_part * scale + fl + (1 if dbl == 2 * fl + 1 else 0)
        sign = "-" if m < 0 else ""
        m = abs(m)
        if digits == 0:
            return f"{sign}{m}"
        return f"{sign}{m // scale}.{m % scale:0{digits}d}"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.as_fraction())
        root = f"sqrt({self.radicand})"
        head = "" if self.coeff == 1 else f"{self.coeff}*"
        if self.int_part == 0:
            return f"{head}{root}"
        return f"{self.int_part} + {head}{root}"


def surd_of_square(s2: Fraction | int) -> Surd:
    """Exact square root of a nonnegative rational as a Surd with int_part 0."""
    s2 = Fraction(s2)
    if s2 < 0:
        raise ValueError("surd_of_square() needs s2 >= 0")
    if s2 == 0:
        return Surd(0, Fraction(0), 1)
    p, q = s2.numerator, s2.denominator
    w, core = square_part(p * q)
    return Surd(0, Fraction(w, q), core)


def signed_mod(a: int, b: int) -> int:
    """Representative of a mod b in [-b/2, b/2)."""
    if b < 1:
        raise ValueError("signed_mod() needs b >= 1")
    r = a % b
    if 2 * r >= b:
        r -= b
    return r


def minkowski_short_residue(a: int, b: int) -> int:
    """Nonzero u with |u| <= sqrt(b) and |signed_mod(u*a, b)| <= sqrt(b).

    Existence is a Minkowski lattice-point argument; brute force over
    1 <= u <= isqrt(b) suffices because residues of -u have the same
    magnitude.  Among the qualifying u the one with the smallest residue
    magnitude is returned (smallest u on ties).
    """
    if b < 1:
        raise ValueError("minkowski_short_residue() needs b >= 1")
    best_u, best_r = 0, b + 1
    for u in range(1, isqrt(b) + 1):
        r = abs(signed_mod(u * a, b))
        if r * r <= b and r < best_r:
            best_u, best_r = u, r
    if best_u == 0:
        raise AssertionError(f"no short residue for a={a}, b={b}")
    return best_u


def legendre(q: int, p: int) -> int:
    """Legendre symbol (q/p) for an odd prime p."""
    if p < 3 or p % 2 == 0:
        raise ValueError("legendre() needs an odd prime p")
    r = pow(q % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod_prime(q: int, p: int) -> int | None:
    """Smallest x with x*x = q mod p (odd prime p), or None for non-residues."""
    q %= p
    if q == 0:
        return 0
    if legendre(q, p) == -1:
        return None
    if p % 4 == 3:
        x = pow(q, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks with the smallest quadratic non-residue as generator.
        qq, s = p - 1, 0
        while qq % 2 == 0:
            qq //= 2
            s += 1
        z = 2
        while legendre(z, p) != -1:
            z += 1
        m, c, t, x = s, pow(z, qq, p), pow(q, qq, p), pow(q, (qq + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, x = t * c % p, x * b % p
    return min(x, p - x)


def hensel_sqrt(q: int, p: int, n: int) -> int | None:
    """Some x with x*x = q mod p**n, lifted from the least root mod p.

    q must be coprime to the odd prime p; returns None exactly when q is a
    quadratic non-residue mod p (a residue mod p stays one mod every p**n).
    """
    if p < 3 or not is_prime(p):
        raise ValueError("hensel_sqrt() needs an odd prime p")
    if n < 1:
        raise ValueError("hensel_sqrt() needs n >= 1")
    if q % p == 0:
        raise ValueError("hensel_sqrt() needs gcd(q, p) = 1")
    x = sqrt_mod_prime(q, p)
    if x is None:
        return None
    pk = p
    for _ in range(n - 1):
        inv = pow(2 * x, -1, p)
        t = ((q - x * x) // pk) * inv % p
        x += t * pk
        pk *= p
    x %= pk
    return min(x, pk - x)


def find_prime_qr(t: int, limit: int = 10**6) -> int | None:
    """Least prime p <= limit with p = 2 mod t, p = 3 mod 4, and 2t a square mod p.

    The residue class of p mod 8 is steered so quadratic reciprocity forces
    (2t/p) = +1: with eps the product over primes q | t of
    (-1)**((q-1)/2) * (2/q), take p = 7 mod 8 when eps = 1 and p = 3 mod 8
    when eps = -1, intersected with p = 2 mod t.
    """
    if t < 1 or t % 2 == 0 or not is_squarefree(t):
        raise ValueError("find_prime_qr() needs square-free odd t")
    eps = 1
    for q, _ in factor(t).factors:
        eps *= (-1) ** ((q - 1) // 2) * legendre(2, q)
    r8 = 7 if eps == 1 else 3
    x = r8
    while x % t != 2 % t:
        x += 8
    step = 8 * t
    while x <= limit:
        if is_prime(x):
            return x
        x += step
    return None
