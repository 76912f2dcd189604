"""Generators for the two explicit families of Julia Robinson numbers.

Family "sqrt2t": b = 2^(m-1) * t^n with a = b - 1 and r = 2t, which forces
s^2 = 8t and JR = ceil(2*sqrt(2t)) + 2*sqrt(2t).  Family "8t": b = 2^(n+1)*t
with a = 1 mod 2t chosen so b-a and b+a are square-free, which forces s = 4t
and JR = 8t.  Fields are kept pairwise distinct with an exact non-square
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .field import GoodTriple, check_good
from .numeth import Surd, ceil_sqrt, is_perfect_square, is_squarefree, surd_of_square

FAMILY_SQRT2T = "sqrt2t"
FAMILY_8T = "8t"


@dataclass(frozen=True)
class FamilyEntry:
    triple: GoodTriple
    predicted_jr: Surd
    family: str


def fields_distinct(t1: GoodTriple, t2: GoodTriple) -> bool:
    """True when (b1+a1)(b2+a2)*b1*b2 is not a perfect square.

    A non-square product certifies that the two towers are distinct fields;
    False only means the test is inconclusive, not that they coincide.
    Both r must be even for the certificate to apply.
    """
    if t1.r % 2 or t2.r % 2:
        raise ValueError("fields_distinct() needs even r on both triples")
    prod = (t1.b + t1.a) * (t2.b + t2.a) * t1.b * t2.b
    return not is_perfect_square(prod)


def squarefree_pair(b: int, k: int, eps: Fraction = Fraction(1, 2)) -> int | None:
    """Smallest a = 1 mod k with 1 <= a <= eps*b and b-a, b+a square-free."""
    if b < 1 or k < 1 or b % k:
        raise ValueError("squarefree_pair() needs k | b")
    a = 1
    bound = eps * b
    while a <= bound:
        if is_squarefree(b - a) and is_squarefree(b + a):
            return a
        a += k
    return None


def _sqrt2t_exponents(t: int):
    """Candidate exponents m for b = 2^(m-1) * t, ascending; n stays 1."""
    m = 3
    while True:
        if gcd(m - 2, 2 * t) == 1:
            yield m
        m += 1


def family_sqrt(t: int, count: int) -> list[FamilyEntry]:
    """Entries (b-1, b, 2t) with b = 2^(m-1)*t, pairwise distinct fields."""
    _check_t(t)
    if count < 0:
        raise ValueError("count must be >= 0")
    s = surd_of_square(8 * t)
    predicted = Surd(ceil_sqrt(8 * t), s.coeff, s.radicand)
    out: list[FamilyEntry] = []
    for m in _sqrt2t_exponents(t):
        if len(out) >= count:
            break
        b = 2 ** (m - 1) * t
        triple = GoodTriple(b - 1, b, 2 * t)
        if not check_good(*_fields(triple)).ok:
            continue
        if any(not fields_distinct(triple, prev.triple) for prev in out):
            continue
        out.append(FamilyEntry(triple, predicted, FAMILY_SQRT2T))
    return out


def family_8t(t: int, count: int) -> list[FamilyEntry]:
    """Entries (a, 2^(n+1)*t, 2t) with b-a, b+a square-free and b >= 2t+a."""
    _check_t(t)
    if count < 0:
        raise ValueError("count must be >= 0")
    predicted = Surd(4 * t, Fraction(4 * t), 1)
    out: list[FamilyEntry] = []
    n = 1
    while len(out) < count:
        if gcd(n, t) == 1:
            b = 2 ** (n + 1) * t
            a = squarefree_pair(b, 2 * t)
            if a is not None and b >= 2 * t + a:
                triple = GoodTriple(a, b, 2 * t)
                if check_good(*_fields(triple)).ok and all(
                    fields_distinct(triple, prev.triple) for prev in out
                ):
                    out.append(FamilyEntry(triple, predicted, FAMILY_8T))
        n += 2
        if n > 200:
            break
    return out


def exponent_pairs(t: int, count: int) -> list[tuple[int, int]]:
    """Pairs (m, n) whose values 2^m * t^n - 1 are pairwise non-square products.

    m - 2 and n are coprime to 2t; candidates ascend in m with n = 1 and a
    candidate is dropped if (2^m t - 1)(2^mi t - 1) is a perfect square for
    some accepted (mi, 1).
    """
    _check_t(t)
    if count < 0:
        raise ValueError("count must be >= 0")
    out: list[tuple[int, int]] = []
    for m in _sqrt2t_exponents(t):
        if len(out) >= count:
            break
        val = 2**m * t - 1
        if all(
            not is_perfect_square(val * (2**mi * t**ni - 1)) for mi, ni in out
        ):
            out.append((m, 1))
    return out


def _check_t(t: int) -> None:
    if t < 1 or t % 2 == 0 or not is_squarefree(t):
        raise ValueError("t must be a square-free odd positive integer")


def _fields(triple: GoodTriple) -> tuple[int, int, int]:
    return triple.a, triple.b, triple.r
