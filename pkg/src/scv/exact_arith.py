"""Exact rational scalars, p-adic valuation and congruence, primes, Legendre symbol.

The universal scalar is :class:`fractions.Fraction` (re-exported as ``Rat``),
which is always in canonical form: gcd(|numerator|, denominator) = 1 and
denominator >= 1.  Congruence is valuation-based so it stays meaningful for
rationals whose individual terms are not p-adic integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

INFINITY = math.inf


class InvalidPrime(ValueError):
    """Raised when an argument required to be (an odd) prime is not."""


class NotPAdicInteger(ValueError):
    """Raised when a rational with denominator divisible by p is reduced mod p^k."""


def rat(value: int | str | Rat, den: int | None = None) -> Rat:
    """Build a Rat from an int, a Fraction, or an 'a/b' / 'a' string."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def rat_str(q: Rat | int) -> str:
    """Canonical 'a/b' (or plain 'a') rendering, exact at any size."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; intended for desk scale (n <= 10**6)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Ascending primes p with lo <= p <= hi."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(hi) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * ((hi - p * p) // p + 1)
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(q: Rat | int, p: int) -> int | float:
    """v_p(q) = v_p(numerator) - v_p(denominator); +infinity for q = 0."""
    if not is_prime(p):
        raise InvalidPrime(f"p = {p} is not prime")
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


@dataclass(frozen=True)
class PAdicContext:
    """A prime p together with an exponent k, defining congruence mod p^k."""

    p: int
    k: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidPrime(f"p = {self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"exponent k must be >= 1, got {self.k}")

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"{self.p}^{self.k}"


def mod_reduce(q: Rat | int, ctx: PAdicContext) -> int:
    """Residue of a p-adic integer q in [0, p^k): numerator * denominator^-1 mod p^k."""
    q = Fraction(q)
    if q.denominator % ctx.p == 0:
        raise NotPAdicInteger(
            f"{rat_str(q)} has denominator divisible by {ctx.p}"
        )
    m = ctx.modulus
    return q.numerator * pow(q.denominator, -1, m) % m


def congruent(a: Rat | int, b: Rat | int, ctx: PAdicContext) -> bool:
    """True iff v_p(a - b) >= k.

    Valuation-based, so it is well-defined even when a and b are not
    themselves p-adic integers (only their difference matters).
    """
    return padic_valuation(Fraction(a) - Fraction(b), ctx.p) >= ctx.k


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion a^((p-1)/2) mod p.

    Returns 0 if p | a, +1 for a nonzero quadratic residue, -1 otherwise.
    Negative a is reduced mod p first; p must be an odd prime.
    """
    if p == 2 or not is_prime(p):
        raise InvalidPrime(f"p = {p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r
