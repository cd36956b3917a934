"""Number and polynomial families used by the verifiers.

Definitions (all exact over Rat):

    pochhammer(x, k)        rising factorial x(x+1)...(x+k-1)
    gen_binomial(x, k)      C(x, k) = x(x-1)...(x-k+1)/k! for rational x
    d_n(x)                  sum_k C(n,k) C(x,k) 2^k          (degree n)
    s_n(x)                  sum_k C(n,k) C(x,k) C(x+k,k)     (degree 2n)
    S_n(x_0..x_n)           sum_k C(n+k,2k) C(2k,k) x_k      (linear form)
    f_k(x)                  sum_{j<=k} sum_{i<=j} C(x+j,k+j) C(x,i) C(k,j) C(j,i) 2^i
    rv_term(a, k)           (a)_k (1-a)_k / (1)_k^2
    signed_jacobi_term(x,s) (-x)_s (1+x)_s / (1)_s^2  ( = (-1)^s C(x,s) C(x+s,s) )

d_n(m) for integer m >= 0 counts Delannoy lattice paths; delannoy_oracle is an
independent dynamic-programming count used to cross-check it.

Each family has a symbolic path (UniPoly) and a numeric path (Rat at a point).
The *_values table builders produce whole columns with incremental Pochhammer
products, which keeps the congruence sweeps at O(p^2) rational operations.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Rat
from .poly import MultiPoly, UniPoly, shifted_binomial_poly


def pochhammer(x: Rat | int, k: int) -> Rat:
    """Rising factorial (x)_k; (x)_0 = 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        out *= x + i
    return out


def gen_binomial(x: Rat | int, k: int) -> Rat:
    """Generalized binomial C(x, k) for rational x and integer k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


def d_poly(n: int) -> UniPoly:
    """d_n as a polynomial in x (degree n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = UniPoly.zero()
    for k in range(n + 1):
        acc = acc + shifted_binomial_poly(0, k).scale(math.comb(n, k) * 2**k)
    return acc


def d_val(n: int, x: Rat | int) -> Rat:
    """d_n(x) by direct summation with incremental C(x, k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    b = Fraction(1)  # C(x, k)
    acc = Fraction(0)
    for k in range(n + 1):
        if k:
            b = b * (x - k + 1) / k
        acc += math.comb(n, k) * b * 2**k
    return acc


def s_poly(n: int) -> UniPoly:
    """s_n as a polynomial in x (degree 2n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = UniPoly.zero()
    for k in range(n + 1):
        acc = acc + pair_binomial_poly(k).scale(math.comb(n, k))
    return acc


@functools.lru_cache(maxsize=None)
def pair_binomial_poly(s: int) -> UniPoly:
    """C(x, s) * C(x+s, s) as a degree-2s UniPoly.

    The building block shared by s_n and the telescoping / summation-order
    identities.
    """
    return shifted_binomial_poly(0, s) * shifted_binomial_poly(s, s)


def s_val(n: int, x: Rat | int) -> Rat:
    """s_n(x) by direct summation with incremental binomial products."""
    if n < 0:
        raise ValueError("n must be >= 0")
    u = pair_binomial_values(x, n)
    return sum((math.comb(n, k) * u[k] for k in range(n + 1)), Fraction(0))


def s_values(x: Rat | int, kmax: int) -> list[Rat]:
    """[s_0(x), ..., s_kmax(x)] in O(kmax^2) rational operations."""
    u = pair_binomial_values(x, kmax)
    out: list[Fraction] = []
    row = [1]  # binomial row C(k, 0..k)
    for k in range(kmax + 1):
        out.append(sum((row[j] * u[j] for j in range(k + 1)), Fraction(0)))
        row = [1] + [row[j] + row[j + 1] for j in range(k)] + [1]
    return out


def pair_binomial_values(x: Rat | int, smax: int) -> list[Rat]:
    """[C(x,s) * C(x+s,s) for s = 0..smax], built incrementally."""
    x = Fraction(x)
    out = [Fraction(1)]
    b = Fraction(1)  # C(x, s)
    c = Fraction(1)  # C(x+s, s)
    for s in range(1, smax + 1):
        b = b * (x - s + 1) / s
        c = c * (x + s) / s
        out.append(b * c)
    return out


def central_binomial_values(x: Rat | int, kmax: int) -> list[Rat]:
    """[C(x+k, 2k) for k = 0..kmax], built incrementally."""
    x = Fraction(x)
    out = [Fraction(1)]
    w = Fraction(1)
    for k in range(1, kmax + 1):
        w = w * (x + k) * (x - k + 1) / ((2 * k) * (2 * k - 1))
        out.append(w)
    return out


def rv_term(a: Rat, k: int) -> Rat:
    """Hypergeometric summand (a)_k (1-a)_k / (1)_k^2."""
    num = pochhammer(a, k) * pochhammer(1 - Fraction(a), k)
    return num / pochhammer(1, k) ** 2


def rv_terms(a: Rat, count: int) -> list[Rat]:
    """First `count` values of rv_term(a, .), by incremental products."""
    a = Fraction(a)
    out: list[Fraction] = []
    t = Fraction(1)
    for k in range(count):
        out.append(t)
        t = t * (a + k) * (1 - a + k) / (k + 1) ** 2
    return out


def signed_jacobi_term(x: Rat, s: int) -> Rat:
    """(-x)_s (1+x)_s / (1)_s^2, equal to (-1)^s C(x,s) C(x+s,s)."""
    x = Fraction(x)
    return pochhammer(-x, s) * pochhammer(1 + x, s) / pochhammer(1, s) ** 2


def delannoy_oracle(m: int, n: int) -> int:
    """Lattice-path count from (0,0) to (m,n) with east, north and diagonal steps.

    Plain dynamic programming D(i,j) = D(i-1,j) + D(i,j-1) + D(i-1,j-1);
    independent oracle for d_val(n, m).
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    row = [1] * (n + 1)
    for _ in range(m):
        new = [1] * (n + 1)
        for j in range(1, n + 1):
            new[j] = row[j] + new[j - 1] + row[j - 1]
        row = new
    return row[n]


def schmidt_coefficient(n: int, k: int) -> int:
    """Weight C(n+k, 2k) * C(2k, k) of x_k in the linear Schmidt form."""
    return math.comb(n + k, 2 * k) * math.comb(2 * k, k)


def schmidt_linear_form(n: int, arity: int | None = None) -> MultiPoly:
    """S_n = sum_{k<=n} C(n+k,2k) C(2k,k) x_k as a linear MultiPoly.

    The natural arity is n+1 (variables x_0..x_n); a larger arity embeds the
    same form in a bigger ring.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if arity is None:
        arity = n + 1
    if arity < n + 1:
        raise ValueError(f"arity {arity} too small for S_{n}")
    terms = {}
    for k in range(n + 1):
        expo = tuple(1 if i == k else 0 for i in range(arity))
        terms[expo] = schmidt_coefficient(n, k)
    return MultiPoly(arity, terms)


def f_poly(k: int) -> UniPoly:
    """f_k(x) = sum_{j<=k} sum_{i<=j} C(x+j, k+j) C(x,i) C(k,j) C(j,i) 2^i.

    Integer-valued for every k; these interpolate d_n * s_n against the
    Schmidt weights: sum_k C(n+k,2k) C(2k,k) f_k = d_n * s_n.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    acc = UniPoly.zero()
    for j in range(k + 1):
        outer = shifted_binomial_poly(j, k + j).scale(math.comb(k, j))
        inner = UniPoly.zero()
        for i in range(j + 1):
            inner = inner + shifted_binomial_poly(0, i).scale(math.comb(j, i) * 2**i)
        acc = acc + outer * inner
    return acc


@dataclass(frozen=True)
class RVFamily:
    """One of the four hypergeometric families with its sweep constants.

    a is the hypergeometric parameter, discriminant the Legendre-symbol
    argument, lemma2_constant the mod-p^2 constant for sums to 2p-1, sun_x
    the evaluation point for the weighted s_k^2 sums and sun_constant their
    mod-p^4 constant (times the Legendre symbol times p^2).
    """

    label: str
    a: Fraction
    discriminant: int
    lemma2_constant: Fraction
    sun_x: Fraction
    sun_constant: Fraction


RV_FAMILIES: tuple[RVFamily, ...] = (
    RVFamily("1/2", Fraction(1, 2), -1, Fraction(5, 4), Fraction(-1, 2), Fraction(3, 4)),
    RVFamily("1/3", Fraction(1, 3), -3, Fraction(11, 9), Fraction(-1, 3), Fraction(7, 9)),
    RVFamily("1/4", Fraction(1, 4), -2, Fraction(19, 16), Fraction(-1, 4), Fraction(13, 16)),
    RVFamily("1/6", Fraction(1, 6), -1, Fraction(41, 36), Fraction(-1, 6), Fraction(31, 36)),
)


def family_by_label(label: str) -> RVFamily:
    for fam in RV_FAMILIES:
        if fam.label == label:
            return fam
    raise KeyError(f"unknown family {label!r}")
