"""Congruence verifiers for the hypergeometric and binomial-sum families.

Every check computes both sides as exact rationals (no intermediate
truncation) and decides the congruence through the valuation-aware
`congruent`, so sums whose individual terms are not p-adic integers (the
1/(k+1) weights at k = p-1, the s = 2p-1 tail terms) are handled correctly.
Each verifier returns a CheckResult carrying residue or valuation witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import (
    InvalidPrime,
    NotPAdicInteger,
    PAdicContext,
    Rat,
    congruent,
    is_prime,
    legendre,
    mod_reduce,
    padic_valuation,
    rat_str,
)
from .sequences import (
    RVFamily,
    central_binomial_values,
    pair_binomial_values,
    rv_terms,
    s_values,
)


class OutOfRange(ValueError):
    """Raised when a sweep parameter is outside its documented range."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification, with enough data to reproduce it."""

    check_name: str
    parameters: dict[str, object]
    passed: bool
    lhs_witness: str
    rhs_witness: str
    modulus: str
    skipped: bool = field(default=False)

    def to_dict(self) -> dict[str, object]:
        return {
            "check_name": self.check_name,
            "parameters": dict(self.parameters),
            "pass": self.passed,
            "skipped": self.skipped,
            "lhs_witness": self.lhs_witness,
            "rhs_witness": self.rhs_witness,
            "modulus": self.modulus,
        }


def skipped_result(check_name: str, parameters: dict[str, object], reason: str) -> CheckResult:
    """A Skipped record for sweep points whose preconditions do not apply."""
    return CheckResult(
        check_name=check_name,
        parameters=parameters,
        passed=False,
        lhs_witness=reason,
        rhs_witness="",
        modulus="",
        skipped=True,
    )


def residue_witness(q: Rat, ctx: PAdicContext) -> str:
    """Residue string when q is a p-adic integer, exact a/b otherwise."""
    try:
        return str(mod_reduce(q, ctx))
    except NotPAdicInteger:
        return rat_str(q)


def _valuation_str(v: int | float) -> str:
    return "inf" if v == math.inf else str(v)


def _congruence_result(
    check_name: str,
    parameters: dict[str, object],
    lhs: Rat,
    rhs: Rat,
    ctx: PAdicContext,
) -> CheckResult:
    return CheckResult(
        check_name=check_name,
        parameters=parameters,
        passed=congruent(lhs, rhs, ctx),
        lhs_witness=residue_witness(lhs, ctx),
        rhs_witness=residue_witness(rhs, ctx),
        modulus=str(ctx),
    )


def _require_prime(p: int, minimum: int) -> None:
    if not is_prime(p):
        raise InvalidPrime(f"p = {p} is not prime")
    if p < minimum:
        raise OutOfRange(f"p = {p} is below the minimum prime {minimum}")


_SUPPORTED_X = (Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 4), Fraction(-1, 6))


def _require_supported_x(x: Rat) -> Fraction:
    x = Fraction(x)
    if x not in _SUPPORTED_X:
        raise OutOfRange(f"x = {rat_str(x)} is not one of -1/2, -1/3, -1/4, -1/6")
    return x


def verify_rv(fam: RVFamily, p: int) -> CheckResult:
    """sum_{k<p} (a)_k (1-a)_k / (1)_k^2 against the Legendre symbol, mod p^2."""
    _require_prime(p, 5)
    ctx = PAdicContext(p, 2)
    lhs = sum(rv_terms(fam.a, p), Fraction(0))
    rhs = Fraction(legendre(fam.discriminant, p))
    return _congruence_result("rv", {"family": fam.label, "p": p}, lhs, rhs, ctx)


def verify_lemma_2p(fam: RVFamily, p: int) -> CheckResult:
    """The same hypergeometric sum taken to 2p-1 terms, against its 5/4-style constant."""
    _require_prime(p, 5)
    ctx = PAdicContext(p, 2)
    lhs = sum(rv_terms(fam.a, 2 * p), Fraction(0))
    rhs = fam.lemma2_constant * legendre(fam.discriminant, p)
    return _congruence_result("lemma2p", {"family": fam.label, "p": p}, lhs, rhs, ctx)


def _weighted_s_square_sum(x: Rat, p: int) -> Fraction:
    # sum_{k<p} (2k+1) s_k(x)^2
    sv = s_values(x, p - 1)
    return sum(((2 * k + 1) * sv[k] * sv[k] for k in range(p)), Fraction(0))


def verify_sun_p4(fam: RVFamily, p: int) -> CheckResult:
    """sum_{k<p} (2k+1) s_k(x)^2 against constant * Legendre * p^2, mod p^4."""
    _require_prime(p, 5)
    ctx = PAdicContext(p, 4)
    lhs = _weighted_s_square_sum(fam.sun_x, p)
    rhs = fam.sun_constant * legendre(fam.discriminant, p) * p * p
    return _congruence_result("sun-p4", {"family": fam.label, "p": p}, lhs, rhs, ctx)


def verify_guo_bb1(x: Rat, p: int) -> CheckResult:
    """The mod-p^4 reduction of the weighted s_k^2 sum to a double binomial sum.

    Checks sum_{k<p} (2k+1) s_k(x)^2 ==
    p^2 * sum_{k<p} sum_{j<=k} (-1)^k/(k+1) C(x+k,2k) C(x,j) C(x+j,j) C(2k,j+k)
    modulo p^4, for any odd prime p and p-adic integer x.  The k = p-1 weight
    has valuation -1, so the comparison must stay valuation-aware.
    """
    if p == 2 or not is_prime(p):
        raise InvalidPrime(f"p = {p} is not an odd prime")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPAdicInteger(f"x = {rat_str(x)} is not a p-adic integer for p = {p}")
    ctx = PAdicContext(p, 4)
    lhs = _weighted_s_square_sum(x, p)
    w = central_binomial_values(x, p - 1)
    u = pair_binomial_values(x, p - 1)
    total = Fraction(0)
    for k in range(p):
        inner = sum((u[j] * math.comb(2 * k, j + k) for j in range(k + 1)), Fraction(0))
        total += Fraction((-1) ** k, k + 1) * w[k] * inner
    rhs = p * p * total
    return _congruence_result("guo-bb1", {"x": rat_str(x), "p": p}, lhs, rhs, ctx)


def verify_cc5(x: Rat, p: int) -> CheckResult:
    """The summation-order-exchanged form of the same mod-p^4 reduction.

    Checks sum_{k<p} (2k+1) s_k(x)^2 ==
    p^2 * sum_{s<=2p-2} sum_{k<p} (-1)^k/(k+1) C(2k,s) C(s,k) C(x,s) C(x+s,s)
    modulo p^4.
    """
    _require_prime(p, 5)
    x = _require_supported_x(x)
    ctx = PAdicContext(p, 4)
    lhs = _weighted_s_square_sum(x, p)
    u = pair_binomial_values(x, 2 * p - 2)
    total = Fraction(0)
    for s in range(2 * p - 1):
        inner = sum(
            (
                Fraction((-1) ** k * math.comb(2 * k, s) * math.comb(s, k), k + 1)
                for k in range(p)
            ),
            Fraction(0),
        )
        total += inner * u[s]
    rhs = p * p * total
    return _congruence_result("cc5", {"x": rat_str(x), "p": p}, lhs, rhs, ctx)


def verify_cc7(s: int, p: int) -> CheckResult:
    """Partial rows of the alternating 1/(k+1) binomial sum, mod p^2.

    For p <= s <= 2p-2:
    sum_{k<p} (-1)^k/(k+1) C(2k,s) C(s,k) == (-1)^s (-1 + 2p/(s+1)).
    """
    _require_prime(p, 5)
    if not p <= s <= 2 * p - 2:
        raise OutOfRange(f"s = {s} outside [p, 2p-2] = [{p}, {2 * p - 2}]")
    ctx = PAdicContext(p, 2)
    lhs = sum(
        (
            Fraction((-1) ** k * math.comb(2 * k, s) * math.comb(s, k), k + 1)
            for k in range(p)
        ),
        Fraction(0),
    )
    rhs = (-1) ** s * (Fraction(2 * p, s + 1) - 1)
    return _congruence_result("cc7", {"s": s, "p": p}, lhs, rhs, ctx)


def verify_cc8_fact(x: Rat, p: int) -> CheckResult:
    """v_p( C(x, 2p-1) * C(x+2p-1, 2p-1) ) >= 2 for the four supported x."""
    _require_prime(p, 5)
    x = _require_supported_x(x)
    u = pair_binomial_values(x, 2 * p - 1)[2 * p - 1]
    v = padic_valuation(u, p)
    return CheckResult(
        check_name="cc8-fact",
        parameters={"x": rat_str(x), "p": p},
        passed=v >= 2,
        lhs_witness=_valuation_str(v),
        rhs_witness="2",
        modulus=f"{p}^2",
    )


def verify_cc9(x: Rat, p: int) -> CheckResult:
    """v_p( sum_{s=p}^{2p-1} (-1)^s/(s+1) C(x,s) C(x+s,s) ) >= 1.

    The s = 2p-1 term alone has a p in its 1/(s+1) weight, so only the
    valuation form of this statement is meaningful.
    """
    _require_prime(p, 5)
    x = _require_supported_x(x)
    u = pair_binomial_values(x, 2 * p - 1)
    tail = sum(
        (Fraction((-1) ** s, s + 1) * u[s] for s in range(p, 2 * p)), Fraction(0)
    )
    v = padic_valuation(tail, p)
    return CheckResult(
        check_name="cc9",
        parameters={"x": rat_str(x), "p": p},
        passed=v >= 1,
        lhs_witness=_valuation_str(v),
        rhs_witness="1",
        modulus=f"{p}^1",
    )


def verify_cc10(x: Rat, p: int) -> CheckResult:
    """The collapsed two-window form of the weighted s_k^2 congruence.

    Checks sum_{k<p} (2k+1) s_k(x)^2 ==
    p^2 * ( 2 sum_{s<p} (-1)^s C(x,s) C(x+s,s) - sum_{s<2p} (-1)^s C(x,s) C(x+s,s) )
    modulo p^4.
    """
    _require_prime(p, 5)
    x = _require_supported_x(x)
    ctx = PAdicContext(p, 4)
    lhs = _weighted_s_square_sum(x, p)
    u = pair_binomial_values(x, 2 * p - 1)
    head = sum(((-1) ** s * u[s] for s in range(p)), Fraction(0))
    full = sum(((-1) ** s * u[s] for s in range(2 * p)), Fraction(0))
    rhs = p * p * (2 * head - full)
    return _congruence_result("cc10", {"x": rat_str(x), "p": p}, lhs, rhs, ctx)
