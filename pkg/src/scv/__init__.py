"""scv: exact-arithmetic verification of binomial-sum supercongruences,
combinatorial identities, and integer-valued polynomial families.

Everything is computed over arbitrary-precision rationals; congruences are
decided by p-adic valuation, identities by canonical coefficient equality.
"""

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
    primes_in_range,
    rat,
)
from .poly import (
    ArityError,
    MultiPoly,
    NewtonExpansion,
    TermLimitExceeded,
    UniPoly,
    binomial_poly,
    is_integer_valued,
    newton_coefficients,
)
from .congruences import CheckResult, OutOfRange
from .sequences import RV_FAMILIES, RVFamily

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "CheckResult",
    "InvalidPrime",
    "MultiPoly",
    "NewtonExpansion",
    "NotPAdicInteger",
    "OutOfRange",
    "PAdicContext",
    "Rat",
    "RVFamily",
    "RV_FAMILIES",
    "TermLimitExceeded",
    "UniPoly",
    "binomial_poly",
    "congruent",
    "is_integer_valued",
    "is_prime",
    "legendre",
    "mod_reduce",
    "newton_coefficients",
    "padic_valuation",
    "primes_in_range",
    "rat",
    "__version__",
]
