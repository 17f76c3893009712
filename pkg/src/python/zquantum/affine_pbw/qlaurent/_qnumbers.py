"""q-analogs: q-integers, q-factorials, Gaussian binomials and (n)_x."""
from functools import lru_cache
from typing import Union

from ._laurent import LaurentPoly
from ._ratfunc import RatFunc


def _check_d(d: int) -> None:
    if d < 1:
        raise ValueError(f"Invalid symmetrizer d={d}; expected a positive integer")


@lru_cache(maxsize=None)
def q_int(s: int, d: int = 1) -> LaurentPoly:
    """The q-integer [s] at q^d: (q^{ds} - q^{-ds}) / (q^d - q^{-d}).

    Negative s is allowed, [-s] = -[s].

    Examples:
        q_int(2) is q + q^-1, q_int(3, 2) is q^4 + 1 + q^-4.
    """
    _check_d(d)
    sign = 1 if s >= 0 else -1
    n = abs(s)
    return LaurentPoly.from_terms({d * (n - 1 - 2 * j): sign for j in range(n)})


@lru_cache(maxsize=None)
def q_factorial(m: int, d: int = 1) -> LaurentPoly:
    """[m]! at q^d."""
    if m < 0:
        raise ValueError(f"q_factorial requires m >= 0, got m={m}")
    if m == 0:
        return LaurentPoly.constant(1)
    return q_factorial(m - 1, d) * q_int(m, d)


@lru_cache(maxsize=None)
def q_binom(m: int, n: int, d: int = 1) -> LaurentPoly:
    """The Gaussian binomial [m choose n] at q^d.

    Raises:
        ValueError: unless 0 <= n <= m.
    """
    if m < 0 or n < 0 or n > m:
        raise ValueError(f"q_binom requires 0 <= n <= m, got m={m}, n={n}")
    return q_factorial(m, d).exquo(q_factorial(m - n, d) * q_factorial(n, d))


def paren_q(n: int, base: Union[LaurentPoly, RatFunc, int]) -> RatFunc:
    """(n)_x = 1 + x + ... + x^{n-1} evaluated at x = base; (n)_1 = n."""
    if n < 0:
        raise ValueError(f"paren_q requires n >= 0, got n={n}")
    base = RatFunc.coerce(base)
    total, power = RatFunc(0), RatFunc(1)
    for _ in range(n):
        total = total + power
        power = power * base
    return total


def q_power(exponent: int) -> LaurentPoly:
    return LaurentPoly.monomial(exponent)


def q_minus_inverse(d: int = 1) -> LaurentPoly:
    """q^d - q^{-d}."""
    _check_d(d)
    return LaurentPoly.from_terms({d: 1, -d: -1})
