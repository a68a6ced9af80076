"""Inverse binomials and the convex extension f of m -> C(m, m/2)^-1.

Values are exact rationals while the top argument stays within
EXACT_ARGUMENT_LIMIT and floats (via lgamma) beyond it; callers compare floats
with COMPARISON_SLACK.
"""

import math
from fractions import Fraction

from common.errors import InvalidArgumentError

EXACT_ARGUMENT_LIMIT = 60
COMPARISON_SLACK = 1e-12

Real = Fraction | float


def inverse_binomial(n: int, r: int, exact_limit: int = EXACT_ARGUMENT_LIMIT) -> Real:
    if not 0 <= r <= n:
        raise InvalidArgumentError(f"C({n}, {r}) undefined")
    if n <= exact_limit:
        return Fraction(1, math.comb(n, r))
    return math.exp(math.lgamma(r + 1) + math.lgamma(n - r + 1) - math.lgamma(n + 1))


def f_value(x: Real | int, exact_limit: int = EXACT_ARGUMENT_LIMIT) -> Real:
    """f(2k) = C(2k, k)^-1, linear between consecutive even integers."""
    if x < 0:
        raise InvalidArgumentError(f"f is defined on x >= 0, got {x}")
    if isinstance(x, int):
        x = Fraction(x)
    k = int(x // 2)
    low = inverse_binomial(2 * k, k, exact_limit)
    if x == 2 * k:
        return low
    high = inverse_binomial(2 * k + 2, k + 1, exact_limit)
    return low + (high - low) * (x - 2 * k) / 2


def f_interp(x: float) -> float:
    return float(f_value(x))


def at_most(a: Real, b: Real) -> bool:
    """a <= b, exact for rationals and with slack otherwise."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a <= b
    return a <= b + COMPARISON_SLACK


def render_exact(value: Real) -> str | None:
    return str(value) if isinstance(value, Fraction) else None
