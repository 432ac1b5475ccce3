"""Polylogarithm and Bose-sum kernels.

Everything downstream is built from four scalar series:

    polylog(r, y)  = sum_{n>=1} y^n / n^r
    bose_sum(r, x) = sum_{n>=1} (1/n^r) / (exp(n x) - 1)
    kfun(x)        = sum_{n>=1} (1/n^3) [(1 + n x)/N + n x/N^2],   N = exp(n x) - 1
    hfun(x)        = -x^2 sum_{n>=1} (1/n) [1/N + 3/N^2 + 2/N^3]

kfun equals (1 - x d/dx) bose_sum(3, x) and hfun equals x * kfun'(x).
Both vanish exponentially for large argument; kfun is positive and hfun
is negative on x > 0.

All sums are evaluated in 64-bit floating point under a SeriesControl
policy: terms are accumulated until two consecutive terms fall below
rel_tol times the partial sum, or max_terms is exhausted (raising
ConvergenceError).  The series here are eventually monotone decreasing,
so the two-term guard protects the small-argument regime where early
terms are nearly flat.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = [
    "SeriesControl",
    "DEFAULT_CONTROL",
    "ZETA3",
    "polylog",
    "zeta",
    "bose_sum",
    "kfun",
    "hfun",
    "polylog_moment_antiderivative",
]

# Apery's constant, zeta(3); recomputable as polylog(3, 1.0).
ZETA3 = 1.2020569031595942854

# exp(x) overflows near x = 709; beyond ~700 every remaining term is
# below the double-precision underflow threshold.
_EXP_ARG_MAX = 700.0


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the series kernels.

    rel_tol is a relative truncation tolerance; max_terms bounds the
    number of terms before a ConvergenceError is raised.
    """

    rel_tol: float = 1e-15
    max_terms: int = 10000

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 50:
            raise DomainError(f"max_terms must be >= 50, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()


def polylog(r: int, y: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Polylogarithm sum_{n>=1} y^n / n^r for integer r and 0 <= y <= 1.

    Closed forms are used for r = 0 (y/(1-y)) and r = 1 (-ln(1-y)).
    At y = 1 the value is zeta(r), defined only for r >= 2.
    """
    if not 0.0 <= y <= 1.0:
        raise DomainError(f"polylog argument must lie in [0, 1], got {y}")
    if y == 1.0:
        if r <= 1:
            raise DomainError(f"polylog({r}, 1) diverges")
        return zeta(r, control)
    if r == 0:
        return y / (1.0 - y)
    if r == 1:
        return -math.log1p(-y)

    total = 0.0
    power = 1.0
    small = 0
    for n in range(1, control.max_terms + 1):
        power *= y
        term = power / float(n) ** r
        total += term
        if term <= control.rel_tol * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"polylog({r}, {y}) did not converge within {control.max_terms} terms"
    )


def zeta(r: int, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Riemann zeta for integer r >= 2 by direct summation.

    The tail beyond the summed terms is added via the Euler-Maclaurin
    expansion of sum_{n>=N} n^-r; the bare integral bound alone cannot
    reach rel_tol within max_terms for small r.
    """
    if r <= 1:
        raise DomainError(f"zeta({r}) diverges")
    # Remainder after the N^-(r+3) correction is below c5 * N^-(r+5).
    c5 = r * (r + 1) * (r + 2) * (r + 3) * (r + 4) / 30240.0
    partial = 0.0
    for n in range(1, control.max_terms + 1):
        partial += float(n) ** -r
        tail_start = n + 1
        if c5 * float(tail_start) ** -(r + 5) < control.rel_tol * partial:
            return partial + _zeta_tail(r, tail_start)
    raise ConvergenceError(f"zeta({r}) did not converge within {control.max_terms} terms")


def _zeta_tail(r: int, n: int) -> float:
    # Euler-Maclaurin tail sum_{m>=n} m^-r through the B4 term.
    x = float(n)
    return (
        x ** (1 - r) / (r - 1)
        + 0.5 * x**-r
        + (r / 12.0) * x ** -(r + 1)
        - (r * (r + 1) * (r + 2) / 720.0) * x ** -(r + 3)
    )


def bose_sum(r: int, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Thermal occupation sum sum_{n>=1} (1/n^r) / (exp(n x) - 1) for x > 0.

    This is the exponentially convergent form; it equals
    sum_{n>=1} polylog(r, exp(-n x)) term by term after expanding the
    geometric series.
    """
    if x <= 0.0:
        raise DomainError(f"bose_sum requires x > 0, got {x}")
    total = 0.0
    small = 0
    for n in range(1, control.max_terms + 1):
        nx = n * x
        if nx > _EXP_ARG_MAX:
            return total  # remaining terms underflow
        term = 1.0 / (float(n) ** r * math.expm1(nx))
        total += term
        if term <= control.rel_tol * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"bose_sum({r}, {x}) did not converge within {control.max_terms} terms"
    )


def kfun(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Bose-sum combination sum_n (1/n^3)[(1 + nx)/N + nx/N^2], N = exp(nx) - 1.

    Equals (1 - x d/dx) applied to bose_sum(3, x).  Strictly positive,
    exponentially small for large x (returns 0.0 below double underflow).
    """
    if x <= 0.0:
        raise DomainError(f"kfun requires x > 0, got {x}")
    total = 0.0
    small = 0
    for n in range(1, control.max_terms + 1):
        nx = n * x
        if nx > _EXP_ARG_MAX:
            return total
        big_n = math.expm1(nx)
        term = ((1.0 + nx) / big_n + nx / (big_n * big_n)) / float(n) ** 3
        total += term
        if term <= control.rel_tol * total:
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError(f"kfun({x}) did not converge within {control.max_terms} terms")


def hfun(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Bose-sum combination -x^2 sum_n (1/n)[1/N + 3/N^2 + 2/N^3], N = exp(nx) - 1.

    Equals x * kfun'(x).  Strictly negative, exponentially small for
    large x (returns -0.0/0.0 below double underflow).
    """
    if x <= 0.0:
        raise DomainError(f"hfun requires x > 0, got {x}")
    total = 0.0
    small = 0
    for n in range(1, control.max_terms + 1):
        nx = n * x
        if nx > _EXP_ARG_MAX:
            return -x * x * total
        big_n = math.expm1(nx)
        inv = 1.0 / big_n
        term = (inv + 3.0 * inv * inv + 2.0 * inv * inv * inv) / n
        total += term
        if term <= control.rel_tol * total:
            small += 1
            if small >= 2:
                return -x * x * total
        else:
            small = 0
    raise ConvergenceError(f"hfun({x}) did not converge within {control.max_terms} terms")


def polylog_moment_antiderivative(
    s: int, r: int, z: float, control: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Antiderivative of z^s polylog(r, exp(-z)) with respect to z.

    Repeated partial integration gives

        -s! sum_{n=0}^{s} z^(s-n)/(s-n)! * polylog(r+n+1, exp(-z)).

    Valid for integer s >= 0 and z > 0; it vanishes as z -> infinity,
    so definite integrals over [z0, inf) equal minus its value at z0.
    """
    if s < 0:
        raise DomainError(f"moment order s must be >= 0, got {s}")
    if z <= 0.0:
        raise DomainError(f"antiderivative requires z > 0, got {z}")
    y = math.exp(-z)
    total = 0.0
    for n in range(s + 1):
        weight = z ** (s - n) / math.factorial(s - n)
        total += weight * polylog(r + n + 1, y, control)
    return -math.factorial(s) * total
