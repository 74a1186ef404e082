"""Special-function kernel: Kummer 1F1, integer-order Bessel J, channel algebra.

Hand-rolled on purpose: these are the quantities the rest of the package
cross-validates against, so they must not share code with the validation
oracles (tests check them against independent high-precision summation
and integral representations).

Accuracy targets, real arguments only:
    kummer_1f1   relative error <= 1e-10 for |z| <= 1e4 (values that
                 overflow float64 return +/-inf honestly)
    bessel_j     absolute error <= 1e-10 for x >= 0
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidChannel, PoleB, RangeExceeded

__all__ = [
    "kummer_1f1",
    "bessel_j",
    "spin_orbit_eigenvalue",
    "ChannelQuantumNumbers",
]

_Z_RANGE = 1.0e4
_RESCALE = 1.0e250
_LOG_RESCALE = math.log(_RESCALE)


def _series_1f1(a: float, b: float, z: float) -> tuple[float, float]:
    """Raw Kummer sum for z >= 0; returns (sum, log_rescale).

    The true partial sum is sum * exp(log_rescale). Terms are generated
    by the ratio recurrence t_{n+1} = t_n (a+n) z / ((b+n)(n+1)); the
    loop stops once |term| < 1e-16 |partial| three times in a row, or
    immediately when the series truncates (a a nonpositive integer).
    """
    total = 1.0
    term = 1.0
    log_rescale = 0.0
    quiet = 0
    n = 0
    max_terms = 400 + int(4.0 * abs(z))
    while n < max_terms:
        term *= (a + n) * z / ((b + n) * (n + 1.0))
        total += term
        n += 1
        if term == 0.0:
            return total, log_rescale
        if abs(term) < 1.0e-16 * abs(total):
            quiet += 1
            if quiet >= 3:
                return total, log_rescale
        else:
            quiet = 0
        if abs(total) > _RESCALE:
            total /= _RESCALE
            term /= _RESCALE
            log_rescale += _LOG_RESCALE
    raise RangeExceeded(
        f"Kummer series did not converge within {max_terms} terms (a={a}, b={b}, z={z})"
    )


def kummer_1f1(a: float, b: float, z: float) -> float:
    """Confluent hypergeometric 1F1(a; b; z) for real arguments.

    For z < 0 the Kummer transform e^z 1F1(b-a, b, -z) is applied so the
    sum always runs over a nonnegative argument; the raw alternating
    series loses all significant digits long before z = -30, while the
    transformed series has no cancellation. Raises PoleB for b a
    nonpositive integer and RangeExceeded for |z| > 1e4.
    """
    for name, val in (("a", a), ("b", b), ("z", z)):
        if not math.isfinite(val):
            raise ValueError(f"{name} must be finite")
    if b <= 0.0 and abs(b - round(b)) < 1.0e-9:
        raise PoleB(f"1F1 undefined at nonpositive integer b = {b}")
    if abs(z) > _Z_RANGE:
        raise RangeExceeded(f"|z| = {abs(z):g} outside documented range {_Z_RANGE:g}")

    if z >= 0.0:
        total, log_rescale = _series_1f1(a, b, z)
        shift = 0.0
    else:
        total, log_rescale = _series_1f1(b - a, b, -z)
        shift = z
    if total == 0.0:
        return 0.0
    exponent = shift + log_rescale + math.log(abs(total))
    if exponent > 709.0:
        return math.copysign(math.inf, total)
    return math.copysign(math.exp(exponent), total)


def bessel_j(nu: int, x: float) -> float:
    """Bessel function of the first kind, integer order nu >= 0, x >= 0.

    Ascending series up to x = 8 (alternating-series cancellation stays
    below ~1e-13 there), Miller downward recurrence with the
    J_0 + 2 sum J_{2m} = 1 normalization beyond.
    """
    if not isinstance(nu, int):
        if isinstance(nu, float) and nu.is_integer():
            nu = int(nu)
        else:
            raise ValueError(f"order must be a nonnegative integer, got {nu!r}")
    if nu < 0:
        raise ValueError(f"order must be nonnegative, got {nu}")
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    if x < 0.0:
        raise ValueError(f"x must be nonnegative, got {x}")
    if x == 0.0:
        return 1.0 if nu == 0 else 0.0
    if x <= 8.0:
        return _bessel_series(nu, x)
    return _bessel_miller(nu, x)


def _bessel_series(nu: int, x: float) -> float:
    # leading coefficient through logs; harmless underflow to 0 for
    # large order at small x is the correct limit
    log_lead = nu * math.log(0.5 * x) - math.lgamma(nu + 1.0)
    if log_lead < -745.0:
        return 0.0
    term = math.exp(log_lead)
    total = term
    q = 0.25 * x * x
    m = 0
    quiet = 0
    while m < 400:
        term *= -q / ((m + 1.0) * (nu + m + 1.0))
        total += term
        m += 1
        if abs(term) < 1.0e-17 * (abs(total) + 1.0e-300):
            quiet += 1
            if quiet >= 3:
                return total
        else:
            quiet = 0
    raise RangeExceeded(f"Bessel series did not converge (nu={nu}, x={x})")


def _bessel_miller(nu: int, x: float) -> float:
    m_start = max(nu, int(x)) + 32 + int(0.3 * x)
    if m_start % 2:
        m_start += 1
    j_up = 0.0          # J_{m+1} trial
    j_cur = 1.0e-30     # J_m trial
    norm = 0.0          # accumulates J_0 + 2 sum_{even m >= 2} J_m
    result = 0.0
    captured = False
    for m in range(m_start, 0, -1):
        j_down = (2.0 * m / x) * j_cur - j_up
        j_up = j_cur
        j_cur = j_down
        if m - 1 == nu:
            result = j_cur
            captured = True
        if (m - 1) % 2 == 0 and m - 1 > 0:
            norm += 2.0 * j_cur
        if abs(j_cur) > _RESCALE:
            j_cur /= _RESCALE
            j_up /= _RESCALE
            norm /= _RESCALE
            result /= _RESCALE
    norm += j_cur  # after the loop j_cur holds the J_0 trial value
    if not captured:
        raise RangeExceeded(f"downward recurrence start too low for nu={nu}, x={x}")
    return result / norm


def spin_orbit_eigenvalue(l: int, j: float) -> int:
    """Eigenvalue w of the spin-orbit operator on the (l, j) channel.

    w = l for j = l + 1/2 and w = -(l + 1) for j = l - 1/2. Raises
    InvalidChannel for any other (l, j) combination.
    """
    if not isinstance(l, int):
        if isinstance(l, float) and l.is_integer():
            l = int(l)
        else:
            raise InvalidChannel(f"l must be a nonnegative integer, got {l!r}")
    if l < 0:
        raise InvalidChannel(f"l must be nonnegative, got {l}")
    if not math.isfinite(j) or j < 0.5 - 1.0e-12:
        raise InvalidChannel(f"j must be a half-integer >= 1/2, got {j}")
    if abs(j - (l + 0.5)) < 1.0e-9:
        return l
    if abs(j - (l - 0.5)) < 1.0e-9:
        return -(l + 1)
    raise InvalidChannel(f"j = {j} is not l +- 1/2 for l = {l}")


@dataclass(frozen=True)
class ChannelQuantumNumbers:
    """One angular channel (l, j) with its spin-orbit eigenvalue w."""

    l: int
    j: float

    def __post_init__(self) -> None:
        spin_orbit_eigenvalue(self.l, self.j)  # validates

    @property
    def w(self) -> int:
        return spin_orbit_eigenvalue(self.l, self.j)
