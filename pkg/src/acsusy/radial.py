"""Radial eigenvalue machinery: channel potentials, shooting, matching.

Conventions. The working wavefunction is the reduced one: psi = r phi
for the ball geometry (measure r^2 dr) and u = sqrt(r) phi for the
cylinder (measure r dr), so both obey psi'' = (V_eff - eps) psi with no
first-derivative term. V_eff carries the centrifugal term l(l+1)/r^2,
respectively (nu^2 - 1/4)/r^2, the constant and 1/r^k pieces from the
squared first-order operator, and the oscillator term beta^2 r^2 inside
the source.

Sign of the channel coupling: expanding the square of the first-order
operator gives the cross term -2 (eta E_r / r) (spin dot orbital), so
the interior constant is -2 beta (w + 3/2) for the ball and
+2 beta (w + 1) for the cylinder. With these signs every channel
Hamiltonian is a square, hence nonnegative: no eps < 0 bound states
exist, and the scan machinery's job is to certify emptiness and to
recognize the eps = 0 zero-mode endpoint where one exists.

Energies and potentials are cm^-2 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import InvalidChannel, NoDecaySeed, Overflow
from .specfun import kummer_1f1

__all__ = [
    "RadialProblem",
    "ShootResult",
    "BoundState",
    "ZeroModeMatch",
    "SpectrumReport",
    "effective_potential",
    "channel_shift",
    "frobenius_exponent",
    "shoot_interior",
    "shoot_exterior",
    "interior_closed_form",
    "find_spectrum",
]

GEOM_SPHERE = "sphere"
GEOM_CYLINDER = "cylinder"


@dataclass(frozen=True)
class RadialProblem:
    """One angular channel of one geometry.

    l is the orbital quantum number (3D) or |nu| (2D). w is the
    spin-orbit eigenvalue (3D: w = l or -(l+1)) or the signed in-plane
    angular number entering the polarization coupling (2D: w = +-l).
    """

    geometry: str
    l: int
    w: int
    beta: float
    r0: float

    def __post_init__(self) -> None:
        if self.geometry not in (GEOM_SPHERE, GEOM_CYLINDER):
            raise ValueError(f"unknown geometry {self.geometry!r}")
        if not isinstance(self.l, int) or self.l < 0:
            raise InvalidChannel(f"l must be a nonnegative integer, got {self.l!r}")
        if not isinstance(self.w, int):
            raise InvalidChannel(f"w must be an integer, got {self.w!r}")
        if self.geometry == GEOM_SPHERE and self.w not in (self.l, -(self.l + 1)):
            raise InvalidChannel(
                f"sphere channel needs w = l or -(l+1); got l={self.l}, w={self.w}"
            )
        if self.geometry == GEOM_CYLINDER and abs(self.w) != self.l:
            raise InvalidChannel(
                f"cylinder channel needs |w| = nu; got nu={self.l}, w={self.w}"
            )
        if not (self.r0 > 0.0 and math.isfinite(self.r0)):
            raise ValueError("r0 must be positive and finite")
        if not math.isfinite(self.beta):
            raise ValueError("beta must be finite")


def channel_shift(p: RadialProblem) -> float:
    """Constant interior offset of V_eff (the non-oscillator piece)."""
    if p.geometry == GEOM_SPHERE:
        return -2.0 * p.beta * (p.w + 1.5)
    return 2.0 * p.beta * (p.w + 1.0)


def frobenius_exponent(p: RadialProblem) -> float:
    """Regular-origin exponent alpha with psi ~ r^alpha."""
    return p.l + 1.0 if p.geometry == GEOM_SPHERE else p.l + 0.5


def _centrifugal(p: RadialProblem) -> float:
    if p.geometry == GEOM_SPHERE:
        return float(p.l * (p.l + 1))
    return p.l * p.l - 0.25


def effective_potential(p: RadialProblem, r):
    """Channel potential V_eff(r) in the reduced picture; array-aware."""
    rr = np.asarray(r, dtype=float)
    if np.any(rr <= 0.0):
        raise ValueError("r must be positive")
    cent = _centrifugal(p)
    b = p.beta
    if p.geometry == GEOM_SPHERE:
        inner = cent / rr**2 - 2.0 * b * (p.w + 1.5) + b * b * rr**2
        outer = (
            cent / rr**2
            - 2.0 * b * p.w * p.r0**3 / rr**3
            + b * b * p.r0**6 / rr**4
        )
    else:
        inner = cent / rr**2 + 2.0 * b * (p.w + 1.0) + b * b * rr**2
        outer = (cent + 2.0 * b * p.r0**2 * p.w + b * b * p.r0**4) / rr**2
    out = np.where(rr <= p.r0, inner, outer)
    if np.isscalar(r) or getattr(r, "ndim", 1) == 0:
        return float(out)
    return out


def _scalar_potential(p: RadialProblem) -> Callable[[float], float]:
    """Closure with precomputed constants for the integrator hot loop."""
    cent = _centrifugal(p)
    b = p.beta
    b2 = b * b
    r0 = p.r0
    if p.geometry == GEOM_SPHERE:
        shift = -2.0 * b * (p.w + 1.5)
        c3 = -2.0 * b * p.w * r0**3
        c4 = b2 * r0**6

        def vfun(r: float) -> float:
            rr = r * r
            if r <= r0:
                return cent / rr + shift + b2 * rr
            return cent / rr + c3 / (rr * r) + c4 / (rr * rr)

    else:
        shift = 2.0 * b * (p.w + 1.0)
        cout = cent + 2.0 * b * r0**2 * p.w + b2 * r0**4

        def vfun(r: float) -> float:
            rr = r * r
            if r <= r0:
                return cent / rr + shift + b2 * rr
            return cout / rr

    return vfun


@dataclass(frozen=True)
class ShootResult:
    """State of the reduced wavefunction at the matching radius.

    The represented function is exp(log_scale) * psi; only ratios of
    (psi, dpsi) matter for matching, so log_scale is informational.
    """

    r: float
    psi: float
    dpsi: float
    log_scale: float
    nodes: int
    steps: int

    @property
    def log_derivative(self) -> float:
        return self.dpsi / self.psi


# Cash-Karp embedded 4(5) pair: stage nodes and weights, unrolled below
# for speed (the integrator dominates every spectrum scan).
_A21 = 0.2
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 0.3, -0.9, 1.2
_A51, _A52, _A53, _A54 = -11.0 / 54.0, 2.5, -70.0 / 27.0, 35.0 / 27.0
_A61, _A62, _A63, _A64, _A65 = (
    1631.0 / 55296.0,
    175.0 / 512.0,
    575.0 / 13824.0,
    44275.0 / 110592.0,
    253.0 / 4096.0,
)
_B1, _B3, _B4, _B6 = 37.0 / 378.0, 250.0 / 621.0, 125.0 / 594.0, 512.0 / 1771.0
# error weights: 5th-order minus 4th-order combination
_E1 = _B1 - 2825.0 / 27648.0
_E3 = _B3 - 18575.0 / 48384.0
_E4 = _B4 - 13525.0 / 55296.0
_E5 = -277.0 / 14336.0
_E6 = _B6 - 0.25

_RENORM_AT = 1.0e100


def _integrate(
    vfun: Callable[[float], float],
    eps: float,
    r_from: float,
    r_to: float,
    y: float,
    dy: float,
    rtol: float,
) -> tuple[float, float, float, int, int]:
    """Adaptive Cash-Karp integration of psi'' = (V - eps) psi.

    Direction follows sign(r_to - r_from). Renormalizes the state past
    1e100 and accumulates the factor in log_scale. Returns
    (psi, dpsi, log_scale, nodes, steps).
    """
    direction = 1.0 if r_to >= r_from else -1.0
    span = abs(r_to - r_from)
    if span == 0.0:
        return y, dy, 0.0, 0, 0
    h = direction * span * 1.0e-3
    r = r_from
    log_scale = 0.0
    nodes = 0
    steps = 0
    max_steps = 500_000
    end_tol = 1.0e-14 * max(abs(r_from), abs(r_to))
    while True:
        rem = r_to - r
        if rem * direction <= end_tol:
            break
        if (h - rem) * direction > 0.0:
            h = rem
        k1y = dy
        k1d = (vfun(r) - eps) * y

        yi = y + h * (_A21 * k1y)
        k2y = dy + h * (_A21 * k1d)
        k2d = (vfun(r + 0.2 * h) - eps) * yi

        yi = y + h * (_A31 * k1y + _A32 * k2y)
        k3y = dy + h * (_A31 * k1d + _A32 * k2d)
        k3d = (vfun(r + 0.3 * h) - eps) * yi

        yi = y + h * (_A41 * k1y + _A42 * k2y + _A43 * k3y)
        k4y = dy + h * (_A41 * k1d + _A42 * k2d + _A43 * k3d)
        k4d = (vfun(r + 0.6 * h) - eps) * yi

        yi = y + h * (_A51 * k1y + _A52 * k2y + _A53 * k3y + _A54 * k4y)
        k5y = dy + h * (_A51 * k1d + _A52 * k2d + _A53 * k3d + _A54 * k4d)
        k5d = (vfun(r + h) - eps) * yi

        yi = y + h * (_A61 * k1y + _A62 * k2y + _A63 * k3y + _A64 * k4y + _A65 * k5y)
        k6y = dy + h * (_A61 * k1d + _A62 * k2d + _A63 * k3d + _A64 * k4d + _A65 * k5d)
        k6d = (vfun(r + 0.875 * h) - eps) * yi

        y_new = y + h * (_B1 * k1y + _B3 * k3y + _B4 * k4y + _B6 * k6y)
        d_new = dy + h * (_B1 * k1d + _B3 * k3d + _B4 * k4d + _B6 * k6d)
        err_y = h * (_E1 * k1y + _E3 * k3y + _E4 * k4y + _E5 * k5y + _E6 * k6y)
        err_d = h * (_E1 * k1d + _E3 * k3d + _E4 * k4d + _E5 * k5d + _E6 * k6d)

        sc_y = abs(y) + abs(h * dy) + 1.0e-300
        sc_d = abs(dy) + abs(h * k1d) + 1.0e-300
        err = max(abs(err_y) / sc_y, abs(err_d) / sc_d) / rtol
        if not math.isfinite(err):
            raise Overflow(f"non-finite state during integration near r = {r:g}")
        if err <= 1.0:
            r += h
            if y != 0.0 and y_new != 0.0 and (y > 0.0) != (y_new > 0.0):
                nodes += 1
            y, dy = y_new, d_new
            steps += 1
            mag = abs(y) if abs(y) > abs(dy) else abs(dy)
            if mag > _RENORM_AT:
                y /= mag
                dy /= mag
                log_scale += math.log(mag)
            if steps > max_steps:
                raise Overflow("step budget exhausted; pathological parameters")
        grow = 0.9 * err**-0.2 if err > 0.0 else 5.0
        h *= min(5.0, max(0.2, grow))
        if abs(h) < 1.0e-15 * max(1.0, abs(r)):
            raise Overflow(f"step size collapse near r = {r:g}")
    return y, dy, log_scale, nodes, steps


def shoot_interior(
    p: RadialProblem,
    epsilon: float,
    r_match: Optional[float] = None,
    rtol: float = 1.0e-10,
) -> ShootResult:
    """Integrate outward from the regular origin to r0.

    Seeds at r_min = 1e-6 r0 with the Frobenius series
    psi = r^alpha (1 + c2 r^2), c2 = (shift - eps)/(4 alpha + 2), then
    integrates psi'' = (V - eps) psi with the adaptive embedded pair.
    The returned state is rescaled (psi, dpsi with r_min^alpha pulled
    into log_scale), so large l is safe.
    """
    if r_match is None:
        r_match = p.r0
    if r_match != p.r0:
        raise ValueError("matching radius must be the source radius r0")
    if not math.isfinite(epsilon):
        raise ValueError("epsilon must be finite")
    alpha = frobenius_exponent(p)
    shift = channel_shift(p)
    r_min = 1.0e-6 * p.r0
    c2 = (shift - epsilon) / (4.0 * alpha + 2.0)
    # state divided by r_min^alpha; the factor lives in log_scale
    y0 = 1.0 + c2 * r_min * r_min
    dy0 = (alpha / r_min) * (1.0 + c2 * r_min * r_min) + 2.0 * c2 * r_min
    vfun = _scalar_potential(p)
    y, dy, log_scale, nodes, steps = _integrate(
        vfun, epsilon, r_min, p.r0, y0, dy0, rtol
    )
    return ShootResult(
        r=p.r0,
        psi=y,
        dpsi=dy,
        log_scale=log_scale + alpha * math.log(r_min),
        nodes=nodes,
        steps=steps,
    )


def shoot_exterior(
    p: RadialProblem,
    epsilon: float,
    r_max: Optional[float] = None,
    rtol: float = 1.0e-10,
) -> ShootResult:
    """Integrate inward from r_max with the decaying seed exp(-kappa r).

    Only eps < 0 admits a decaying exterior solution; eps >= 0 raises
    NoDecaySeed. r_max defaults to max(25/kappa, 3 r0) and must satisfy
    r_max >= 20/kappa when given explicitly.
    """
    if not math.isfinite(epsilon):
        raise ValueError("epsilon must be finite")
    if epsilon >= 0.0:
        raise NoDecaySeed(
            f"eps = {epsilon:g} >= 0: exterior solutions oscillate; no decaying seed"
        )
    kappa = math.sqrt(-epsilon)
    if r_max is None:
        r_max = max(25.0 / kappa, 3.0 * p.r0)
    if r_max < 20.0 / kappa:
        raise ValueError(f"r_max = {r_max:g} below the asymptotic region 20/kappa = {20.0 / kappa:g}")
    if r_max <= p.r0:
        raise ValueError("r_max must exceed r0")
    vfun = _scalar_potential(p)
    y, dy, log_scale, nodes, steps = _integrate(
        vfun, epsilon, r_max, p.r0, 1.0, -kappa, rtol
    )
    return ShootResult(r=p.r0, psi=y, dpsi=dy, log_scale=log_scale, nodes=nodes, steps=steps)


def _exterior_zero_energy(p: RadialProblem, rtol: float = 1.0e-11) -> ShootResult:
    """Bounded exterior solution at eps = 0, as a state at r0.

    The cylinder exterior potential is exactly C/r^2, so the decaying
    eps = 0 solution is the exact power r^q with
    q = 1/2 - |w + beta r0^2|; no integration is needed. The ball
    exterior has 1/r^3 and 1/r^4 tails on top of the centrifugal term,
    so the bounded solution is integrated inward from a power-law seed.
    """
    if p.geometry == GEOM_CYLINDER:
        q = 0.5 - abs(p.w + p.beta * p.r0**2)
        return ShootResult(r=p.r0, psi=1.0, dpsi=q / p.r0, log_scale=0.0, nodes=0, steps=0)
    # ball: bounded branch psi ~ r^-l (1 + c1/r + ...) with c1 from the
    # leading 1/r^3 tail of the potential; overall r_far^-l scale dropped
    r_far = 60.0 * p.r0 * max(1.0, abs(p.beta) * p.r0**2)
    c1 = -p.beta * p.w * p.r0**3 / (p.l + 1.0)
    y0 = 1.0 + c1 / r_far
    dy0 = (-p.l / r_far) * y0 - c1 / r_far**2
    vfun = _scalar_potential(p)
    y, dy, log_scale, nodes, steps = _integrate(
        vfun, 0.0, r_far, p.r0, y0, dy0, rtol
    )
    return ShootResult(r=p.r0, psi=y, dpsi=dy, log_scale=log_scale, nodes=nodes, steps=steps)


def interior_closed_form(p: RadialProblem, epsilon: float, r: float) -> float:
    """Closed interior solution r^alpha exp(-w|r|^2...) via Kummer 1F1.

    psi(r) = r^alpha e^{-omega r^2/2} 1F1(a; b; omega r^2) with
    omega = |beta|, b = l + 3/2 (ball) or l + 1 (cylinder), and
    a = b/2 - eps_ch/(4 omega), eps_ch = eps - channel_shift. At a = 0
    the series truncates to the pure Gaussian ground profile. Requires
    beta != 0 (the free case reduces to Bessel-type solutions handled
    by the shooting integrator) and 0 < r <= r0.
    """
    if p.beta == 0.0:
        raise ValueError("closed form requires beta != 0; use shoot_interior for beta = 0")
    if not (0.0 < r <= p.r0):
        raise ValueError("closed form is valid on 0 < r <= r0")
    omega = abs(p.beta)
    alpha = frobenius_exponent(p)
    bpar = p.l + 1.5 if p.geometry == GEOM_SPHERE else p.l + 1.0
    eps_ch = epsilon - channel_shift(p)
    a = bpar / 2.0 - eps_ch / (4.0 * omega)
    z = omega * r * r
    return r**alpha * math.exp(-z / 2.0) * kummer_1f1(a, bpar, z)


@dataclass(frozen=True)
class BoundState:
    epsilon: float
    node_count: int
    match_residual: float


@dataclass(frozen=True)
class ZeroModeMatch:
    """eps = 0 endpoint where interior and exterior log-derivatives met."""

    epsilon: float
    match_residual: float
    node_count: int


@dataclass(frozen=True)
class SpectrumReport:
    """Matching results for one channel over one energy window.

    bound_states holds strictly negative eigenvalues (none exist for
    these squared-operator channels; the field stays empty and the scan
    certifies that). A zero-energy normalizable match, when present, is
    reported in zero_mode. classification_notes explains the outcome.
    """

    problem: RadialProblem
    epsilon_lo: float
    epsilon_hi: float
    bound_states: tuple[BoundState, ...]
    zero_mode: Optional[ZeroModeMatch]
    classification_notes: str
    continuum_threshold: float = 0.0
    scan_meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        eps = [s.epsilon for s in self.bound_states]
        if any(e >= 0.0 for e in eps):
            raise ValueError("bound-state energies must be strictly negative")
        if eps != sorted(eps) or len(set(eps)) != len(eps):
            raise ValueError("bound-state energies must be strictly ascending")
        nodes = [s.node_count for s in self.bound_states]
        if any(b <= a for a, b in zip(nodes, nodes[1:])):
            raise ValueError("node counts must increase with energy (oscillation ordering)")

    @property
    def has_states(self) -> bool:
        return bool(self.bound_states) or self.zero_mode is not None

    def to_json_dict(self) -> dict:
        return {
            "geometry": self.problem.geometry,
            "l": self.problem.l,
            "w": self.problem.w,
            "beta_cm2": self.problem.beta,
            "r0_cm": self.problem.r0,
            "epsilon_window_cm2": [self.epsilon_lo, self.epsilon_hi],
            "continuum_threshold_cm2": self.continuum_threshold,
            "bound_states": [
                {
                    "epsilon_cm2": s.epsilon,
                    "node_count": s.node_count,
                    "match_residual": s.match_residual,
                }
                for s in self.bound_states
            ],
            "zero_mode": (
                None
                if self.zero_mode is None
                else {
                    "epsilon_cm2": self.zero_mode.epsilon,
                    "match_residual": self.zero_mode.match_residual,
                    "node_count": self.zero_mode.node_count,
                }
            ),
            "classification_notes": self.classification_notes,
            "scan": dict(self.scan_meta),
        }

    def csv_rows(self) -> list[tuple]:
        rows = [
            (self.problem.l, self.problem.w, s.epsilon, s.node_count, s.match_residual, "bound")
            for s in self.bound_states
        ]
        if self.zero_mode is not None:
            z = self.zero_mode
            rows.append((self.problem.l, self.problem.w, z.epsilon, z.node_count,
                         z.match_residual, "zero_mode"))
        return rows


def _wronskian_mismatch(interior: ShootResult, exterior: ShootResult, r0: float) -> float:
    """Scale-free matching function; sign changes locate eigenvalues."""
    ni = abs(interior.psi) + r0 * abs(interior.dpsi) + 1.0e-300
    ne = abs(exterior.psi) + r0 * abs(exterior.dpsi) + 1.0e-300
    return (interior.dpsi * exterior.psi - interior.psi * exterior.dpsi) / (ni * ne)


def _scan_sign_changes(fvals: list[float]) -> list[int]:
    hits = []
    for i in range(len(fvals) - 1):
        a, b = fvals[i], fvals[i + 1]
        if a == 0.0:
            continue
        if b == 0.0:
            hits.append(i)
        elif (a > 0.0) != (b > 0.0):
            hits.append(i)
    return hits


def _bisect_refine(
    fun: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float,
    f_hi: float,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Bisection with a final secant polish; returns (root, f(root))."""
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = fun(mid)
        if f_mid == 0.0:
            return mid, 0.0
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    if f_hi != f_lo:
        root = lo - f_lo * (hi - lo) / (f_hi - f_lo)
        if not (min(lo, hi) <= root <= max(lo, hi)):
            root = 0.5 * (lo + hi)
    else:
        root = 0.5 * (lo + hi)
    return root, fun(root)


_ZERO_MODE_MATCH_TOL = 1.0e-6


def find_spectrum(
    p: RadialProblem,
    epsilon_lo: float,
    epsilon_hi: float = 0.0,
    n_grid: int = 400,
    rtol: float = 1.0e-10,
) -> SpectrumReport:
    """Scan the matching mismatch over [epsilon_lo, epsilon_hi].

    The grid is log-spaced in |eps| so shallow states near the
    continuum threshold are resolved. Bracketed sign changes are
    refined by bisection plus a secant polish. When the window touches
    eps = 0 the endpoint is checked separately against the bounded
    zero-energy exterior solution (exact power law for the cylinder)
    and reported as a zero mode only when the log-derivatives agree AND
    the matched state is a square-integrable kernel state of the
    first-order operator; that combination occurs for cylinders below
    the coupling threshold and never for spheres.
    """
    if not (epsilon_lo < epsilon_hi <= 0.0):
        raise ValueError("window must satisfy epsilon_lo < epsilon_hi <= 0")
    if n_grid < 2:
        raise ValueError("n_grid must be at least 2")

    hi_mag = abs(epsilon_hi) if epsilon_hi < 0.0 else 1.0e-6 * abs(epsilon_lo)
    grid = [-g for g in np.geomspace(abs(epsilon_lo), hi_mag, n_grid)]

    def mismatch(eps: float) -> float:
        inner = shoot_interior(p, eps, rtol=rtol)
        outer = shoot_exterior(p, eps, rtol=rtol)
        return _wronskian_mismatch(inner, outer, p.r0)

    fvals = [mismatch(e) for e in grid]
    states = []
    for i in _scan_sign_changes(fvals):
        root, f_root = _bisect_refine(mismatch, grid[i], grid[i + 1], fvals[i], fvals[i + 1])
        inner = shoot_interior(p, root, rtol=rtol)
        outer = shoot_exterior(p, root, rtol=rtol)
        li = inner.log_derivative
        le = outer.log_derivative
        states.append(BoundState(epsilon=root, node_count=inner.nodes,
                                 match_residual=abs(li - le)))

    # A zero mode must be a kernel state of the first-order operator,
    # not merely an eps = 0 solution of the squared equation, and a
    # matched eps = 0 endpoint alone cannot tell the two apart: every
    # attractive cylinder matches identically (interior log-slope
    # 1/(2 r0) + beta r0 equals the exterior one for all couplings),
    # and strongly coupled aligned sphere channels match the decaying
    # second solution to ~exp(-beta r0^2) accuracy. The cylinder kernel
    # state is the matched power tail itself, square-integrable in the
    # u picture exactly when its exponent is < -1/2; the sphere kernel
    # state grows like r^(l+1) outside, so no sphere channel has one.
    if p.geometry == GEOM_CYLINDER:
        tail_exponent = 0.5 - abs(p.w + p.beta * p.r0**2)
        kernel_candidate = tail_exponent < -0.5
    else:
        tail_exponent = float(-p.l)
        kernel_candidate = False

    zero_mode = None
    zero_note = ""
    if epsilon_hi == 0.0:
        inner0 = shoot_interior(p, 0.0, rtol=min(rtol, 1.0e-11))
        outer0 = _exterior_zero_energy(p)
        li = inner0.log_derivative
        le = outer0.log_derivative
        rel = abs(li - le) / (abs(li) + abs(le) + 1.0 / p.r0)
        if rel < _ZERO_MODE_MATCH_TOL and kernel_candidate:
            zero_mode = ZeroModeMatch(epsilon=0.0, match_residual=rel,
                                      node_count=inner0.nodes)
            zero_note = (
                " The eps = 0 endpoint matches the bounded exterior solution "
                f"(relative log-derivative gap {rel:.3g}) and the tail "
                f"r^{tail_exponent:g} is square-integrable: normalizable zero mode."
            )
        elif rel < _ZERO_MODE_MATCH_TOL:
            if p.geometry == GEOM_CYLINDER:
                reason = (
                    f"but its tail r^{tail_exponent:g} is not square-integrable"
                )
            else:
                reason = (
                    f"but the first-order kernel solution grows like r^{p.l + 1} "
                    "outside the source, so the matched state is not a "
                    "supercharge kernel state"
                )
            zero_note = (
                " The eps = 0 endpoint matches the bounded exterior solution "
                f"(relative log-derivative gap {rel:.3g}) {reason}: no zero mode."
            )
        else:
            zero_note = (
                " The eps = 0 endpoint does not match the bounded exterior solution "
                f"(relative log-derivative gap {rel:.3g})."
            )

    if states:
        note = f"{len(states)} bound state(s) located by sign-change bracketing."
    else:
        note = (
            "NoBoundStates: the matching mismatch has no sign change in the window; "
            "consistent with a nonnegative (squared-operator) channel Hamiltonian."
        )
    return SpectrumReport(
        problem=p,
        epsilon_lo=epsilon_lo,
        epsilon_hi=epsilon_hi,
        bound_states=tuple(states),
        zero_mode=zero_mode,
        classification_notes=note + zero_note,
        scan_meta={"n_grid": n_grid, "rtol": rtol, "grid_kind": "log|eps|"},
    )
