"""Closed-form ground profiles, norm classification, and the SUSY verdict.

Each geometry's candidate zero mode is a piecewise closed form. The
sphere uses the decaying Gaussian interior exp(-beta r^2/2) and the
exterior exp(-beta r0^3/r), joined with the single amplitude ratio
A_in/A_out = exp(-beta r0^2/2). That ratio makes the value exactly
continuous at r0; the two pieces obey first-order equations whose
coefficients differ in sign there (interior drift -beta r, exterior
+beta r0^3/r^2), so the joined profile has a kink of magnitude
2|beta| r0 in the log-derivative. Both region drifts are stored and the
kink is left as-is: the normalizability verdict only reads the tail.

The cylinder mode exp(+beta r^2/2) / B r^{beta r0^2} is smooth at r0
(both one-sided log-derivatives equal beta r0). The slab family keeps
the displayed pieces exp(-k^2 z^2/2) inside and
exp(-k^2 L^2/2 + k(L - |z|)) outside, which are discontinuous at
|z| = L/2 for generic k; the relative jump is recorded per boundary in
continuity_defects rather than patched. A consistent_gaussian toggle
swaps in the Gauss-law interior exp(-2 pi eta rho0 z^2) with a
value-matched exp(-k(|z| - L/2)) tail.

Divergence is decided analytically from the tail exponent; quadrature
is only a cross-check on Finite verdicts, since no finite integration
can certify divergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from scipy.integrate import quad

from .errors import InadmissibleK, NonconfiningSign
from .fields import ChargeConfiguration, Cylinder, Slab, Sphere
from .units import (
    DEFAULT_CONSTANTS,
    PhysicalConstants,
    beta_cylinder,
    beta_sphere,
    coupling_eta,
    lambda_threshold,
)

__all__ = [
    "TailBehavior",
    "Region",
    "PiecewiseRadialFunction",
    "NormReport",
    "SusyVerdict",
    "sphere_zero_mode",
    "cylinder_zero_mode",
    "slab_zero_mode",
    "norm_integral",
    "susy_status",
    "zero_mode_residual",
]

_TINY = 1.0e-300


def _safe_exp(x: float) -> float:
    if x > 709.0:
        return math.inf
    if x < -745.0:
        return 0.0
    return math.exp(x)


@dataclass(frozen=True)
class TailBehavior:
    """Asymptotic form of the profile.

    kind "constant": phi -> const (parameter unused, 0.0)
    kind "power":    phi ~ r^parameter
    kind "exponential": phi ~ exp(-parameter * r)
    kind "gaussian":    phi ~ exp(-parameter * r^2)
    """

    kind: str
    parameter: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in ("constant", "power", "exponential", "gaussian"):
            raise ValueError(f"unknown tail kind {self.kind!r}")


@dataclass(frozen=True)
class Region:
    """One piece: closed-form values and the drift W = phi'/phi it obeys."""

    lo: float
    hi: float
    evaluate: Callable[[float], float]
    drift: Callable[[float], float]


@dataclass(frozen=True)
class PiecewiseRadialFunction:
    """Ordered piecewise profile over r >= 0 (radial) or all z (slab).

    measure is one of "r2dr" (3D), "rdr" (2D plane), "dz" (1D line);
    it fixes the weight |phi|^2 integrates against. Boundary points
    evaluate through the innermost region containing them (closed
    source region). continuity_defects holds the relative value jump
    at each internal boundary, in region order; the radial
    constructors produce exact matches (defect ~ 0) while the slab
    family is genuinely discontinuous and reports it here.
    """

    regions: tuple[Region, ...]
    matching_constants: tuple[float, ...]
    measure: str
    tail: TailBehavior
    params: dict = field(default_factory=dict)
    continuity_defects: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.measure not in ("r2dr", "rdr", "dz"):
            raise ValueError(f"unknown measure {self.measure!r}")
        if not self.regions:
            raise ValueError("at least one region required")
        for a, b in zip(self.regions, self.regions[1:]):
            if not math.isclose(a.hi, b.lo, rel_tol=0.0, abs_tol=0.0):
                raise ValueError("regions must be contiguous and ordered")

    def region_index(self, x: float) -> int:
        # innermost containing region wins; boundaries closed on the
        # side of the earlier (more interior) region
        for i, reg in enumerate(self.regions):
            if reg.lo <= x <= reg.hi:
                return i
        raise ValueError(f"point {x} outside the profile domain")

    def __call__(self, x: float) -> float:
        return self.regions[self.region_index(x)].evaluate(x)

    def drift_at(self, x: float) -> float:
        return self.regions[self.region_index(x)].drift(x)

    def boundaries(self) -> tuple[float, ...]:
        return tuple(reg.hi for reg in self.regions[:-1])

    @property
    def last_interior_boundary(self) -> float:
        bounds = [abs(b) for b in self.boundaries()]
        return max(bounds) if bounds else 0.0


def _relative_jump(f_lo: Callable[[float], float], f_hi: Callable[[float], float], x: float) -> float:
    a = f_lo(x)
    b = f_hi(x)
    return abs(b - a) / max(abs(a), abs(b), _TINY)


def sphere_zero_mode(beta: float, r0: float) -> PiecewiseRadialFunction:
    """Candidate zero mode of the uniformly charged ball, phi(0) = 1.

    Interior exp(-beta r^2/2); exterior A_out exp(-beta r0^3/r) with
    A_in/A_out = exp(-beta r0^2/2), which joins the values exactly.
    The tail is a nonzero constant for every beta, which is what makes
    the 3D norm diverge and the sphere verdict Broken.
    """
    _check_radius(r0)
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    a_out = _safe_exp(beta * r0**2 / 2.0)
    interior = Region(
        lo=0.0,
        hi=r0,
        evaluate=lambda r, b=beta: _safe_exp(-b * r * r / 2.0),
        drift=lambda r, b=beta: -b * r,
    )
    exterior = Region(
        lo=r0,
        hi=math.inf,
        evaluate=lambda r, b=beta, c=a_out, q=r0**3: c * _safe_exp(-b * q / r),
        drift=lambda r, b=beta, q=r0**3: b * q / (r * r),
    )
    return PiecewiseRadialFunction(
        regions=(interior, exterior),
        matching_constants=(_safe_exp(-beta * r0**2 / 2.0),),
        measure="r2dr",
        tail=TailBehavior("constant"),
        params={"geometry": "sphere", "beta": beta, "r0": r0},
        continuity_defects=(_relative_jump(interior.evaluate, exterior.evaluate, r0),),
    )


def cylinder_zero_mode(beta: float, r0: float) -> PiecewiseRadialFunction:
    """Candidate zero mode of the charged cylinder, phi(0) = 1.

    Interior exp(+beta r^2/2); exterior B r^p with p = beta r0^2 and
    B fixed by value continuity. Both one-sided log-derivatives at r0
    equal beta r0, so this profile is C^1. Plane-normalizable exactly
    when p < -1.
    """
    _check_radius(r0)
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    p = beta * r0**2
    log_b = p / 2.0 - p * math.log(r0)
    interior = Region(
        lo=0.0,
        hi=r0,
        evaluate=lambda r, b=beta: _safe_exp(b * r * r / 2.0),
        drift=lambda r, b=beta: b * r,
    )
    exterior = Region(
        lo=r0,
        hi=math.inf,
        evaluate=lambda r, lb=log_b, pw=p: _safe_exp(lb + pw * math.log(r)),
        drift=lambda r, pw=p: pw / r,
    )
    # stored ratio A/B with A = 1: boundary relation A e^{p/2} = B r0^p
    ratio = _safe_exp(p * math.log(r0) - p / 2.0)
    return PiecewiseRadialFunction(
        regions=(interior, exterior),
        matching_constants=(ratio,),
        measure="rdr",
        tail=TailBehavior("power", p),
        params={"geometry": "cylinder", "beta": beta, "r0": r0},
        continuity_defects=(_relative_jump(interior.evaluate, exterior.evaluate, r0),),
    )


def slab_zero_mode(
    k: float,
    rho0: float,
    L: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    consistent_gaussian: bool = False,
) -> PiecewiseRadialFunction:
    """Transverse profile phi_k(z) of the slab family, phi(0) = 1.

    Default is the displayed family: Gaussian exp(-k^2 z^2/2) inside,
    exp(-k^2 L^2/2 + k(L - |z|)) outside. For generic admissible k the
    pieces disagree at |z| = L/2 (they would meet at |z| = L); the
    relative jumps are recorded in continuity_defects, not repaired.
    consistent_gaussian=True instead uses the Gauss-law interior rate
    exp(-2 pi eta rho0 z^2) with a value-matched exp(-k(|z| - L/2))
    tail, which is continuous.

    Admissibility: k >= 0 and k^2 < 4 pi eta rho0. The degenerate
    chargeless case rho0 = 0, k = 0 is allowed and returns the free
    constant profile (identity check for the residual machinery).
    """
    if not (L > 0.0 and math.isfinite(L)):
        raise ValueError("L must be positive and finite")
    if not math.isfinite(k) or k < 0.0:
        raise ValueError(f"k must be nonnegative and finite, got {k}")
    bound = 4.0 * math.pi * coupling_eta(constants) * rho0
    if rho0 == 0.0 and k == 0.0:
        flat = Region(-math.inf, math.inf, lambda z: 1.0, lambda z: 0.0)
        return PiecewiseRadialFunction(
            regions=(flat,),
            matching_constants=(),
            measure="dz",
            tail=TailBehavior("constant"),
            params={"geometry": "slab", "k": 0.0, "L": L, "rho0": 0.0,
                    "variant": "free"},
        )
    if bound <= 0.0:
        raise NonconfiningSign(
            f"slab with 4 pi eta rho0 = {bound:.6g} <= 0 admits no normalizable family"
        )
    if k * k >= bound:
        raise InadmissibleK(
            f"k^2 = {k * k:.6g} not below the admissibility bound {bound:.6g} cm^-2"
        )

    half = L / 2.0
    if consistent_gaussian:
        rate = bound / 2.0  # 2 pi eta rho0
        amp = _safe_exp(-rate * half**2 + k * half)  # continue exp(-k(z-L/2)) value-matched
        mid = Region(
            -half, half,
            evaluate=lambda z, a=rate: _safe_exp(-a * z * z),
            drift=lambda z, a=rate: -2.0 * a * z,
        )
        upper = Region(
            half, math.inf,
            evaluate=lambda z, c=amp, kk=k: c * _safe_exp(-kk * z),
            drift=lambda z, kk=k: -kk,
        )
        lower = Region(
            -math.inf, -half,
            evaluate=lambda z, c=amp, kk=k: c * _safe_exp(kk * z),
            drift=lambda z, kk=k: kk,
        )
        variant = "consistent_gaussian"
    else:
        mid = Region(
            -half, half,
            evaluate=lambda z, kk=k: _safe_exp(-kk * kk * z * z / 2.0),
            drift=lambda z, kk=k: -kk * kk * z,
        )
        upper = Region(
            half, math.inf,
            evaluate=lambda z, kk=k, ll=L: _safe_exp(-kk * kk * ll * ll / 2.0 + kk * (ll - z)),
            drift=lambda z, kk=k: -kk,
        )
        lower = Region(
            -math.inf, -half,
            evaluate=lambda z, kk=k, ll=L: _safe_exp(-kk * kk * ll * ll / 2.0 + kk * (ll + z)),
            drift=lambda z, kk=k: kk,
        )
        variant = "as_displayed"

    regions = (lower, mid, upper)
    defects = (
        _relative_jump(lower.evaluate, mid.evaluate, -half),
        _relative_jump(mid.evaluate, upper.evaluate, half),
    )
    tail = TailBehavior("exponential", k) if k > 0.0 else TailBehavior("constant")
    return PiecewiseRadialFunction(
        regions=regions,
        matching_constants=(mid.evaluate(half) / max(upper.evaluate(half), _TINY),),
        measure="dz",
        tail=tail,
        params={"geometry": "slab", "k": k, "L": L, "rho0": rho0, "variant": variant,
                "k_bound_sq": bound},
        continuity_defects=defects,
    )


def _check_radius(r0: float) -> None:
    if not (r0 > 0.0 and math.isfinite(r0)):
        raise ValueError("r0 must be positive and finite")


@dataclass(frozen=True)
class NormReport:
    """Outcome of norm_integral.

    tail_exponent is the power-law exponent of the squared integrand
    |phi|^2 * weight at infinity: 2p + 2 (3D), 2p + 1 (2D), 0 for a
    constant tail in 1D, and -inf for exponential or Gaussian decay.
    verdict is Finite exactly when tail_exponent < -1. value is the
    truncated quadrature for Finite verdicts and inf otherwise.
    """

    value: float
    tail_exponent: float
    verdict: str


_MEASURE_POWER = {"r2dr": 2.0, "rdr": 1.0, "dz": 0.0}


def norm_integral(f: PiecewiseRadialFunction, r_max: float) -> NormReport:
    """Squared norm of the profile up to r_max plus tail classification."""
    last = f.last_interior_boundary
    if last > 0.0 and r_max < 10.0 * last:
        raise ValueError(
            f"r_max = {r_max:g} must be at least 10x the outermost boundary {last:g}"
        )
    if not (r_max > 0.0 and math.isfinite(r_max)):
        raise ValueError("r_max must be positive and finite")

    dpow = _MEASURE_POWER[f.measure]
    if f.tail.kind == "constant":
        tail_exponent = dpow
    elif f.tail.kind == "power":
        tail_exponent = 2.0 * f.tail.parameter + dpow
    else:
        tail_exponent = -math.inf
    verdict = "Finite" if tail_exponent < -1.0 else "Divergent"
    if verdict == "Divergent":
        return NormReport(value=math.inf, tail_exponent=tail_exponent, verdict=verdict)

    weight = {
        "r2dr": lambda x: x * x,
        "rdr": lambda x: x,
        "dz": lambda x: 1.0,
    }[f.measure]
    total = 0.0
    for reg in f.regions:
        lo = reg.lo if f.measure == "dz" else max(reg.lo, 0.0)
        lo = max(lo, -r_max)
        hi = min(reg.hi, r_max)
        if hi <= lo:
            continue
        val, _err = quad(
            lambda x, e=reg.evaluate: e(x) ** 2 * weight(x), lo, hi, limit=200
        )
        total += val
    return NormReport(value=total, tail_exponent=tail_exponent, verdict=verdict)


@dataclass(frozen=True)
class SusyVerdict:
    """Broken/Unbroken classification with the criterion spelled out.

    norm_value is finite exactly when status is Unbroken (inf otherwise).
    """

    status: str
    criterion: str
    norm_value: float
    threshold_data: dict

    def __post_init__(self) -> None:
        finite = math.isfinite(self.norm_value)
        if (self.status == "Unbroken") != finite:
            raise ValueError("status must be Unbroken exactly when norm_value is finite")


def susy_status(
    cfg: ChargeConfiguration,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> SusyVerdict:
    """Classify supersymmetry for the configuration via its zero mode."""
    if isinstance(cfg, Sphere):
        beta = beta_sphere(cfg.rho0, constants)
        data = {"beta": beta, "beta_r0_sq": beta * cfg.r0**2, "geometry": "sphere"}
        if cfg.rho0 == 0.0:
            return SusyVerdict(
                "Broken", "rho0 = 0: constant free-particle mode is not normalizable",
                math.inf, data,
            )
        return SusyVerdict(
            "Broken",
            f"exterior mode tends to the constant exp(beta r0^2/2) = "
            f"{_safe_exp(beta * cfg.r0 ** 2 / 2):.6g}; 3D norm diverges for every rho0",
            math.inf,
            data,
        )

    if isinstance(cfg, Cylinder):
        beta = beta_cylinder(cfg.rho, constants)
        p = beta * cfg.r0**2
        lam = cfg.rho * math.pi * cfg.r0**2
        data = {
            "beta": beta,
            "beta_r0_sq": p,
            "line_density": lam,
            "line_density_threshold": lambda_threshold(constants),
            "geometry": "cylinder",
        }
        if cfg.rho == 0.0:
            return SusyVerdict(
                "Broken", "rho = 0: constant free-particle mode is not normalizable",
                math.inf, data,
            )
        if p < -1.0:
            mode = cylinder_zero_mode(beta, cfg.r0)
            report = norm_integral(mode, 100.0 * cfg.r0)
            return SusyVerdict(
                "Unbroken",
                f"beta r0^2 = {p:.6g} < -1: plane norm of r^{{{p:.6g}}} tail converges",
                report.value,
                data,
            )
        return SusyVerdict(
            "Broken",
            f"beta r0^2 = {p:.6g} >= -1: plane norm of the power tail diverges",
            math.inf,
            data,
        )

    if isinstance(cfg, Slab):
        eta = coupling_eta(constants)
        bound = 4.0 * math.pi * eta * cfg.rho0
        data = {"k_bound_sq": bound, "geometry": "slab"}
        if bound <= 0.0:
            reason = (
                "rho0 = 0: constant free-particle mode is not normalizable"
                if cfg.rho0 == 0.0
                else f"4 pi eta rho0 = {bound:.6g} <= 0: no admissible transverse family"
            )
            return SusyVerdict("Broken", reason, math.inf, data)
        k_max = math.sqrt(bound)
        k_rep = k_max / 2.0
        mode = slab_zero_mode(k_rep, cfg.rho0, cfg.L, constants)
        report = norm_integral(mode, 20.0 * cfg.L)
        data.update(
            {
                "k_max": k_max,
                "representative_k": k_rep,
                "family": "continuous 0 <= k < k_max (infinite degeneracy)",
            }
        )
        return SusyVerdict(
            "Unbroken",
            f"admissible family exists: k^2 < 4 pi eta rho0 = {bound:.6g} cm^-2 "
            f"(k_max = {k_max:.6g} cm^-1, continuous degeneracy)",
            report.value,
            data,
        )

    raise TypeError(f"unsupported configuration type {type(cfg).__name__}")


def _mode_for(cfg: ChargeConfiguration, constants: PhysicalConstants,
              f: PiecewiseRadialFunction) -> PiecewiseRadialFunction:
    # consistency guard: the profile passed in must belong to cfg
    geom = f.params.get("geometry")
    expected = {"Sphere": "sphere", "Slab": "slab", "Cylinder": "cylinder"}[type(cfg).__name__]
    if geom != expected:
        raise ValueError(f"profile geometry {geom!r} does not match configuration {expected!r}")
    return f


def zero_mode_residual(
    f: PiecewiseRadialFunction,
    cfg: ChargeConfiguration,
    constants: PhysicalConstants,
    sample_points,
) -> float:
    """Max relative residual of the first-order equation phi' = W phi.

    phi' comes from a 5-point fourth-order central difference of the
    profile itself; W is the drift the closed form obeys on each region
    (magnitude eta E_r with its region's branch sign). The relative
    residual is |phi'_fd - W phi| / (|phi'_fd| + |W phi|), with 0/0
    read as 0 (free-particle case). Sample points must not sit on a
    region boundary.
    """
    _mode_for(cfg, constants, f)
    scale = f.params.get("r0") or f.params.get("L") or 1.0
    worst = 0.0
    for x in sample_points:
        x = float(x)
        idx = f.region_index(x)
        reg = f.regions[idx]
        dist = min(abs(x - reg.lo), abs(reg.hi - x))
        if dist == 0.0:
            raise ValueError(f"sample point {x} lies on a region boundary")
        h = 3.0e-4 * max(abs(x), 0.05 * scale)
        h = min(h, 0.24 * dist)  # keep the +-2h stencil inside one region
        fm2 = reg.evaluate(x - 2.0 * h)
        fm1 = reg.evaluate(x - h)
        fp1 = reg.evaluate(x + h)
        fp2 = reg.evaluate(x + 2.0 * h)
        dphi = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h)
        target = reg.drift(x) * reg.evaluate(x)
        denom = abs(dphi) + abs(target)
        if denom < _TINY:
            continue
        worst = max(worst, abs(dphi - target) / denom)
    return worst
