"""Piecewise electric fields for the three source geometries.

The default expressions follow the source analysis verbatim, including
two places where they are not Gauss-law consistent: the cylinder
normalization (rho x / 2 where Gauss gives 2 pi rho x) and the slab
exterior magnitude (4 pi rho0 L where the interior reaches 2 pi rho0 L
at the face). Pass strict_gauss=True to substitute the self-consistent
values. Both conventions stay testable; divergence_check reports the
residual against 4 pi rho either way.

Boundary points evaluate through the interior branch (regions are
closed on the inside).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import BoundaryPoint

__all__ = [
    "Sphere",
    "Slab",
    "Cylinder",
    "ChargeConfiguration",
    "efield",
    "charge_density",
    "divergence_check",
    "boundary_distance",
]


@dataclass(frozen=True)
class Sphere:
    """Uniform ball of charge: density rho0 [esu/cm^3] inside radius r0 [cm]."""

    rho0: float
    r0: float

    def __post_init__(self) -> None:
        _check_density(self.rho0, "rho0")
        if not (self.r0 > 0.0 and math.isfinite(self.r0)):
            raise ValueError("r0 must be positive and finite")


@dataclass(frozen=True)
class Slab:
    """Uniform slab: density rho0 [esu/cm^3], thickness L [cm], centered on z = 0."""

    rho0: float
    L: float

    def __post_init__(self) -> None:
        _check_density(self.rho0, "rho0")
        if not (self.L > 0.0 and math.isfinite(self.L)):
            raise ValueError("L must be positive and finite")


@dataclass(frozen=True)
class Cylinder:
    """Uniform infinite cylinder along z: density rho [esu/cm^3], radius r0 [cm]."""

    rho: float
    r0: float

    def __post_init__(self) -> None:
        _check_density(self.rho, "rho")
        if not (self.r0 > 0.0 and math.isfinite(self.r0)):
            raise ValueError("r0 must be positive and finite")


ChargeConfiguration = Union[Sphere, Slab, Cylinder]


def _check_density(value: float, name: str) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite")


def efield(
    cfg: ChargeConfiguration,
    x: "np.ndarray | list[float] | tuple[float, float, float]",
    strict_gauss: bool = False,
) -> np.ndarray:
    """Electric field at point x, as a length-3 array in esu/cm^2.

    Finite everywhere including boundaries and the symmetry center/axis.
    """
    pos = np.asarray(x, dtype=float)
    if pos.shape != (3,):
        raise ValueError("x must be a 3-vector")

    if isinstance(cfg, Sphere):
        r = float(np.linalg.norm(pos))
        if r <= cfg.r0:
            return (4.0 * math.pi * cfg.rho0 / 3.0) * pos
        return (4.0 * math.pi * cfg.rho0 * cfg.r0**3 / 3.0) * pos / r**3

    if isinstance(cfg, Slab):
        z = pos[2]
        if abs(z) <= cfg.L / 2.0:
            ez = 4.0 * math.pi * cfg.rho0 * z
        else:
            # face value of the interior formula is 2*pi*rho0*L; the
            # verbatim exterior doubles it, strict_gauss keeps it
            scale = 2.0 * math.pi if strict_gauss else 4.0 * math.pi
            ez = scale * cfg.rho0 * cfg.L * math.copysign(1.0, z)
        return np.array([0.0, 0.0, ez])

    if isinstance(cfg, Cylinder):
        perp = np.array([pos[0], pos[1], 0.0])
        s = float(math.hypot(pos[0], pos[1]))
        amp = 2.0 * math.pi * cfg.rho if strict_gauss else cfg.rho / 2.0
        if s <= cfg.r0:
            return amp * perp
        return amp * cfg.r0**2 * perp / s**2

    raise TypeError(f"unsupported configuration type {type(cfg).__name__}")


def charge_density(cfg: ChargeConfiguration, x) -> float:
    """Source density at x: the configuration's density inside, 0 outside."""
    pos = np.asarray(x, dtype=float)
    if isinstance(cfg, Sphere):
        return cfg.rho0 if float(np.linalg.norm(pos)) <= cfg.r0 else 0.0
    if isinstance(cfg, Slab):
        return cfg.rho0 if abs(pos[2]) <= cfg.L / 2.0 else 0.0
    if isinstance(cfg, Cylinder):
        return cfg.rho if math.hypot(pos[0], pos[1]) <= cfg.r0 else 0.0
    raise TypeError(f"unsupported configuration type {type(cfg).__name__}")


def boundary_distance(cfg: ChargeConfiguration, x) -> float:
    """Distance from x to the nearest region interface."""
    pos = np.asarray(x, dtype=float)
    if isinstance(cfg, Sphere):
        return abs(float(np.linalg.norm(pos)) - cfg.r0)
    if isinstance(cfg, Slab):
        return abs(abs(float(pos[2])) - cfg.L / 2.0)
    if isinstance(cfg, Cylinder):
        return abs(math.hypot(float(pos[0]), float(pos[1])) - cfg.r0)
    raise TypeError(f"unsupported configuration type {type(cfg).__name__}")


def divergence_check(
    cfg: ChargeConfiguration,
    x,
    h: float,
    strict_gauss: bool = False,
) -> float:
    """Central-difference div E minus 4 pi rho at x.

    The residual is 0 up to rounding inside regions where the implemented
    field is Gauss-consistent, and O(rho) where it is not (the verbatim
    cylinder normalization). Raises BoundaryPoint when the +-h stencil
    could straddle an interface.
    """
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError("h must be positive and finite")
    pos = np.asarray(x, dtype=float)
    if boundary_distance(cfg, pos) <= h:
        raise BoundaryPoint(
            f"stencil of half-width {h:g} straddles an interface near {pos.tolist()}"
        )
    div = 0.0
    for axis in range(3):
        step = np.zeros(3)
        step[axis] = h
        e_plus = efield(cfg, pos + step, strict_gauss=strict_gauss)
        e_minus = efield(cfg, pos - step, strict_gauss=strict_gauss)
        div += (e_plus[axis] - e_minus[axis]) / (2.0 * h)
    return div - 4.0 * math.pi * charge_density(cfg, pos)
