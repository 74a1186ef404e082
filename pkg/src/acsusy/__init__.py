"""Supersymmetric analysis of a neutral spin-1/2 magnetic moment in static
charged sources: closed-form ground profiles, normalizability verdicts,
radial spectra, and an independent grid cross-check.

All quantities are Gaussian CGS; lengths in cm, densities in esu/cm^3,
couplings beta in cm^-2, spectral shifts epsilon = E^2 - M^2 c^4 (in units
where they carry cm^-2).
"""

from .errors import (
    AcsusyError,
    BoundaryPoint,
    ConfigError,
    GridTooCoarse,
    InadmissibleK,
    InvalidChannel,
    NoDecaySeed,
    NonconfiningSign,
    Overflow,
    PoleB,
    RangeExceeded,
)
from .fields import (
    Cylinder,
    Slab,
    Sphere,
    boundary_distance,
    charge_density,
    divergence_check,
    efield,
)
from .oracle import (
    DiscreteSusyPair,
    GridHamiltonian,
    build_grid_hamiltonian,
    build_susy_pair,
    eigenvector,
    grid_mode_overlap,
    lowest_eigenvalues,
    richardson_pair,
    susy_algebra_check,
)
from .radial import (
    BoundState,
    RadialProblem,
    ShootResult,
    SpectrumReport,
    ZeroModeMatch,
    channel_shift,
    effective_potential,
    find_spectrum,
    frobenius_exponent,
    interior_closed_form,
    shoot_exterior,
    shoot_interior,
)
from .slab import SlabSolution, build_slab_solution, degeneracy_family, slab_residual
from .specfun import ChannelQuantumNumbers, bessel_j, kummer_1f1, spin_orbit_eigenvalue
from .units import (
    DEFAULT_CONSTANTS,
    CouplingSet,
    PhysicalConstants,
    beta_cylinder,
    beta_sphere,
    coupling_eta,
    coupling_set,
    lambda_threshold,
    slab_k_bound,
)
from .zeromode import (
    NormReport,
    PiecewiseRadialFunction,
    SusyVerdict,
    TailBehavior,
    cylinder_zero_mode,
    norm_integral,
    slab_zero_mode,
    sphere_zero_mode,
    susy_status,
    zero_mode_residual,
)

__version__ = "0.1.0"

__all__ = [
    "AcsusyError",
    "BoundaryPoint",
    "ConfigError",
    "GridTooCoarse",
    "InadmissibleK",
    "InvalidChannel",
    "NoDecaySeed",
    "NonconfiningSign",
    "Overflow",
    "PoleB",
    "RangeExceeded",
    "Cylinder",
    "Slab",
    "Sphere",
    "boundary_distance",
    "charge_density",
    "divergence_check",
    "efield",
    "DiscreteSusyPair",
    "GridHamiltonian",
    "build_grid_hamiltonian",
    "build_susy_pair",
    "eigenvector",
    "grid_mode_overlap",
    "lowest_eigenvalues",
    "richardson_pair",
    "susy_algebra_check",
    "BoundState",
    "RadialProblem",
    "ShootResult",
    "SpectrumReport",
    "ZeroModeMatch",
    "channel_shift",
    "effective_potential",
    "find_spectrum",
    "frobenius_exponent",
    "interior_closed_form",
    "shoot_exterior",
    "shoot_interior",
    "SlabSolution",
    "build_slab_solution",
    "degeneracy_family",
    "slab_residual",
    "ChannelQuantumNumbers",
    "bessel_j",
    "kummer_1f1",
    "spin_orbit_eigenvalue",
    "DEFAULT_CONSTANTS",
    "CouplingSet",
    "PhysicalConstants",
    "beta_cylinder",
    "beta_sphere",
    "coupling_eta",
    "coupling_set",
    "lambda_threshold",
    "slab_k_bound",
    "NormReport",
    "PiecewiseRadialFunction",
    "SusyVerdict",
    "TailBehavior",
    "cylinder_zero_mode",
    "norm_integral",
    "slab_zero_mode",
    "sphere_zero_mode",
    "susy_status",
    "zero_mode_residual",
    "__version__",
]
