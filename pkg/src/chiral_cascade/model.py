"""Problem definition: chain parameters, unit conventions and derived scalars.

All rates and photon fluxes are expressed in units of the total single-atom
decay rate Gamma, which is fixed to 1 internally.  Powers are specified as
the dimensionless ratio P_in/P_sat with P_sat = Gamma/beta; the saturation
parameter s = 8 P_in/P_sat is available as an alias.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field


class ValidationError(ValueError):
    """Raised for out-of-range chain parameters."""


@dataclass(frozen=True)
class SystemParams:
    """Full problem definition for one chain solve.

    n_atoms: number of two-level atoms N (>= 1).
    beta: fraction of the decay rate emitted into the waveguide, in (0, 1].
    drive_ratio: input power over saturation power, P_in/P_sat >= 0.
    truncation_order: cumulant truncation order, 1 (mean field) to 4.
    gamma: total decay rate; fixed to 1, kept explicit for readability.
    """

    n_atoms: int
    beta: float
    drive_ratio: float
    truncation_order: int = 2
    gamma: float = field(default=1.0)

    def __post_init__(self):
        validate(self)


@dataclass(frozen=True)
class DerivedScalars:
    """Scalars derived from SystemParams (all dimensionless)."""

    optical_depth: float   # OD = 4 beta N
    saturation_s: float    # s = 8 P_in/P_sat
    alpha_1: float         # input field amplitude, alpha_1^2 = P_in/P_sat


def validate(params: SystemParams) -> SystemParams:
    """Check parameter ranges; returns the params unchanged on success."""
    if not isinstance(params.n_atoms, int) or params.n_atoms < 1:
        raise ValidationError("n_atoms must be >= 1")
    if not (0.0 < params.beta <= 1.0):
        raise ValidationError("beta must be in (0,1]")
    if not (params.drive_ratio >= 0.0) or not math.isfinite(params.drive_ratio):
        raise ValidationError("drive_ratio must be >= 0 and finite")
    if params.truncation_order not in (1, 2, 3, 4):
        raise ValidationError("truncation_order must be one of 1, 2, 3, 4")
    if params.gamma != 1.0:
        raise ValidationError("gamma is fixed to 1 (all quantities in units of Gamma)")
    return params


def derive(params: SystemParams) -> DerivedScalars:
    """Optical depth, saturation parameter and input amplitude."""
    return DerivedScalars(
        optical_depth=4.0 * params.beta * params.n_atoms,
        saturation_s=8.0 * params.drive_ratio,
        alpha_1=math.sqrt(params.drive_ratio),
    )


def saturation_power(params: SystemParams) -> float:
    """P_sat = Gamma/beta, in units of Gamma."""
    return params.gamma / params.beta


def input_power(params: SystemParams) -> float:
    """P_in as a photon flux in units of Gamma."""
    return params.drive_ratio * saturation_power(params)
