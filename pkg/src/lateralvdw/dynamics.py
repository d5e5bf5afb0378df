"""Decay rates, excited-state population and recoil velocity estimates."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import c, hbar, mu_0
from .forces import lateral_force_closed_form
from .greens import greens_free
from .system import TwoAtomSystem

__all__ = [
    "DecayRates",
    "DrivingParams",
    "free_decay_rate",
    "assisted_decay_rate",
    "population",
    "steady_state_population",
    "lateral_velocity",
    "impulse_velocity_single_shot",
]


@dataclass
class DecayRates:
    """Free-space rate, scatterer-induced correction and their sum, 1/s."""

    gamma_free: float
    gamma_correction: float
    gamma_total: float

    def __post_init__(self):
        if not math.isclose(
            self.gamma_total, self.gamma_free + self.gamma_correction, rel_tol=1e-12
        ):
            raise ValueError("gamma_total must equal gamma_free + gamma_correction")


@dataclass
class DrivingParams:
    """Weak coherent drive: Rabi frequency, detuning and duration (SI)."""

    rabi: float
    detuning: float
    duration: float

    def __post_init__(self):
        if self.rabi <= 0.0:
            raise ValueError(f"rabi must be positive, got {self.rabi}")
        if self.duration <= 0.0:
            raise ValueError(f"duration must be positive, got {self.duration}")


def free_decay_rate(system: TwoAtomSystem) -> float:
    """Free-space spontaneous decay rate of atom A, 1/s.

    Gamma = (2 mu0 omega^2 / hbar) |d|^2 Im G(r, r, omega) per component,
    with the coincidence limit Im G = omega/(6 pi c) I; |d|^2 sums the
    squared moduli of the dipole components (2 d^2 for the circular one).
    """
    omega = system.omega_a
    dsq = float(np.vdot(system.dipole_a, system.dipole_a).real)
    return 2.0 * mu_0 * omega**2 / hbar * omega / (6.0 * math.pi * c) * dsq


def assisted_decay_rate(system: TwoAtomSystem) -> DecayRates:
    """Decay rate including the scatterer-assisted correction.

    The correction is (2 mu0^2/hbar) omega^4 Im[d10 . G(r_A, r_B) alpha_B
    G(r_B, r_A) . d01]; it oscillates in sign with separation and is the
    closed-form counterpart of the mode-resolved density integral.
    """
    omega = system.omega_a
    d10 = system.dipole_a
    d01 = np.conj(d10)
    r_a, r_b = system.position_a, system.position_b
    sandwich = (
        d10
        @ greens_free(r_a, r_b, omega)
        @ (system.alpha_b * (greens_free(r_b, r_a, omega) @ d01))
    )
    correction = 2.0 * mu_0**2 / hbar * omega**4 * sandwich.imag
    free = free_decay_rate(system)
    return DecayRates(
        gamma_free=free,
        gamma_correction=correction,
        gamma_total=free + correction,
    )


def population(t: float, rates: DecayRates) -> float:
    """Excited population e^(-Gamma_total t) of an initially excited atom."""
    if t < 0.0:
        raise ValueError(f"time must be nonnegative, got {t}")
    return math.exp(-rates.gamma_total * t)


def steady_state_population(
    drive: DrivingParams, gamma_total: float | None = None
) -> float:
    """Weak-drive steady-state excited population Omega^2 / (4 Delta^2).

    Valid for Gamma << Omega << |Delta|; if ``gamma_total`` is supplied the
    regime is checked and violations produce a warning, not an error.
    """
    if drive.detuning == 0.0:
        raise ValueError("steady-state population requires a nonzero detuning")
    if gamma_total is not None:
        if not (5.0 * gamma_total <= drive.rabi <= abs(drive.detuning) / 5.0):
            warnings.warn(
                "drive outside the weak-excitation regime Gamma << Omega << |Delta|; "
                "the steady-state formula is only a leading-order estimate",
                stacklevel=2,
            )
    p1 = drive.rabi**2 / (4.0 * drive.detuning**2)
    return min(p1, 1.0)


def lateral_velocity(system: TwoAtomSystem, drive: DrivingParams) -> float:
    """Lateral velocity accumulated over the drive duration, m/s.

    v = F_x(p1 = 1) * p1_ss * duration / mass_A, using the closed-form
    lateral force and the steady-state population of the drive.
    """
    p1 = steady_state_population(drive)
    force = lateral_force_closed_form(system, 1.0)
    return force * p1 * drive.duration / system.mass_a


def impulse_velocity_single_shot(system: TwoAtomSystem, rates: DecayRates) -> float:
    """Velocity from one excitation decaying at Gamma_total, m/s.

    The lateral impulse of a single emission event is F_x(p1 = 1) times the
    excited-state lifetime.
    """
    if rates.gamma_total <= 0.0:
        raise ValueError("gamma_total must be positive for a single-shot estimate")
    force = lateral_force_closed_form(system, 1.0)
    return force / (system.mass_a * rates.gamma_total)
