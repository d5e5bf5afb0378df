"""Physical constants and default atom parameters for the Cs-Rb scenario.

All quantities are SI unless a name says otherwise.
"""

import math

from scipy.constants import atomic_mass, c, epsilon_0, hbar, mu_0

__all__ = [
    "c",
    "epsilon_0",
    "mu_0",
    "hbar",
    "atomic_mass",
    "CESIUM_DIPOLE",
    "CESIUM_WAVELENGTH",
    "CESIUM_MASS",
    "RUBIDIUM_MASS",
    "RUBIDIUM_POLARIZABILITY_VOLUME",
    "RUBIDIUM_POLARIZABILITY",
    "RUBIDIUM_RESONANCE_WAVELENGTH",
    "angular_frequency",
]

# Transition dipole magnitude of the driven Cs line, C m.
CESIUM_DIPOLE = 1.9e-29

# Cs D2 transition wavelength, m.
CESIUM_WAVELENGTH = 852e-9

CESIUM_MASS = 132.90545196 * atomic_mass

# Rb-87; only the ground-state response of atom B enters, so the isotope
# choice only matters for the center-of-mass lever arm.
RUBIDIUM_MASS = 86.909180531 * atomic_mass

# Ground-state Rb polarizability volume at the Cs D2 frequency, m^3.
RUBIDIUM_POLARIZABILITY_VOLUME = 293e-30

# Same quantity in SI units (F m^2): alpha = 4 pi eps0 * volume.
RUBIDIUM_POLARIZABILITY = 4.0 * math.pi * epsilon_0 * RUBIDIUM_POLARIZABILITY_VOLUME

# Rb D2 line, anchor for the single-resonance model of alpha_B at
# imaginary frequency.
RUBIDIUM_RESONANCE_WAVELENGTH = 780.241e-9


def angular_frequency(wavelength: float) -> float:
    """Angular frequency (rad/s) of light with the given vacuum wavelength."""
    if wavelength <= 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    return 2.0 * math.pi * c / wavelength
