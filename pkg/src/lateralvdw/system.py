"""Two-atom geometry and dipole conventions.

Atom A (the excited, circularly polarised one) sits at the origin; atom B
(the isotropic ground-state scatterer) sits below it on the z axis at the
given separation.  The circular dipole lives in the x-z plane, so lateral
effects single out the x direction and the azimuth phi is measured from
+x in the x-y plane.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import (
    CESIUM_DIPOLE,
    CESIUM_MASS,
    CESIUM_WAVELENGTH,
    RUBIDIUM_POLARIZABILITY,
    angular_frequency,
    c,
)

__all__ = ["TwoAtomSystem", "circular_dipole", "circular_dipole_parameters"]

# Sign of atom B's z coordinate relative to atom A.  With a "right" dipole
# this choice makes the lateral force point along +x where the closed-form
# bracket is positive; flipping it is equivalent to swapping handedness.
_ATOM_B_SIDE = -1.0


def circular_dipole(magnitude: float, handedness: str = "right") -> np.ndarray:
    """Circular transition dipole d * (i, 0, 1) or its mirror image.

    ``magnitude`` is the scalar d in C m; ``handedness`` selects the sign of
    the imaginary x component ("right" -> +i, "left" -> -i).  The returned
    vector is a null vector under the unconjugated dot product.
    """
    if magnitude <= 0.0:
        raise ValueError(f"dipole magnitude must be positive, got {magnitude}")
    if handedness == "right":
        sx = 1.0j
    elif handedness == "left":
        sx = -1.0j
    else:
        raise ValueError(f"handedness must be 'right' or 'left', got {handedness!r}")
    return magnitude * np.array([sx, 0.0, 1.0])


def circular_dipole_parameters(dipole: np.ndarray) -> tuple[float, float]:
    """Extract (magnitude, handedness sign) from a circular x-z dipole.

    Accepts vectors proportional to (+-i, 0, 1) up to a global complex
    phase and raises ValueError for anything else; the closed-form force
    and emission expressions are only valid for that polarisation.
    """
    d = np.asarray(dipole, dtype=complex)
    if d.shape != (3,):
        raise ValueError("dipole must be a 3-vector")
    scale = np.max(np.abs(d))
    if scale == 0.0:
        raise ValueError("dipole must be nonzero")
    if abs(d[1]) > 1e-10 * scale:
        raise ValueError("closed forms require a dipole in the x-z plane")
    if abs(d[2]) < 1e-10 * scale:
        raise ValueError("closed forms require a nonzero z dipole component")
    ratio = d[0] / (1.0j * d[2])
    if abs(ratio.imag) > 1e-10 or abs(abs(ratio.real) - 1.0) > 1e-10:
        raise ValueError(
            "dipole is not circularly polarised in the x-z plane; "
            "expected a multiple of (i, 0, 1) or (-i, 0, 1)"
        )
    return float(abs(d[2])), float(np.sign(ratio.real))


@dataclass
class TwoAtomSystem:
    """Excited atom A and ground-state scatterer B on the z axis.

    omega_a     transition angular frequency of A, rad/s
    dipole_a    complex transition dipole <1|d|0> of A, C m
    alpha_b     scalar polarizability of B at omega_a, F m^2
    separation  |r_A - r_B|, m
    mass_a      mass of atom A, kg (used for velocities)
    """

    omega_a: float
    dipole_a: np.ndarray
    alpha_b: float
    separation: float
    mass_a: float = CESIUM_MASS

    def __post_init__(self):
        self.dipole_a = np.asarray(self.dipole_a, dtype=complex)
        if self.dipole_a.shape != (3,):
            raise ValueError("dipole_a must be a 3-vector")
        if not self.omega_a > 0.0:
            raise ValueError(f"omega_a must be positive, got {self.omega_a}")
        if not self.separation > 0.0:
            raise ValueError(f"separation must be positive, got {self.separation}")
        if not self.alpha_b > 0.0:
            raise ValueError(f"alpha_b must be positive, got {self.alpha_b}")
        if not self.mass_a > 0.0:
            raise ValueError(f"mass_a must be positive, got {self.mass_a}")

    @classmethod
    def cs_rb(
        cls,
        separation: float,
        handedness: str = "right",
        dipole_moment: float = CESIUM_DIPOLE,
        wavelength: float = CESIUM_WAVELENGTH,
        alpha_b: float = RUBIDIUM_POLARIZABILITY,
        mass_a: float = CESIUM_MASS,
    ) -> "TwoAtomSystem":
        """Default Cs-Rb system at the given separation."""
        return cls(
            omega_a=angular_frequency(wavelength),
            dipole_a=circular_dipole(dipole_moment, handedness),
            alpha_b=alpha_b,
            separation=separation,
            mass_a=mass_a,
        )

    @property
    def xi(self) -> float:
        """Dimensionless retardation parameter omega_a * separation / c."""
        return self.omega_a * self.separation / c

    @property
    def position_a(self) -> np.ndarray:
        return np.zeros(3)

    @property
    def position_b(self) -> np.ndarray:
        return np.array([0.0, 0.0, _ATOM_B_SIDE * self.separation])

    def circular_parameters(self) -> tuple[float, float]:
        """(d, handedness sign) of the circular dipole; raises if not circular."""
        return circular_dipole_parameters(self.dipole_a)
