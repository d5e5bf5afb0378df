"""Free-space dyadic Green's tensor of the electric field wave equation.

Closed form, analytic spatial gradient, the lateral-momentum (cylindrical
wave) resolution, and the single-scatterer Born term.  The closed form is
organised as dimensionless shape coefficients of xi = omega r / c times an
explicit 1/(4 pi r) scale, so nothing underflows even at deeply
sub-wavelength separations where SI intermediates get small.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .constants import c
from .quadrature import (
    QuadratureConfig,
    integrate_angle,
    integrate_evanescent,
    integrate_propagating,
    transverse_wavenumber,
)

__all__ = [
    "greens_free",
    "greens_free_gradient",
    "greens_cylindrical_mode",
    "born_expanded_greens",
    "greens_free_from_modes",
    "greens_free_imag",
    "greens_free_gradient_imag",
]

_EYE = np.eye(3)


def _shape_coefficients(xi: complex) -> tuple[complex, complex]:
    """Transverse and radial scalar shapes a, b with
    G = e^{i xi}/(4 pi r) * (a I + b RR)."""
    inv = 1.0 / xi
    a = 1.0 + 1j * inv - inv * inv
    b = -1.0 - 3j * inv + 3.0 * inv * inv
    return a, b


def _separation(r_from, r_to) -> tuple[np.ndarray, float]:
    rr = np.asarray(r_from, dtype=float) - np.asarray(r_to, dtype=float)
    dist = float(np.linalg.norm(rr))
    if dist == 0.0:
        raise ValueError("Green's tensor requires two distinct points")
    return rr, dist


def greens_free(r_from, r_to, omega: float) -> np.ndarray:
    """Free-space dyadic Green's tensor G(r_from, r_to, omega), units 1/m."""
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    rr, dist = _separation(r_from, r_to)
    unit = rr / dist
    xi = omega * dist / c
    a, b = _shape_coefficients(xi)
    scale = cmath.exp(1j * xi) / (4.0 * math.pi * dist)
    return scale * (a * _EYE + b * np.outer(unit, unit))


def greens_free_gradient(r_from, r_to, omega: float) -> np.ndarray:
    """Gradient of greens_free with respect to r_from.

    Returns grad[k, i, j] = d G_ij / d r_from[k], units 1/m^2.
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    rr, dist = _separation(r_from, r_to)
    unit = rr / dist
    xi = omega * dist / c
    inv = 1.0 / xi
    phase = cmath.exp(1j * xi)

    _, b = _shape_coefficients(xi)
    # Radial derivatives of the scalar coefficients A(r) = e^{i xi} a/(4 pi r)
    # and B(r) = e^{i xi} b/(4 pi r), expressed as shapes over 1/(4 pi r^2).
    da = 1j * xi - 2.0 - 3j * inv + 3.0 * inv * inv
    db = -1j * xi + 4.0 + 9j * inv - 9.0 * inv * inv

    s2 = phase / (4.0 * math.pi * dist * dist)
    b_over_r = phase * b / (4.0 * math.pi * dist * dist)

    uu = np.outer(unit, unit)
    grad = np.empty((3, 3, 3), dtype=complex)
    for k in range(3):
        term = s2 * unit[k] * (da * _EYE + db * uu)
        ek = _EYE[k]
        proj = np.outer(ek - unit[k] * unit, unit)
        grad[k] = term + b_over_r * (proj + proj.T)
    return grad


def greens_cylindrical_mode(delta_r, omega: float, k_par: float, phi: float) -> np.ndarray:
    """Tensor density of the lateral-momentum resolution of greens_free.

    Integrating the result against k_par dk_par dphi over [0, inf) x
    [0, 2 pi) reproduces the closed-form tensor for the same displacement.
    ``delta_r`` is r_from - r_to and must have a nonzero z component, since
    the plane-wave factorisation exp(i k_perp |dz|) assumes the observation
    plane does not contain the source.
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    if k_par < 0.0:
        raise ValueError(f"k_par must be nonnegative, got {k_par}")
    dr = np.asarray(delta_r, dtype=float)
    dx, dy, dz = dr
    if dz == 0.0:
        raise ValueError("cylindrical mode tensor requires a nonzero z displacement")

    k_perp = transverse_wavenumber(k_par, omega)
    kvec = np.array(
        [k_par * math.cos(phi), k_par * math.sin(phi), math.copysign(1.0, dz) * k_perp],
        dtype=complex,
    )
    phase = cmath.exp(
        1j * (k_par * (dx * math.cos(phi) + dy * math.sin(phi)) + k_perp * abs(dz))
    )
    csq = (c / omega) ** 2
    tensor = _EYE - csq * np.outer(kvec, kvec)
    return (1j / (8.0 * math.pi**2 * k_perp)) * phase * tensor


def born_expanded_greens(r, r_prime, r_scatter, omega: float, alpha_b: float) -> np.ndarray:
    """Single-scatterer correction mu0 omega^2 G(r, r_s) alpha_B G(r_s, r')."""
    from .constants import mu_0

    g_out = greens_free(r, r_scatter, omega)
    g_back = greens_free(r_scatter, r_prime, omega)
    return mu_0 * omega**2 * alpha_b * (g_out @ g_back)


def greens_free_from_modes(delta_r, omega: float,
                           config: QuadratureConfig | None = None) -> np.ndarray:
    """Closed-form tensor rebuilt by quadrature over its cylindrical modes.

    Serves as the independent numerical route against greens_free; the
    azimuthal integral runs first at fixed k_par, then the k_par axis is
    integrated separately on the propagating and evanescent sides.
    """
    dr = np.asarray(delta_r, dtype=float)
    dist = abs(dr[2])
    if dist == 0.0:
        raise ValueError("mode resolution requires a nonzero z displacement")

    def ring(k_par: float) -> np.ndarray:
        return integrate_angle(
            lambda phi: greens_cylindrical_mode(dr, omega, k_par, phi).ravel(), config
        )

    def integrand(k_par: float, _k_perp: complex) -> np.ndarray:
        return k_par * ring(k_par)

    total = integrate_propagating(integrand, omega, config)
    total = total + integrate_evanescent(integrand, omega, dist, config)
    return total.reshape(3, 3)


def _imag_freq_shapes(eta: float) -> tuple[float, float]:
    inv = 1.0 / eta
    a = 1.0 + inv + inv * inv
    b = -1.0 - 3.0 * inv - 3.0 * inv * inv
    return a, b


def greens_free_imag(r_from, r_to, zeta: float) -> np.ndarray:
    """Green's tensor at imaginary frequency omega = i zeta; real, 1/m."""
    if zeta <= 0.0:
        raise ValueError(f"zeta must be positive, got {zeta}")
    rr, dist = _separation(r_from, r_to)
    unit = rr / dist
    eta = zeta * dist / c
    a, b = _imag_freq_shapes(eta)
    scale = math.exp(-eta) / (4.0 * math.pi * dist)
    return scale * (a * _EYE + b * np.outer(unit, unit))


def greens_free_gradient_imag(r_from, r_to, zeta: float) -> np.ndarray:
    """Gradient of greens_free_imag with respect to r_from; grad[k, i, j]."""
    if zeta <= 0.0:
        raise ValueError(f"zeta must be positive, got {zeta}")
    rr, dist = _separation(r_from, r_to)
    unit = rr / dist
    eta = zeta * dist / c
    inv = 1.0 / eta
    _, b = _imag_freq_shapes(eta)
    da = -eta - 2.0 - 3.0 * inv - 3.0 * inv * inv
    db = eta + 4.0 + 9.0 * inv + 9.0 * inv * inv

    decay = math.exp(-eta)
    s2 = decay / (4.0 * math.pi * dist * dist)
    b_over_r = decay * b / (4.0 * math.pi * dist * dist)

    uu = np.outer(unit, unit)
    grad = np.empty((3, 3, 3))
    for k in range(3):
        term = s2 * unit[k] * (da * _EYE + db * uu)
        ek = _EYE[k]
        proj = np.outer(ek - unit[k] * unit, unit)
        grad[k] = term + b_over_r * (proj + proj.T)
    return grad
