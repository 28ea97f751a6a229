"""TE-mode plane-wave propagation through an air / plate / air stack.

Wavenumbers, interface (Fresnel) coefficients, and the generalized
reflection coefficient of a finite-thickness layer including all internal
multiples. All functions are pure and accept numpy arrays in any argument
that is not a structured object, broadcasting as usual.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .model import MU_0, Plate

# Above this value of Re(2*k2*D) the transmitted wave is fully absorbed and
# the slab behaves as a half-space; exp(-x) would underflow anyway.
_HALF_SPACE_EXPONENT = 700.0


class InterfaceCoeffs(NamedTuple):
    """Fresnel reflection/transmission amplitude ratios at one interface."""

    reflection: np.ndarray | complex
    transmission: np.ndarray | complex


def wavenumber(alpha0, omega, sigma, mu):
    """Layer wavenumber k = sqrt(alpha0^2 + j*omega*sigma*mu), principal branch.

    For sigma = 0 this collapses to the purely real alpha0; Re(k) > 0 always.
    """
    return np.sqrt(alpha0 * alpha0 + 1j * omega * sigma * mu)


def fresnel(k_i, k_j, mu_i, mu_j) -> InterfaceCoeffs:
    """Interface coefficients for a wave going from medium i into medium j.

    reflection = (mu_j k_i - mu_i k_j) / (mu_j k_i + mu_i k_j)
    transmission = 2 mu_j k_i / (mu_j k_i + mu_i k_j) = 1 + reflection
    """
    num = mu_j * k_i - mu_i * k_j
    den = mu_j * k_i + mu_i * k_j
    if np.any(np.abs(den) == 0.0):
        raise ZeroDivisionError("degenerate interface: mu_j k_i + mu_i k_j = 0")
    r = num / den
    # 2 mu_j k_i / den == 1 + r algebraically; the latter keeps the identity
    # exact in floating point as well.
    return InterfaceCoeffs(reflection=r, transmission=1.0 + r)


def _one_minus_exp_neg(z):
    """1 - exp(-z) for complex z without cancellation at small |z|."""
    a = np.real(z)
    b = np.imag(z)
    ea = np.exp(-a)
    # 1 - e^{-a} cos b + j e^{-a} sin b, with the real part split into the
    # cancellation-free pieces -expm1(-a) and e^{-a} * 2 sin^2(b/2).
    return -np.expm1(-a) + ea * 2.0 * np.sin(0.5 * b) ** 2 + 1j * ea * np.sin(b)


def generalized_reflection(alpha0, omega, plate: Plate, ambient_mu: float = MU_0):
    """Effective reflection of the plate seen from the coil side.

    Composition of the interface multiples in closed form,

        R~ = r (1 - E) / (1 - r^2 E),   E = exp(-2 k2 D),

    with r the air->plate Fresnel reflection. Both half-space interfaces are
    free space, so the plate->air reflection is exactly -r and the closed
    form collapses to the single-parameter expression above.

    Numerics: r is evaluated from the difference of squared wavenumbers
    (which is j omega sigma mu, known exactly) rather than the difference of
    square roots, and 1 - E uses an expm1-style form; both would otherwise
    lose all significant digits in the weakly conducting / large-alpha
    regime. Only decaying exponentials appear; when Re(2 k2 D) is huge, E is
    set to 0 and the half-space limit r is returned.
    """
    mu1 = ambient_mu
    mu2 = MU_0 * plate.relative_permeability
    k1 = wavenumber(alpha0, omega, 0.0, mu1)
    k2 = wavenumber(alpha0, omega, plate.conductivity, mu2)
    # mu2 k1 - mu1 k2 = (mu2^2 k1^2 - mu1^2 k2^2) / (mu2 k1 + mu1 k2), and
    # k2^2 - k1^2 = j omega sigma2 mu2 exactly.
    den = mu2 * k1 + mu1 * k2
    num = (mu2 * mu2 - mu1 * mu1) * k1 * k1 - 1j * omega * plate.conductivity * mu2 * mu1 * mu1
    r = num / (den * den)
    x = 2.0 * k2 * plate.thickness
    decayed = np.real(x) > _HALF_SPACE_EXPONENT
    x_safe = np.where(decayed, 1.0, x)
    one_minus_E = np.where(decayed, 1.0, _one_minus_exp_neg(x_safe))
    E = 1.0 - one_minus_E
    return r * one_minus_E / (1.0 - r * r * E)
