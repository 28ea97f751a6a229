"""Full integral forward solver for the coaxial coil pair above a plate.

Absolute complex delta-L(omega) as a semi-infinite integral over spatial
frequency with a Bessel-function coil kernel:

    dL = pref * int_0^inf P(a)^2 / a^6 * axial(a) * phi(a, omega) da

where P(a) = int_{a r1}^{a r2} x J1(x) dx is the radial winding integral,
axial(a) carries the lift-off/height exponentials of both coils, and
phi(a, omega) is the generalized layer reflection evaluated at k1 = a.
The free-space mutual inductance L_air uses the same kernel with phi
replaced by the direct coil-to-coil propagation factor.

The kernel (P, axial factors) is frequency independent and cached per
(coil, quadrature grid), so a frequency sweep pays the Bessel evaluations
only once.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy import special

from .model import MU_0, CoilPair, Plate
from .te_layered import generalized_reflection

_GAUSS_ORDER = 16
_MAX_REFINEMENTS = 6


class QuadratureConvergenceError(RuntimeError):
    """Successive grid refinements failed to agree within tolerance."""


class TruncationWarning(UserWarning):
    """The estimated tail beyond alpha_max exceeds the requested tolerance."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Semi-infinite integral discretization.

    ``alpha_max = None`` derives the truncation point from the coil geometry
    (40 / min(liftoff, inner_radius)), which puts the neglected tail far
    below double precision for the axial decay rates involved.
    """

    alpha_max: float | None = None   # [1/m]
    n_panels: int = 64
    rule: str = "adaptive"           # "adaptive" | "fixed"
    rel_tolerance: float = 1e-8

    def __post_init__(self):
        if self.alpha_max is not None and self.alpha_max <= 0.0:
            raise ValueError("alpha_max must be positive")
        if self.n_panels < 8:
            raise ValueError("n_panels must be >= 8")
        if self.rule not in ("adaptive", "fixed"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if not 0.0 < self.rel_tolerance < 1.0:
            raise ValueError("rel_tolerance must be in (0, 1)")

    def resolve_alpha_max(self, coil: CoilPair) -> float:
        if self.alpha_max is not None:
            return self.alpha_max
        return 40.0 / min(coil.liftoff, coil.inner_radius)


class CoilKernel(NamedTuple):
    """Frequency-independent kernel samples at a set of alpha nodes."""

    p_radial: np.ndarray    # P(alpha), radial winding integral
    axial: np.ndarray       # reflected-wave lift-off/height factor
    air: np.ndarray         # direct coil-to-coil propagation factor
    prefactor: float        # [H] producing constant


def bessel_j1(x):
    """First-kind order-1 Bessel function."""
    return special.j1(x)


_RADIAL_GAUSS_ORDER = 24


def radial_integral(coil: CoilPair, alpha):
    """P(alpha) = int_{alpha r1}^{alpha r2} x J1(x) dx.

    Direct Gauss-Legendre quadrature per alpha: the winding interval spans
    alpha * (r2 - r1) radians of the J1 oscillation, which stays short enough
    for a fixed-order rule to be accurate to machine precision at every
    truncation point used here.
    """
    a = np.atleast_1d(np.asarray(alpha, dtype=float))
    x, w = np.polynomial.legendre.leggauss(_RADIAL_GAUSS_ORDER)
    lo = a * coil.inner_radius
    hi = a * coil.outer_radius
    # Subdivide so each panel covers at most ~8 radians of J1 oscillation.
    n_sub = max(1, int(np.ceil(np.max(hi - lo) / 8.0)))
    edges = lo[:, None] + (hi - lo)[:, None] * np.linspace(0.0, 1.0, n_sub + 1)[None, :]
    half = 0.5 * (edges[:, 1:] - edges[:, :-1])
    mid = 0.5 * (edges[:, 1:] + edges[:, :-1])
    t = mid[..., None] + half[..., None] * x
    values = np.sum(half * np.sum(w * t * special.j1(t), axis=-1), axis=-1)
    return values if np.ndim(alpha) else float(values[0])


def axial_factor(coil: CoilPair, alpha):
    """Product of the two coils' image-wave exponential windows."""
    a = np.asarray(alpha, dtype=float)
    tx = np.exp(-a * coil.tx_bottom) - np.exp(-a * coil.tx_top)
    rx = np.exp(-a * coil.rx_bottom) - np.exp(-a * coil.rx_top)
    return tx * rx


def air_factor(coil: CoilPair, alpha):
    """Direct propagation window between the two (non-overlapping) coils."""
    a = np.asarray(alpha, dtype=float)
    return (
        np.exp(-a * coil.gap)
        * (1.0 - np.exp(-a * coil.coil_height))
        * (1.0 - np.exp(-a * coil.coil_height))
    )


def kernel_prefactor(coil: CoilPair) -> float:
    dr = coil.outer_radius - coil.inner_radius
    h = coil.coil_height
    return np.pi * MU_0 * coil.turns_tx * coil.turns_rx / (dr * dr * h * h)


def coil_kernel(coil: CoilPair, alpha) -> CoilKernel:
    """Sample the full frequency-independent kernel at the given alphas."""
    return CoilKernel(
        p_radial=radial_integral(coil, alpha),
        axial=axial_factor(coil, alpha),
        air=air_factor(coil, alpha),
        prefactor=kernel_prefactor(coil),
    )


@lru_cache(maxsize=32)
def _kernel_table(coil: CoilPair, alpha_max: float, n_panels: int):
    """Gauss-Legendre nodes/weights on [0, alpha_max] plus kernel samples."""
    x, w = np.polynomial.legendre.leggauss(_GAUSS_ORDER)
    # Geometrically graded panels: the low-frequency reflection factor has a
    # boundary layer at alpha ~ omega mu sigma D that a uniform grid cannot
    # resolve, while the kernel tail needs reach up to alpha_max.
    edges = np.concatenate(
        [[0.0], np.geomspace(1e-8 * alpha_max, alpha_max, n_panels)]
    )
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    kern = coil_kernel(coil, nodes)
    # P^2 / alpha^6 * weight, shared by every integrand below
    base = weights * kern.p_radial**2 / nodes**6
    return nodes, base, kern


def _integrate(coil, quad, evaluate):
    """Adaptive (panel-doubling) or fixed evaluation of one kernel integral.

    ``evaluate(nodes, base, kern)`` returns the weighted integrand sum for
    one grid level; the caller's closure decides the physics factor.
    """
    alpha_max = quad.resolve_alpha_max(coil)
    n = quad.n_panels
    value = evaluate(*_kernel_table(coil, alpha_max, n))
    if quad.rule == "fixed":
        return value
    for _ in range(_MAX_REFINEMENTS):
        n *= 2
        refined = evaluate(*_kernel_table(coil, alpha_max, n))
        if abs(refined - value) <= quad.rel_tolerance * abs(refined):
            return refined
        value = refined
    raise QuadratureConvergenceError(
        f"no convergence to rel_tolerance={quad.rel_tolerance} "
        f"after {_MAX_REFINEMENTS} panel doublings (last n_panels={n})"
    )


def _check_tail(coil, quad, tail_weight, scale, value):
    """Warn when the neglected tail beyond alpha_max is non-negligible."""
    tail = abs(tail_weight) * scale
    if tail > quad.rel_tolerance * abs(value) and abs(value) > 0.0:
        warnings.warn(
            f"tail estimate {tail:.3g} exceeds rel_tolerance of the "
            f"integral {abs(value):.3g}; increase alpha_max",
            TruncationWarning,
            stacklevel=3,
        )


def delta_L(coil: CoilPair, plate: Plate, omega: float, quad: QuadratureSpec) -> complex:
    """Plate-induced change of the transmitter-receiver mutual inductance [H]."""
    if omega <= 0.0:
        raise ValueError("omega must be positive")

    def evaluate(nodes, base, kern):
        phi = generalized_reflection(nodes, omega, plate)
        return kern.prefactor * np.sum(base * kern.axial * phi)

    value = complex(_integrate(coil, quad, evaluate))

    alpha_max = quad.resolve_alpha_max(coil)
    kern_end = coil_kernel(coil, np.array([alpha_max]))
    tail_density = (
        kern_end.prefactor
        * kern_end.p_radial[0] ** 2
        / alpha_max**6
        * kern_end.axial[0]
    )
    _check_tail(coil, quad, tail_density, 1.0 / (coil.tx_bottom + coil.rx_bottom), value)
    return value


def delta_L_air(coil: CoilPair, quad: QuadratureSpec) -> float:
    """Free-space mutual inductance of the coil pair [H]; frequency independent."""

    def evaluate(nodes, base, kern):
        return kern.prefactor * np.sum(base * kern.air)

    value = float(np.real(_integrate(coil, quad, evaluate)))

    alpha_max = quad.resolve_alpha_max(coil)
    kern_end = coil_kernel(coil, np.array([alpha_max]))
    tail_density = (
        kern_end.prefactor * kern_end.p_radial[0] ** 2 / alpha_max**6 * kern_end.air[0]
    )
    _check_tail(coil, quad, tail_density, 1.0 / coil.gap, value)
    return value
