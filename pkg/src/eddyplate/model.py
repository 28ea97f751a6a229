"""Domain types and sensor/sample descriptions shared by all solvers.

Everything is SI: metres, hertz, siemens/metre, henries, amperes. Unit
conversion (mm, MS/m, ...) belongs to the scenario parser, never here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MU_0 = 4e-7 * np.pi  # vacuum permeability [H/m], exact by definition here


@dataclass(frozen=True)
class CoilPair:
    """Axisymmetric transmitter/receiver coil pair.

    The transmitter is the bottom coil; ``liftoff`` is the distance from its
    lower face to the top surface of the plate. The receiver sits above it,
    separated by ``gap``.
    """

    inner_radius: float  # [m]
    outer_radius: float  # [m]
    coil_height: float   # [m], each coil
    gap: float           # [m], axial gap between the two coils
    liftoff: float       # [m], bottom coil face to plate top surface
    turns_tx: int
    turns_rx: int
    drive_current: float  # [A]

    def __post_init__(self):
        if not 0.0 < self.inner_radius < self.outer_radius:
            raise ValueError("need 0 < inner_radius < outer_radius")
        if self.coil_height <= 0.0:
            raise ValueError("coil_height must be positive")
        if self.gap < 0.0:
            raise ValueError("gap must be non-negative")
        if self.liftoff <= 0.0:
            raise ValueError("liftoff must be positive")
        if self.turns_tx < 1 or self.turns_rx < 1:
            raise ValueError("both coils need at least one turn")
        if self.drive_current <= 0.0:
            raise ValueError("drive_current must be positive")

    @property
    def tx_bottom(self) -> float:
        return self.liftoff

    @property
    def tx_top(self) -> float:
        return self.liftoff + self.coil_height

    @property
    def rx_bottom(self) -> float:
        # Receiver lift-off is taken as liftoff + coil_height + gap.
        return self.tx_top + self.gap

    @property
    def rx_top(self) -> float:
        return self.rx_bottom + self.coil_height


@dataclass(frozen=True)
class Plate:
    """A single laterally-infinite conductive layer."""

    conductivity: float            # [S/m]
    thickness: float               # [m]
    relative_permeability: float = 1.0

    def __post_init__(self):
        if self.conductivity < 0.0:
            raise ValueError("conductivity must be non-negative")
        if self.thickness <= 0.0:
            raise ValueError("thickness must be positive")
        if self.relative_permeability < 1.0:
            raise ValueError("relative_permeability must be >= 1")

    @property
    def sigma_thickness_product(self) -> float:
        """sigma * D [S], the quantity conserved by the equivalence law."""
        return self.conductivity * self.thickness


@dataclass(frozen=True)
class SweepSpec:
    """Frequency grid definition."""

    f_min: float       # [Hz]
    f_max: float       # [Hz]
    n_points: int
    spacing: str = "logarithmic"  # "logarithmic" | "linear"

    def __post_init__(self):
        if not 0.0 < self.f_min <= self.f_max:
            raise ValueError("need 0 < f_min <= f_max")
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.n_points == 1 and self.f_min != self.f_max:
            raise ValueError("n_points = 1 requires f_min == f_max")
        if self.spacing not in ("logarithmic", "linear"):
            raise ValueError(f"unknown spacing {self.spacing!r}")


@dataclass
class InductanceSpectrum:
    """Per-frequency complex delta-L values plus provenance metadata.

    ``normalized`` is True for dimensionless delta-L / L_air values
    (single-alpha0 models) and False for absolute henries (full integral
    solver).
    """

    frequencies: np.ndarray        # [Hz], strictly increasing
    delta_L: np.ndarray            # complex, same length
    normalized: bool
    model_tag: str                 # "thin_plate" | "dodd_deeds"
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.frequencies = np.asarray(self.frequencies, dtype=float)
        self.delta_L = np.asarray(self.delta_L, dtype=complex)
        if self.frequencies.shape != self.delta_L.shape:
            raise ValueError("frequencies and delta_L must have equal length")
        if self.frequencies.size > 1 and not np.all(np.diff(self.frequencies) > 0):
            raise ValueError("frequencies must be strictly increasing")


def default_sensor() -> CoilPair:
    """The reference air-cored T-R sensor used throughout the test cases.

    Inner/outer diameters 12 / 12.63 mm are stored as radii; 8 mm coil
    height, 2 mm gap, 1 mm lift-off, 25/25 turns, 10 mA drive.
    """
    return CoilPair(
        inner_radius=6.0e-3,
        outer_radius=6.315e-3,
        coil_height=8.0e-3,
        gap=2.0e-3,
        liftoff=1.0e-3,
        turns_tx=25,
        turns_rx=25,
        drive_current=10.0e-3,
    )


def derive_alpha0(coil: CoilPair) -> float:
    """Representative spatial frequency: 1 over the smallest coil dimension.

    The smallest dimension is taken as min(inner_radius, coil_height); the
    radial winding thickness is deliberately excluded (it would put the
    single-alpha0 model outside its thin-plate validity regime).
    """
    return 1.0 / min(coil.inner_radius, coil.coil_height)


def frequency_grid(spec: SweepSpec) -> np.ndarray:
    """Strictly increasing, endpoint-inclusive frequency grid [Hz]."""
    if spec.n_points == 1:
        return np.array([spec.f_min])
    if spec.spacing == "logarithmic":
        return np.geomspace(spec.f_min, spec.f_max, spec.n_points)
    return np.linspace(spec.f_min, spec.f_max, spec.n_points)
