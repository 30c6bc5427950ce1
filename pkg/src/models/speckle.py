"""
Random phasor speckle models
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhasorFieldConfig:
    """
    Parameters of a simulated speckle field.

    Attributes:
        width: Field width in pixels
        height: Field height in pixels
        n_phasors: Number N of contributing surface elements per pixel
        amplitude: Common phasor amplitude |I_j|
        seed: Generator seed
        correlation_radius: Box smoothing radius of the phase field in pixels
            (0 = independent pixels). Grain-structure extension for fixtures,
            not part of the random phasor model itself.
    """
    width: int = 256
    height: int = 256
    n_phasors: int = 100
    amplitude: float = 1.0
    seed: int = 0
    correlation_radius: int = 0

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"Field size must be >= 1, got {self.width}x{self.height}")
        if self.n_phasors < 1:
            raise ValueError(f"n_phasors must be >= 1, got {self.n_phasors}")
        if self.amplitude < 0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if self.correlation_radius < 0:
            raise ValueError(f"correlation_radius must be >= 0, got {self.correlation_radius}")


@dataclass(frozen=True)
class ComplexAmplitude:
    """Complex field amplitude at one pixel."""
    re: float
    im: float

    @property
    def intensity(self) -> float:
        return self.re * self.re + self.im * self.im

    @property
    def magnitude(self) -> float:
        return math.hypot(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)
