"""
Random phasor-sum speckle synthesis and speckle contrast.

Each pixel's complex amplitude is the normalised sum of N unit-phase
contributions, I_com = (1/sqrt(N)) * sum_j |I_j| exp(i phi_j), with phases
uniform on [0, 2pi) and equal amplitudes (fully developed speckle).
The recorded intensity is |I_com|^2.
"""

import logging
import math
from typing import Optional, Sequence, Union

import numpy as np
from scipy import ndimage, stats

from ..models import ComplexAmplitude, GrayImage, PhasorFieldConfig, Roi

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def phasor_sum(amplitudes: Sequence[float], phases: Sequence[float]) -> ComplexAmplitude:
    """
    Normalised sum of N phasors.

    Args:
        amplitudes: |I_j| for each contribution
        phases: phi_j in radians

    Returns:
        (1/sqrt(N)) * sum |I_j| e^{i phi_j}
    """
    amps = np.asarray(amplitudes, dtype=np.float64)
    phis = np.asarray(phases, dtype=np.float64)
    if amps.ndim != 1 or phis.ndim != 1:
        raise ValueError("amplitudes and phases must be 1-D sequences")
    if amps.size == 0:
        raise ValueError("phasor_sum needs at least one phasor")
    if amps.size != phis.size:
        raise ValueError(
            f"Length mismatch: {amps.size} amplitudes vs {phis.size} phases"
        )
    scale = 1.0 / math.sqrt(amps.size)
    return ComplexAmplitude(re=float(scale * np.sum(amps * np.cos(phis))),
                            im=float(scale * np.sum(amps * np.sin(phis))))


def _smoothed_phase(phases: np.ndarray, radius: int) -> np.ndarray:
    """Circular box smoothing of a phase plane (averages the unit phasors)."""
    size = 2 * radius + 1
    c = ndimage.uniform_filter(np.cos(phases), size=size, mode='wrap')
    s = ndimage.uniform_filter(np.sin(phases), size=size, mode='wrap')
    return np.mod(np.arctan2(s, c), TWO_PI)


def simulate_intensity_field(cfg: PhasorFieldConfig) -> np.ndarray:
    """
    Pre-quantisation intensity field |I_com|^2.

    Phase planes are drawn one contribution at a time from a single seeded
    generator, so the result depends only on the config.

    Returns:
        float64 array of shape (height, width)
    """
    rng = np.random.default_rng(cfg.seed)
    shape = (cfg.height, cfg.width)
    re = np.zeros(shape, dtype=np.float64)
    im = np.zeros(shape, dtype=np.float64)
    for _ in range(cfg.n_phasors):
        phases = rng.uniform(0.0, TWO_PI, size=shape)
        if cfg.correlation_radius > 0:
            phases = _smoothed_phase(phases, cfg.correlation_radius)
        re += np.cos(phases)
        im += np.sin(phases)
    scale = cfg.amplitude / math.sqrt(cfg.n_phasors)
    re *= scale
    im *= scale
    return re * re + im * im


def quantise_field(field: np.ndarray) -> GrayImage:
    """Linear map of a non-negative field onto 0..255 by its maximum."""
    peak = float(np.max(field)) if field.size else 0.0
    if peak <= 0.0:
        return GrayImage.from_array(np.zeros(field.shape, dtype=np.uint8))
    scaled = np.rint(np.clip(field / peak, 0.0, 1.0) * 255.0)
    return GrayImage.from_array(scaled.astype(np.uint8))


def simulate_speckle(cfg: PhasorFieldConfig) -> GrayImage:
    """
    Simulate an 8-bit speckle image.

    Args:
        cfg: Field configuration

    Returns:
        GrayImage, deterministic in cfg
    """
    logger.debug("simulating %dx%d speckle, N=%d, seed=%d, radius=%d",
                 cfg.width, cfg.height, cfg.n_phasors, cfg.seed, cfg.correlation_radius)
    return quantise_field(simulate_intensity_field(cfg))


def _region_values(image: Union[GrayImage, np.ndarray], roi: Optional[Roi]) -> np.ndarray:
    arr = image.pixels if isinstance(image, GrayImage) else np.asarray(image)
    if roi is not None:
        if roi.x + roi.w > arr.shape[1] or roi.y + roi.h > arr.shape[0]:
            raise ValueError(f"Roi {roi.to_spec()} exceeds region {arr.shape[1]}x{arr.shape[0]}")
        arr = arr[roi.y:roi.y + roi.h, roi.x:roi.x + roi.w]
    return np.asarray(arr, dtype=np.float64).ravel()


def speckle_contrast(image: Union[GrayImage, np.ndarray], roi: Optional[Roi] = None) -> float:
    """
    Speckle contrast C = sigma / <I> over a region.

    Uses the population standard deviation. Returns 0 when the mean is 0.
    The raw ratio is reported unclamped; noisy speckle can exceed 1.
    """
    values = _region_values(image, roi)
    if values.size == 0:
        raise ValueError("speckle_contrast needs a non-empty region")
    if values.size < 2:
        raise ValueError("speckle_contrast needs at least 2 pixels")
    mean = float(np.mean(values))
    if mean == 0.0:
        return 0.0
    return float(np.std(values)) / mean


def speckle_contrast_map(image: Union[GrayImage, np.ndarray], window: int = 7) -> np.ndarray:
    """
    Local contrast sigma/mean over a sliding window x window neighbourhood.

    Returns:
        float array, same shape as the input; 0 where the local mean is 0
    """
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    arr = image.to_array() if isinstance(image, GrayImage) else np.asarray(image, dtype=np.float64)
    mean = ndimage.uniform_filter(arr, size=window, mode='reflect')
    mean_sq = ndimage.uniform_filter(arr * arr, size=window, mode='reflect')
    std = np.sqrt(np.clip(mean_sq - mean * mean, 0.0, None))
    out = np.zeros_like(mean)
    np.divide(std, mean, out=out, where=mean > 0)
    return out


def exponential_ks_statistic(field: np.ndarray) -> float:
    """
    Kolmogorov-Smirnov distance between a mean-normalised intensity field
    and the unit negative-exponential distribution.
    """
    values = np.asarray(field, dtype=np.float64).ravel()
    mean = float(np.mean(values))
    if mean <= 0.0:
        raise ValueError("Intensity field must have a positive mean")
    return float(stats.kstest(values / mean, 'expon').statistic)
