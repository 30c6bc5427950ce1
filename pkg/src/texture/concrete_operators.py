"""
The five laser speckle texture measures.

Neighbourhood statistics are population statistics over all k*k pixels
(divide by k*k, not k*k - 1).
"""

import numpy as np

from .operators import TextureOperator, WindowLike

# relative floor under which a neighbourhood counts as flat
FLAT_TOLERANCE = 1e-12


def _centre(blocks: np.ndarray) -> np.ndarray:
    k = blocks.shape[-1]
    return blocks[..., k // 2, k // 2]


def _deviations(blocks: np.ndarray) -> np.ndarray:
    mean = blocks.mean(axis=(-2, -1), keepdims=True)
    return blocks - mean


class RussOperator(TextureOperator):
    """sqrt(sum over neighbours of (centre - neighbour)^2)."""
    name = 'Russ'

    def response(self, blocks: np.ndarray) -> np.ndarray:
        diff = _centre(blocks)[..., None, None] - blocks
        # the centre's own term is zero, so summing the full block is exact
        return np.sqrt(np.sum(diff * diff, axis=(-2, -1)))


class LevineOperator(TextureOperator):
    """Neighbourhood population variance, (1/area) * sum (pixel - mean)^2."""
    name = 'Levine'

    def response(self, blocks: np.ndarray) -> np.ndarray:
        dev = _deviations(blocks)
        return np.mean(dev * dev, axis=(-2, -1))


class SigmaOperator(TextureOperator):
    """Square root of the per-centre Levine variance."""
    name = 'Sigma'

    def __init__(self):
        self._levine = LevineOperator()

    def response(self, blocks: np.ndarray) -> np.ndarray:
        return np.sqrt(self._levine.response(blocks))


class SkewnessOperator(TextureOperator):
    """Standardised third central moment; flat neighbourhoods respond 0."""
    name = 'Skewness'

    def response(self, blocks: np.ndarray) -> np.ndarray:
        dev = _deviations(blocks)
        m2 = np.mean(dev * dev, axis=(-2, -1))
        m3 = np.mean(dev * dev * dev, axis=(-2, -1))
        sigma = np.sqrt(m2)
        scale = np.maximum(1.0, np.abs(blocks.mean(axis=(-2, -1))))
        flat = sigma <= FLAT_TOLERANCE * scale
        out = np.zeros_like(m3)
        np.divide(m3, sigma ** 3, out=out, where=~flat)
        return out


class StdDevOperator(TextureOperator):
    """Population standard deviation, sqrt(sum (x - x')^2 / n)."""
    name = 'StdDev'

    def response(self, blocks: np.ndarray) -> np.ndarray:
        return np.std(blocks, axis=(-2, -1))


RUSS = RussOperator()
LEVINE = LevineOperator()
SIGMA = SigmaOperator()
SKEWNESS = SkewnessOperator()
STD_DEV = StdDevOperator()

OPERATORS = {op.name: op for op in (RUSS, LEVINE, SIGMA, SKEWNESS, STD_DEV)}


def russ(window: WindowLike, k: int) -> float:
    return RUSS(window, k)


def levine(window: WindowLike, k: int) -> float:
    return LEVINE(window, k)


def sigma(window: WindowLike, k: int) -> float:
    return SIGMA(window, k)


def skewness(window: WindowLike, k: int) -> float:
    return SKEWNESS(window, k)


def std_dev(window: WindowLike, k: int) -> float:
    return STD_DEV(window, k)
