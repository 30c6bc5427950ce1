"""
Polynomial trend over a texture-measure time series.

The least-squares fit runs on timestamps mapped onto [-1, 1]
(numpy.polynomial.Polynomial.fit); high degrees over hour-long timestamp
ranges are otherwise badly conditioned.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq

from ..errors import TrendError
from ..features.selection import class_means
from ..models import MICRO_COLLAPSE, NORMAL, Dataset, TrendModel
from ..models.features import LabelLike

logger = logging.getLogger(__name__)

DEFAULT_DEGREE = 6
GRID_POINTS = 2001


def fit_polynomial_trend(series: Sequence[Tuple[float, float]], d: int = DEFAULT_DEGREE,
                         attribute_name: str = "") -> TrendModel:
    """
    Least-squares polynomial of degree d through (timestamp, value) points.

    Args:
        series: (timestamp, value) pairs
        d: Polynomial degree
        attribute_name: Attribute the values were taken from

    Returns:
        TrendModel; exact interpolation when len(series) == d + 1

    Raises:
        TrendError: d < 0, fewer than max(d + 1, 2) points, or duplicate timestamps
    """
    if d < 0:
        raise TrendError(f"Trend degree must be >= 0, got {d}")
    points = list(series)
    needed = max(d + 1, 2)
    if len(points) < needed:
        raise TrendError(f"Degree {d} trend needs at least {needed} points, got {len(points)}")
    t = np.array([p[0] for p in points], dtype=np.float64)
    y = np.array([p[1] for p in points], dtype=np.float64)
    if np.unique(t).size != t.size:
        raise TrendError("Trend series has duplicate timestamps")
    if not (np.all(np.isfinite(t)) and np.all(np.isfinite(y))):
        raise TrendError("Trend series contains non-finite values")

    fitted = Polynomial.fit(t, y, d)
    original = np.zeros(d + 1)
    converted = fitted.convert().coef
    original[:converted.size] = converted
    scaled = np.zeros(d + 1)
    scaled[:fitted.coef.size] = fitted.coef
    residual = float(np.sqrt(np.mean((fitted(t) - y) ** 2)))

    logger.debug("degree %d trend over %d points of %s: residual rms %.4g",
                 d, len(points), attribute_name or "series", residual)
    return TrendModel(coefficients=tuple(float(c) for c in original), degree=d,
                      attribute_name=attribute_name, residual_rms=residual,
                      domain=(float(fitted.domain[0]), float(fitted.domain[1])),
                      scaled_coefficients=tuple(float(c) for c in scaled))


def class_midpoint(ds: Dataset, attribute: str, high: LabelLike = NORMAL,
                   low: LabelLike = MICRO_COLLAPSE) -> float:
    """Midpoint of the two class means of one attribute."""
    return (class_means(ds, attribute, high) + class_means(ds, attribute, low)) / 2.0


def locate_transition_from_trend(trend: Optional[TrendModel], threshold: Optional[float] = None,
                                 dataset: Optional[Dataset] = None, high: LabelLike = NORMAL,
                                 low: LabelLike = MICRO_COLLAPSE) -> Optional[float]:
    """
    Earliest timestamp in the fitted range where the trend falls through the threshold.

    Args:
        trend: Fitted trend
        threshold: Crossing level; defaults to the midpoint of the `high` and
            `low` class means of the trend's attribute in `dataset`
        dataset: Labelled training data for the default threshold

    Returns:
        Crossing timestamp, or None when the trend never crosses from above
    """
    if trend is None:
        raise TrendError("No fitted trend to locate a transition on")
    if threshold is None:
        if dataset is None:
            raise TrendError("A threshold or a labelled dataset is required")
        threshold = class_midpoint(dataset, trend.attribute_name, high, low)

    start, end = trend.domain
    grid = np.linspace(start, end, GRID_POINTS)
    excess = trend(grid) - threshold
    for i in range(grid.size - 1):
        if excess[i] > 0 >= excess[i + 1]:
            if excess[i + 1] == 0:
                return float(grid[i + 1])
            return float(brentq(lambda x: float(trend(x)) - threshold, grid[i], grid[i + 1]))
    return None
