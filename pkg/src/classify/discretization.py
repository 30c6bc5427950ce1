"""
Attribute discretization (equal frequency, and equal width for comparison).

Bin index of a value = number of cut-points <= value, so a value sitting
exactly on a cut-point goes to the upper bin.
"""

import bisect
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..errors import DatasetError
from ..models import Dataset, FeatureVector

EQUAL_FREQUENCY = 'equal-frequency'
EQUAL_WIDTH = 'equal-width'


@dataclass(frozen=True)
class DiscretizationModel:
    """
    Attributes:
        attribute_names: Schema
        cut_points: Strictly increasing cut-points per attribute
        bin_count: Requested bin count b (attributes may end up with fewer bins)
        method: EQUAL_FREQUENCY or EQUAL_WIDTH
    """
    attribute_names: Tuple[str, ...]
    cut_points: Tuple[Tuple[float, ...], ...]
    bin_count: int
    method: str = EQUAL_FREQUENCY

    def __post_init__(self):
        if len(self.cut_points) != len(self.attribute_names):
            raise ValueError("One cut-point list per attribute is required")
        for name, cuts in zip(self.attribute_names, self.cut_points):
            if any(b <= a for a, b in zip(cuts, cuts[1:])):
                raise ValueError(f"Cut-points of '{name}' are not strictly increasing")
            if len(cuts) > self.bin_count - 1:
                raise ValueError(f"'{name}' has more than {self.bin_count - 1} cut-points")

    def bins_of(self, column: int) -> int:
        """Number of bins actually used by one attribute."""
        return len(self.cut_points[column]) + 1

    def to_dict(self) -> Dict:
        return {'attribute_names': list(self.attribute_names),
                'cut_points': [list(c) for c in self.cut_points],
                'bin_count': self.bin_count,
                'method': self.method}

    @classmethod
    def from_dict(cls, data: Dict) -> 'DiscretizationModel':
        return cls(attribute_names=tuple(data['attribute_names']),
                   cut_points=tuple(tuple(float(v) for v in c) for c in data['cut_points']),
                   bin_count=int(data['bin_count']),
                   method=data.get('method', EQUAL_FREQUENCY))


def _check_fit_args(ds: Dataset, b: int) -> None:
    if b < 2:
        raise ValueError(f"Bin count must be >= 2, got {b}")
    if len(ds) == 0:
        raise DatasetError("Cannot discretize an empty dataset")


def equal_frequency_cuts(values: Sequence[float], b: int) -> Tuple[float, ...]:
    """
    Cut-points placing ~n/b sorted values in each bin.

    Boundary j sits after rank floor(n*j/b); its cut is the midpoint of the two
    straddling values. Boundaries between equal values produce no cut.
    """
    ordered = np.sort(np.asarray(values, dtype=np.float64))
    n = ordered.size
    cuts: List[float] = []
    for j in range(1, b):
        i = (n * j) // b
        if i < 1 or i >= n:
            continue
        lo, hi = float(ordered[i - 1]), float(ordered[i])
        if lo < hi:
            cuts.append(lo + (hi - lo) / 2.0)
    return tuple(sorted(set(cuts)))


def fit_equal_frequency(ds: Dataset, b: int = 5) -> DiscretizationModel:
    """Per-attribute equal-frequency cut-points."""
    _check_fit_args(ds, b)
    matrix = ds.matrix()
    cuts = tuple(equal_frequency_cuts(matrix[:, c], b) for c in range(matrix.shape[1]))
    return DiscretizationModel(ds.attribute_names, cuts, b, EQUAL_FREQUENCY)


def fit_equal_width(ds: Dataset, b: int = 5) -> DiscretizationModel:
    """Per-attribute cut-points splitting [min, max] into b equal intervals."""
    _check_fit_args(ds, b)
    matrix = ds.matrix()
    all_cuts = []
    for c in range(matrix.shape[1]):
        lo, hi = float(matrix[:, c].min()), float(matrix[:, c].max())
        if lo == hi:
            all_cuts.append(())
            continue
        step = (hi - lo) / b
        all_cuts.append(tuple(sorted(set(lo + j * step for j in range(1, b)))))
    return DiscretizationModel(ds.attribute_names, tuple(all_cuts), b, EQUAL_WIDTH)


def fit_discretization(ds: Dataset, b: int = 5, method: str = EQUAL_FREQUENCY) -> DiscretizationModel:
    if method == EQUAL_FREQUENCY:
        return fit_equal_frequency(ds, b)
    if method == EQUAL_WIDTH:
        return fit_equal_width(ds, b)
    raise ValueError(f"Unknown discretization method: {method}")


def bin_index(value: float, cuts: Sequence[float]) -> int:
    return bisect.bisect_right(cuts, value)


def discretize(v: FeatureVector, model: DiscretizationModel) -> Tuple[int, ...]:
    """Bin index of each attribute value."""
    v.require_schema(model.attribute_names, context="discretization")
    return tuple(bin_index(value, cuts) for value, cuts in zip(v.values, model.cut_points))


def discretize_dataset(ds: Dataset, model: DiscretizationModel) -> np.ndarray:
    """(n, attributes) integer array of bin indices."""
    if not ds.rows:
        return np.empty((0, len(model.attribute_names)), dtype=np.int64)
    return np.array([discretize(row, model) for row in ds.rows], dtype=np.int64)
