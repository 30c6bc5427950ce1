"""
Column standardization (z-scores with population standard deviation)
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ..errors import DatasetError, SchemaMismatchError
from ..models import Dataset, FeatureVector


@dataclass(frozen=True)
class StandardizationParams:
    """
    Per-column centring and scaling.

    Attributes:
        attribute_names: Schema the parameters were fitted on
        means: Column means
        stds: Column population standard deviations (>= 0)
    """
    attribute_names: Tuple[str, ...]
    means: Tuple[float, ...]
    stds: Tuple[float, ...]

    def __post_init__(self):
        if not (len(self.attribute_names) == len(self.means) == len(self.stds)):
            raise ValueError("StandardizationParams fields must have equal length")
        if any(s < 0 for s in self.stds):
            raise ValueError("Standard deviations must be >= 0")

    def transform(self, matrix: np.ndarray) -> np.ndarray:
        """Standardize an (n, attributes) array; zero-std columns map to 0."""
        means = np.asarray(self.means)
        stds = np.asarray(self.stds)
        centred = np.asarray(matrix, dtype=np.float64) - means
        out = np.zeros_like(centred)
        np.divide(centred, stds, out=out, where=stds > 0)
        return out

    def to_dict(self) -> Dict:
        return {'attribute_names': list(self.attribute_names),
                'means': list(self.means),
                'stds': list(self.stds)}

    @classmethod
    def from_dict(cls, data: Dict) -> 'StandardizationParams':
        return cls(attribute_names=tuple(data['attribute_names']),
                   means=tuple(float(v) for v in data['means']),
                   stds=tuple(float(v) for v in data['stds']))


def fit_standardization(ds: Dataset) -> StandardizationParams:
    """
    Column means and population standard deviations of a training set.

    Raises:
        DatasetError: fewer than 2 rows
    """
    if len(ds) < 2:
        raise DatasetError(f"Standardization needs at least 2 rows, got {len(ds)}")
    matrix = ds.matrix()
    return StandardizationParams(attribute_names=ds.attribute_names,
                                 means=tuple(float(v) for v in matrix.mean(axis=0)),
                                 stds=tuple(float(v) for v in matrix.std(axis=0)))


def apply_standardization(v: FeatureVector, params: StandardizationParams) -> FeatureVector:
    """(value - mean) / std per column; zero-std columns become 0."""
    v.require_schema(params.attribute_names, context="standardization")
    values = params.transform(v.as_array()[None, :])[0]
    return FeatureVector(tuple(values), v.attribute_names)


def standardize_dataset(ds: Dataset, params: StandardizationParams) -> Dataset:
    if ds.attribute_names != params.attribute_names:
        raise SchemaMismatchError(params.attribute_names, ds.attribute_names, "standardization")
    return Dataset.from_matrix(params.transform(ds.matrix()), ds.labels, ds.attribute_names)
