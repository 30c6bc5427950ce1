"""
k-nearest-neighbour classifier with optional column standardization.

Euclidean distance; neighbours ordered by (distance, training row order);
plurality vote, with vote ties going to the tied class whose best-ranked
neighbour is nearest.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..errors import TrainingError
from ..features.standardization import StandardizationParams, fit_standardization
from ..models import ClassLabel, Dataset, FeatureVector
from .classifier import Classifier, Prediction

logger = logging.getLogger(__name__)

DEFAULT_K = 1


@dataclass(frozen=True, eq=False)
class KnnModel(Classifier):
    """
    Attributes:
        names: Training schema
        rows: Stored (standardized when params is set) training rows
        row_labels: Label of each stored row
        k: Neighbour count
        params: Standardization fitted on the training rows, or None
    """
    names: Tuple[str, ...]
    rows: np.ndarray
    row_labels: Tuple[ClassLabel, ...]
    k: int = DEFAULT_K
    params: Optional[StandardizationParams] = None

    kind = 'knn'

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.float64, copy=True)
        rows.setflags(write=False)
        object.__setattr__(self, 'rows', rows)
        if rows.ndim != 2 or rows.shape[0] == 0:
            raise TrainingError("k-NN model needs at least one training row")
        if rows.shape[1] != len(self.names):
            raise TrainingError("Stored rows do not match the schema width")
        if not 1 <= self.k <= rows.shape[0]:
            raise TrainingError(f"k must lie in [1, {rows.shape[0]}], got {self.k}")

    @property
    def attribute_names(self) -> Tuple[str, ...]:
        return self.names

    @property
    def classes(self) -> Tuple[ClassLabel, ...]:
        seen: List[ClassLabel] = []
        for label in self.row_labels:
            if label not in seen:
                seen.append(label)
        return tuple(seen)

    @property
    def standardized(self) -> bool:
        return self.params is not None

    def prepare(self, v: FeatureVector) -> np.ndarray:
        """Query in the stored feature space."""
        self.check_schema(v)
        x = v.as_array()
        if self.params is not None:
            x = self.params.transform(x[None, :])[0]
        return x

    def neighbours(self, v: FeatureVector) -> Tuple[np.ndarray, np.ndarray]:
        """(indices, distances) of the k nearest stored rows, nearest first."""
        x = self.prepare(v)
        distances = np.sqrt(np.sum((self.rows - x) ** 2, axis=1))
        order = np.argsort(distances, kind='stable')[:self.k]
        return order, distances[order]

    def predict(self, v: FeatureVector) -> Prediction:
        order, _ = self.neighbours(v)
        votes: Dict[ClassLabel, int] = {}
        first_rank: Dict[ClassLabel, int] = {}
        for rank, idx in enumerate(order):
            label = self.row_labels[idx]
            votes[label] = votes.get(label, 0) + 1
            first_rank.setdefault(label, rank)
        top = max(votes.values())
        winner = min((label for label, n in votes.items() if n == top), key=first_rank.get)
        scores = {label: votes.get(label, 0) / self.k for label in self.classes}
        return Prediction(label=winner, confidence=top / self.k, scores=scores)

    def to_dict(self) -> Dict:
        return {
            'attribute_names': list(self.names),
            'rows': self.rows.tolist(),
            'labels': [str(label) for label in self.row_labels],
            'k': self.k,
            'standardization': self.params.to_dict() if self.params else None,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'KnnModel':
        params = data.get('standardization')
        return cls(names=tuple(data['attribute_names']),
                   rows=np.asarray(data['rows'], dtype=np.float64),
                   row_labels=tuple(ClassLabel(label) for label in data['labels']),
                   k=int(data['k']),
                   params=StandardizationParams.from_dict(params) if params else None)


def knn_train(ds: Dataset, k: int = DEFAULT_K, standardized: bool = True) -> KnnModel:
    """
    Store the training rows, standardized by their own column statistics.

    Raises:
        TrainingError: empty dataset or k outside [1, rows]
    """
    if len(ds) == 0:
        raise TrainingError("Cannot train on an empty dataset")
    if not 1 <= k <= len(ds):
        raise TrainingError(f"k must lie in [1, {len(ds)}], got {k}")
    matrix = ds.matrix()
    params = None
    if standardized:
        if len(ds) < 2:
            raise TrainingError("Standardized k-NN needs at least 2 rows")
        params = fit_standardization(ds)
        matrix = params.transform(matrix)
    logger.debug("k-NN stored %d rows (k=%d, standardized=%s)", len(ds), k, standardized)
    return KnnModel(names=ds.attribute_names, rows=matrix, row_labels=ds.labels,
                    k=k, params=params)


def knn_predict(model: KnnModel, v: FeatureVector) -> ClassLabel:
    return model.predict(v).label
