"""
Feature vector, class label and dataset models.

A feature vector holds one value per (measure, kernel, area) triple; a
dataset pairs a list of vectors sharing one schema with their labels.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..errors import DatasetError, SchemaMismatchError

NORMAL = 'normal'
MICRO_COLLAPSE = 'micro-collapse'
DRY_LAYER_A = 'dry-layer-A'
DRY_LAYER_B = 'dry-layer-B'


class ClassLabel:
    """
    Product state label. Open set, compared case-insensitively.
    """
    __slots__ = ('name',)

    def __init__(self, name: str):
        text = str(name).strip()
        if not text:
            raise ValueError("Class label must be non-empty")
        object.__setattr__(self, 'name', text)

    def __setattr__(self, key, value):
        raise AttributeError("ClassLabel is immutable")

    @classmethod
    def of(cls, value: Union['ClassLabel', str]) -> 'ClassLabel':
        return value if isinstance(value, ClassLabel) else cls(value)

    def __eq__(self, other) -> bool:
        if isinstance(other, ClassLabel):
            return self.name.casefold() == other.name.casefold()
        if isinstance(other, str):
            return self.name.casefold() == other.strip().casefold()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.name.casefold())

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"ClassLabel({self.name!r})"


LabelLike = Union[ClassLabel, str]


def attribute_name(measure: str, kernel: int, area: str) -> str:
    """Schema name '<Measure>_<k>x<k>_<Area>'."""
    return f"{measure}_{kernel}x{kernel}_{area}"


@dataclass(frozen=True)
class FeatureVector:
    """
    Ordered texture measurements.

    Attributes:
        values: One float per attribute
        attribute_names: Schema labels, same length as values
    """
    values: Tuple[float, ...]
    attribute_names: Tuple[str, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        names = tuple(self.attribute_names)
        if len(values) != len(names):
            raise ValueError(
                f"FeatureVector has {len(values)} values but {len(names)} attribute names"
            )
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'attribute_names', names)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, name: str) -> float:
        return self.values[self.attribute_names.index(name)]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)

    def require_schema(self, names: Sequence[str], context: str = "") -> None:
        if tuple(names) != self.attribute_names:
            raise SchemaMismatchError(names, self.attribute_names, context)

    def to_dict(self) -> Dict[str, float]:
        return OrderedDict(zip(self.attribute_names, self.values))


@dataclass(frozen=True)
class Dataset:
    """
    Labelled feature vectors sharing one schema.

    Attributes:
        rows: Feature vectors
        labels: One ClassLabel per row
        attribute_names: Shared schema
    """
    rows: Tuple[FeatureVector, ...]
    labels: Tuple[ClassLabel, ...]
    attribute_names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(self.rows)
        labels = tuple(ClassLabel.of(label) for label in self.labels)
        if len(rows) != len(labels):
            raise DatasetError(f"Dataset has {len(rows)} rows but {len(labels)} labels")
        names = tuple(self.attribute_names) or (rows[0].attribute_names if rows else ())
        for i, row in enumerate(rows):
            row.require_schema(names, context=f"dataset row {i}")
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'attribute_names', names)

    @classmethod
    def from_matrix(cls, matrix, labels: Iterable[LabelLike],
                    attribute_names: Sequence[str]) -> 'Dataset':
        """Build a dataset from a 2-D array of row values."""
        names = tuple(attribute_names)
        arr = np.asarray(matrix, dtype=np.float64)
        if arr.ndim != 2 or (arr.size and arr.shape[1] != len(names)):
            raise DatasetError(
                f"Matrix shape {arr.shape} does not match {len(names)} attribute names"
            )
        rows = tuple(FeatureVector(tuple(r), names) for r in arr)
        return cls(rows=rows, labels=tuple(labels), attribute_names=names)

    def __len__(self) -> int:
        return len(self.rows)

    def matrix(self) -> np.ndarray:
        """Rows as an (n, attributes) float array."""
        if not self.rows:
            return np.empty((0, len(self.attribute_names)))
        return np.vstack([row.as_array() for row in self.rows])

    def column(self, name: str) -> np.ndarray:
        if name not in self.attribute_names:
            raise DatasetError(f"Unknown attribute '{name}'")
        return self.matrix()[:, self.attribute_names.index(name)]

    def class_labels(self) -> List[ClassLabel]:
        """Distinct labels in order of first appearance."""
        seen: List[ClassLabel] = []
        for label in self.labels:
            if label not in seen:
                seen.append(label)
        return seen

    def class_counts(self) -> Dict[ClassLabel, int]:
        counts: Dict[ClassLabel, int] = OrderedDict()
        for label in self.labels:
            counts[label] = counts.get(label, 0) + 1
        return counts

    def indices_of(self, label: LabelLike) -> List[int]:
        target = ClassLabel.of(label)
        return [i for i, lab in enumerate(self.labels) if lab == target]

    def subset(self, indices: Iterable[int]) -> 'Dataset':
        idx = list(indices)
        return Dataset(rows=tuple(self.rows[i] for i in idx),
                       labels=tuple(self.labels[i] for i in idx),
                       attribute_names=self.attribute_names)

    def select_attributes(self, names: Sequence[str]) -> 'Dataset':
        """Project every row onto the given attribute subset."""
        missing = [n for n in names if n not in self.attribute_names]
        if missing:
            raise DatasetError(f"Unknown attributes: {', '.join(missing)}")
        cols = [self.attribute_names.index(n) for n in names]
        return Dataset.from_matrix(self.matrix()[:, cols], self.labels, names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (self.attribute_names == other.attribute_names
                and self.labels == other.labels
                and all(a.values == b.values for a, b in zip(self.rows, other.rows))
                and len(self.rows) == len(other.rows))

    __hash__ = None
