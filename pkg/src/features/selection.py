"""
Two-class attribute separation ranking
"""

from typing import List, Optional, Tuple

import numpy as np

from ..errors import DatasetError
from ..models import MICRO_COLLAPSE, NORMAL, Dataset
from ..models.features import ClassLabel, LabelLike


def class_means(ds: Dataset, name: str, label: LabelLike) -> float:
    idx = ds.indices_of(label)
    if not idx:
        raise DatasetError(f"Class '{label}' has no rows")
    return float(np.mean(ds.column(name)[idx]))


def fisher_scores(ds: Dataset, first: LabelLike = NORMAL,
                  second: LabelLike = MICRO_COLLAPSE) -> List[Tuple[str, float]]:
    """
    |mu1 - mu2| / sqrt(var1 + var2) per attribute, best first.

    Attributes with zero pooled variance score inf when the means differ
    and 0 otherwise.
    """
    a = ds.indices_of(first)
    b = ds.indices_of(second)
    if not a or not b:
        raise DatasetError(f"Both classes '{first}' and '{second}' need rows")
    matrix = ds.matrix()
    scores = []
    for col, name in enumerate(ds.attribute_names):
        xa, xb = matrix[a, col], matrix[b, col]
        gap = abs(float(xa.mean() - xb.mean()))
        spread = float(np.sqrt(xa.var() + xb.var()))
        if spread > 0:
            score = gap / spread
        else:
            score = float('inf') if gap > 0 else 0.0
        scores.append((name, score))
    return sorted(scores, key=lambda item: item[1], reverse=True)


def most_discriminant_attribute(ds: Dataset, first: LabelLike = NORMAL,
                                second: LabelLike = MICRO_COLLAPSE,
                                measure: Optional[str] = None) -> str:
    """
    Attribute with the largest two-class separation.

    Args:
        measure: Restrict the search to attributes of one measure (e.g. 'Levine')
    """
    ranked = fisher_scores(ds, ClassLabel.of(first), ClassLabel.of(second))
    if measure:
        ranked = [item for item in ranked if item[0].split('_')[0] == measure]
        if not ranked:
            raise DatasetError(f"No attribute of measure '{measure}' in dataset")
    return ranked[0][0]
