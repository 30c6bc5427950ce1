"""
Confusion-matrix evaluation, stratified holdout and leave-one-out.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DatasetError
from ..models import MICRO_COLLAPSE, ClassLabel, Dataset
from ..models.features import LabelLike
from .classifier import Classifier

logger = logging.getLogger(__name__)

Trainer = Callable[[Dataset], Classifier]


@dataclass(frozen=True)
class EvalReport:
    """
    Attributes:
        labels: Row/column order of the matrix
        matrix: Confusion counts, rows = true label, columns = predicted label
        positive: Positive class for sensitivity/specificity
        accuracy: correct / total
        sensitivity: TP / (TP + FN), NaN when the positive class is absent from truth
        specificity: TN / (TN + FP), NaN when truth holds only the positive class
        recall: Per-class recall (NaN for classes absent from truth)
    """
    labels: Tuple[ClassLabel, ...]
    matrix: np.ndarray
    positive: ClassLabel
    accuracy: float
    sensitivity: float
    specificity: float
    recall: Dict[ClassLabel, float]

    @property
    def total(self) -> int:
        return int(self.matrix.sum())

    def confusion(self, true: LabelLike, predicted: LabelLike) -> int:
        i = self.labels.index(ClassLabel.of(true))
        j = self.labels.index(ClassLabel.of(predicted))
        return int(self.matrix[i, j])

    def to_dict(self) -> Dict:
        """JSON-ready summary; undefined metrics become None."""
        return {
            'labels': [str(label) for label in self.labels],
            'matrix': self.matrix.tolist(),
            'positive': str(self.positive),
            'accuracy': _defined(self.accuracy),
            'sensitivity': _defined(self.sensitivity),
            'specificity': _defined(self.specificity),
            'recall': {str(label): _defined(value) for label, value in self.recall.items()},
        }

    def render(self) -> str:
        """Confusion table followed by percentage metrics."""
        names = [str(label) for label in self.labels]
        width = max(max(len(n) for n in names), 6)
        lines = ["true \\ predicted".ljust(width + 2)
                 + " ".join(n.rjust(width) for n in names)]
        for name, row in zip(names, self.matrix):
            lines.append(name.ljust(width + 2) + " ".join(str(int(c)).rjust(width) for c in row))
        lines.append("")
        lines.append(f"Classification accuracy: {_percent(self.accuracy)}")
        lines.append(f"Sensitivity ({self.positive}): {_percent(self.sensitivity)}")
        lines.append(f"Specificity ({self.positive}): {_percent(self.specificity)}")
        return "\n".join(lines)


def _defined(value: float) -> Optional[float]:
    return None if math.isnan(value) else float(value)


def _percent(value: float) -> str:
    return "n/a" if math.isnan(value) else f"{value * 100:.0f}%"


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else float('nan')


def evaluate(predictions: Sequence[LabelLike], truth: Sequence[LabelLike],
             positive: LabelLike = MICRO_COLLAPSE) -> EvalReport:
    """
    Confusion matrix and metrics for one labelled prediction run.

    Args:
        predictions: Predicted label per case
        truth: True label per case
        positive: Positive class (default "micro-collapse")

    Returns:
        EvalReport

    Raises:
        DatasetError: empty input or length mismatch
    """
    if len(predictions) != len(truth):
        raise DatasetError(
            f"{len(predictions)} predictions but {len(truth)} true labels"
        )
    if not truth:
        raise DatasetError("Cannot evaluate an empty prediction set")

    pred = [ClassLabel.of(p) for p in predictions]
    true = [ClassLabel.of(t) for t in truth]
    pos = ClassLabel.of(positive)

    labels: List[ClassLabel] = []
    for label in true + pred:
        if label not in labels:
            labels.append(label)
    index = {label: i for i, label in enumerate(labels)}

    matrix = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for t, p in zip(true, pred):
        matrix[index[t], index[p]] += 1

    total = matrix.sum()
    accuracy = float(np.trace(matrix)) / total

    if pos in index:
        k = index[pos]
        tp = matrix[k, k]
        fn = matrix[k, :].sum() - tp
        fp = matrix[:, k].sum() - tp
        tn = total - tp - fn - fp
        sensitivity = _ratio(tp, tp + fn)
        specificity = _ratio(tn, tn + fp)
    else:
        sensitivity = float('nan')
        specificity = 1.0 if total else float('nan')

    recall = {label: _ratio(matrix[i, i], matrix[i, :].sum()) for label, i in index.items()}
    return EvalReport(labels=tuple(labels), matrix=matrix, positive=pos,
                      accuracy=float(accuracy), sensitivity=float(sensitivity),
                      specificity=float(specificity), recall=recall)


def split_holdout(ds: Dataset, fraction: float = 0.5, seed: int = 0) -> Tuple[Dataset, Dataset]:
    """
    Seeded stratified split into (train, test).

    Each class contributes round(fraction * n_c) rows to training, clamped so
    both sides keep at least one row of every class. Rows keep their original
    relative order within each side.

    Raises:
        ValueError: fraction outside (0, 1)
        DatasetError: a class with fewer than 2 rows
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"Holdout fraction must lie in (0, 1), got {fraction}")
    rng = np.random.default_rng(seed)
    train_idx: List[int] = []
    test_idx: List[int] = []
    for label in ds.class_labels():
        members = ds.indices_of(label)
        if len(members) < 2:
            raise DatasetError(f"Class '{label}' has {len(members)} row(s); holdout needs 2")
        shuffled = rng.permutation(members)
        n_train = min(max(int(round(fraction * len(members))), 1), len(members) - 1)
        train_idx.extend(int(i) for i in shuffled[:n_train])
        test_idx.extend(int(i) for i in shuffled[n_train:])
    return ds.subset(sorted(train_idx)), ds.subset(sorted(test_idx))


def predict_dataset(model: Classifier, ds: Dataset) -> List[ClassLabel]:
    return [model.predict(row).label for row in ds.rows]


def leave_one_out(ds: Dataset, trainer: Trainer) -> List[ClassLabel]:
    """
    Predict every row with a model trained on all other rows.

    Args:
        ds: Labelled data
        trainer: Dataset -> trained Classifier

    Returns:
        One predicted label per row, in row order
    """
    if len(ds) < 2:
        raise DatasetError("Leave-one-out needs at least 2 rows")
    predictions = []
    for i in range(len(ds)):
        rest = ds.subset(j for j in range(len(ds)) if j != i)
        model = trainer(rest)
        predictions.append(model.predict(ds.rows[i]).label)
    logger.debug("leave-one-out over %d rows done", len(ds))
    return predictions
