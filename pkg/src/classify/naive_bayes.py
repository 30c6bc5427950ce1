"""
Feature-selected naive Bayes over discretized texture attributes.

The joint distribution is the product of per-attribute conditionals with
the class node as the only parent. Attributes enter the product only if
their normalized mutual information with the class, MI(attribute; class) /
H(class), reaches the network threshold t. This is a stand-in for full
Bayesian-network structure learning, whose original algorithm is not
available.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
from scipy.special import logsumexp

from ..errors import TrainingError
from ..models import ClassLabel, Dataset, FeatureVector
from .classifier import Classifier, Prediction
from .discretization import (EQUAL_FREQUENCY, DiscretizationModel, discretize,
                             discretize_dataset, fit_discretization)

logger = logging.getLogger(__name__)

DEFAULT_BINS = 5
DEFAULT_THRESHOLD = 0.1
DEFAULT_ALPHA = 1.0


def entropy(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts[counts > 0] / total
    return float(-np.sum(p * np.log(p)))


def normalized_mutual_information(bins: np.ndarray, classes: np.ndarray) -> float:
    """
    MI(bins; classes) / H(classes) from empirical (unsmoothed) counts.

    Returns 0 when the class entropy is 0.
    """
    bin_values, bin_idx = np.unique(bins, return_inverse=True)
    class_values, class_idx = np.unique(classes, return_inverse=True)
    joint = np.zeros((bin_values.size, class_values.size))
    np.add.at(joint, (bin_idx, class_idx), 1.0)
    h_class = entropy(joint.sum(axis=0))
    if h_class == 0.0:
        return 0.0
    mi = entropy(joint.sum(axis=0)) + entropy(joint.sum(axis=1)) - entropy(joint.ravel())
    return max(0.0, mi / h_class)


@dataclass(frozen=True)
class NaiveBayesModel(Classifier):
    """
    Attributes:
        discretization: Embedded bin model (defines the schema)
        class_labels: Classes in order of first appearance in training data
        priors: Class relative frequencies
        conditionals: [class][attribute][bin] Laplace-smoothed frequencies
        selected: Indices of attributes used in the product
        mi_scores: Normalized mutual information per attribute
        threshold: Selection threshold t
        alpha: Laplace pseudo-count
        fallback_selection: True when no attribute reached t and the single best was kept
    """
    discretization: DiscretizationModel
    class_labels: Tuple[ClassLabel, ...]
    priors: Tuple[float, ...]
    conditionals: Tuple[Tuple[Tuple[float, ...], ...], ...]
    selected: Tuple[int, ...]
    mi_scores: Tuple[float, ...]
    threshold: float = DEFAULT_THRESHOLD
    alpha: float = DEFAULT_ALPHA
    fallback_selection: bool = False

    kind = 'nb'

    def __post_init__(self):
        if not self.selected:
            raise TrainingError("Naive Bayes model needs at least one selected attribute")
        if not math.isclose(sum(self.priors), 1.0, abs_tol=1e-9):
            raise ValueError("Class priors must sum to 1")

    @property
    def attribute_names(self) -> Tuple[str, ...]:
        return self.discretization.attribute_names

    @property
    def classes(self) -> Tuple[ClassLabel, ...]:
        return self.class_labels

    @property
    def selected_attributes(self) -> Tuple[str, ...]:
        return tuple(self.attribute_names[i] for i in self.selected)

    def log_joint(self, bins: Tuple[int, ...]) -> np.ndarray:
        """log prior + sum of log conditionals over the selected attributes, per class."""
        scores = np.log(np.asarray(self.priors))
        for c in range(len(self.class_labels)):
            for a in self.selected:
                scores[c] += math.log(self.conditionals[c][a][bins[a]])
        return scores

    def predict(self, v: FeatureVector) -> Prediction:
        self.check_schema(v)
        log_scores = self.log_joint(discretize(v, self.discretization))
        posteriors = np.exp(log_scores - logsumexp(log_scores))
        best = int(np.argmax(posteriors))
        return Prediction(label=self.class_labels[best],
                          confidence=float(posteriors[best]),
                          scores={lab: float(p) for lab, p in zip(self.class_labels, posteriors)})

    def to_dict(self) -> Dict:
        return {
            'discretization': self.discretization.to_dict(),
            'classes': [str(c) for c in self.class_labels],
            'priors': list(self.priors),
            'conditionals': [[list(bins) for bins in per_class] for per_class in self.conditionals],
            'selected': list(self.selected),
            'mi_scores': list(self.mi_scores),
            'threshold': self.threshold,
            'alpha': self.alpha,
            'fallback_selection': self.fallback_selection,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'NaiveBayesModel':
        return cls(
            discretization=DiscretizationModel.from_dict(data['discretization']),
            class_labels=tuple(ClassLabel(c) for c in data['classes']),
            priors=tuple(float(p) for p in data['priors']),
            conditionals=tuple(tuple(tuple(float(x) for x in bins) for bins in per_class)
                               for per_class in data['conditionals']),
            selected=tuple(int(i) for i in data['selected']),
            mi_scores=tuple(float(s) for s in data['mi_scores']),
            threshold=float(data['threshold']),
            alpha=float(data['alpha']),
            fallback_selection=bool(data['fallback_selection']),
        )


def _check_training_data(ds: Dataset) -> None:
    if len(ds) == 0:
        raise TrainingError("Cannot train on an empty dataset")
    counts = ds.class_counts()
    if len(counts) < 2:
        raise TrainingError(f"Training needs at least 2 classes, got {len(counts)}")
    small = [str(label) for label, n in counts.items() if n < 2]
    if small:
        raise TrainingError(f"Classes with fewer than 2 rows: {', '.join(small)}")


def nb_train(ds: Dataset, b: int = DEFAULT_BINS, t: float = DEFAULT_THRESHOLD,
             alpha: float = DEFAULT_ALPHA, method: str = EQUAL_FREQUENCY) -> NaiveBayesModel:
    """
    Train a feature-selected naive Bayes classifier.

    Args:
        ds: Labelled training data (>= 2 classes, >= 2 rows each)
        b: Discretization bin count
        t: Normalized-MI selection threshold
        alpha: Laplace smoothing pseudo-count
        method: Discretization method

    Returns:
        NaiveBayesModel
    """
    _check_training_data(ds)
    disc = fit_discretization(ds, b, method)
    bins = discretize_dataset(ds, disc)
    classes = tuple(ds.class_labels())
    class_idx = np.array([classes.index(label) for label in ds.labels])

    priors = tuple(float(np.sum(class_idx == c)) / len(ds) for c in range(len(classes)))

    conditionals = []
    for c in range(len(classes)):
        rows = bins[class_idx == c]
        per_attribute = []
        for a in range(bins.shape[1]):
            n_bins = disc.bins_of(a)
            counts = np.bincount(rows[:, a], minlength=n_bins).astype(np.float64)
            smoothed = (counts + alpha) / (rows.shape[0] + alpha * n_bins)
            per_attribute.append(tuple(float(x) for x in smoothed))
        conditionals.append(tuple(per_attribute))

    scores = tuple(normalized_mutual_information(bins[:, a], class_idx)
                   for a in range(bins.shape[1]))
    selected = tuple(a for a, s in enumerate(scores) if s >= t)
    fallback = False
    if not selected:
        selected = (int(np.argmax(scores)),)
        fallback = True
        logger.warning("no attribute reached t=%.3f; keeping best single attribute %s",
                       t, ds.attribute_names[selected[0]])

    logger.debug("naive Bayes trained on %d rows; selected %s", len(ds),
                 [ds.attribute_names[a] for a in selected])
    return NaiveBayesModel(discretization=disc, class_labels=classes, priors=priors,
                           conditionals=tuple(conditionals), selected=selected,
                           mi_scores=scores, threshold=t, alpha=alpha,
                           fallback_selection=fallback)


def nb_predict(model: NaiveBayesModel, v: FeatureVector) -> Tuple[ClassLabel, Dict[ClassLabel, float]]:
    """Winning label and the normalised posterior of every class."""
    prediction = model.predict(v)
    return prediction.label, dict(prediction.scores)


def rank_attributes(model: NaiveBayesModel) -> List[Tuple[str, float]]:
    """Attributes by normalized mutual information with the class, best first."""
    pairs = list(zip(model.attribute_names, model.mi_scores))
    return sorted(pairs, key=lambda item: item[1], reverse=True)
