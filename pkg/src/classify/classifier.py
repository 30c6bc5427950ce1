"""
Classifier base class.

Every trained model carries its preprocessing and its training schema, and
answers `predict` with the winning label plus a confidence in [0, 1].
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ..models import ClassLabel, FeatureVector


@dataclass(frozen=True)
class Prediction:
    """
    Attributes:
        label: Winning class
        confidence: Posterior probability or vote fraction of the winner
        scores: Per-class posterior or vote fraction
    """
    label: ClassLabel
    confidence: float
    scores: Dict[ClassLabel, float] = field(default_factory=dict)


class Classifier(ABC):
    """Base class for trained product-state classifiers."""

    kind: str = ""

    @property
    @abstractmethod
    def attribute_names(self) -> Tuple[str, ...]:
        """Schema the model was trained on."""
        pass

    @property
    @abstractmethod
    def classes(self) -> Tuple[ClassLabel, ...]:
        """Class labels in training order."""
        pass

    @abstractmethod
    def predict(self, v: FeatureVector) -> Prediction:
        """
        Classify one feature vector.

        Raises:
            SchemaMismatchError: v's attribute names differ from the training schema
        """
        pass

    @abstractmethod
    def to_dict(self) -> Dict:
        """JSON-ready representation with every field needed for prediction."""
        pass

    def check_schema(self, v: FeatureVector) -> None:
        v.require_schema(self.attribute_names, context=f"{self.kind} model")
