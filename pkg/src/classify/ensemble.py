"""
Multi-classifier system: plurality vote over at least three members.

Vote ties go to the tied label predicted by the earliest-listed member.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import SchemaMismatchError, TrainingError
from ..models import ClassLabel, Dataset, FeatureVector
from .classifier import Classifier, Prediction
from .discretization import EQUAL_FREQUENCY
from .knn import knn_train
from .naive_bayes import DEFAULT_BINS, DEFAULT_THRESHOLD, nb_train

MIN_MEMBERS = 3


@dataclass(frozen=True)
class EnsembleModel(Classifier):
    """
    Attributes:
        members: Trained classifiers, in tie-break priority order
    """
    members: Tuple[Classifier, ...]

    kind = 'ensemble'

    def __post_init__(self):
        object.__setattr__(self, 'members', tuple(self.members))
        if len(self.members) < MIN_MEMBERS:
            raise TrainingError(
                f"An ensemble needs at least {MIN_MEMBERS} members, got {len(self.members)}"
            )
        schema = self.members[0].attribute_names
        for i, member in enumerate(self.members[1:], start=1):
            if member.attribute_names != schema:
                raise SchemaMismatchError(schema, member.attribute_names,
                                          f"ensemble member {i}")

    @property
    def attribute_names(self) -> Tuple[str, ...]:
        return self.members[0].attribute_names

    @property
    def classes(self) -> Tuple[ClassLabel, ...]:
        seen: List[ClassLabel] = []
        for member in self.members:
            for label in member.classes:
                if label not in seen:
                    seen.append(label)
        return tuple(seen)

    def predict(self, v: FeatureVector) -> Prediction:
        self.check_schema(v)
        votes: Dict[ClassLabel, int] = {}
        first_voter: Dict[ClassLabel, int] = {}
        for position, member in enumerate(self.members):
            label = member.predict(v).label
            votes[label] = votes.get(label, 0) + 1
            first_voter.setdefault(label, position)
        top = max(votes.values())
        winner = min((label for label, n in votes.items() if n == top), key=first_voter.get)
        n = len(self.members)
        return Prediction(label=winner, confidence=top / n,
                          scores={label: votes.get(label, 0) / n for label in self.classes})

    def to_dict(self) -> Dict:
        from .persistence import model_to_document
        return {'members': [model_to_document(m) for m in self.members]}

    @classmethod
    def from_dict(cls, data: Dict) -> 'EnsembleModel':
        from .persistence import model_from_document
        return cls(members=tuple(model_from_document(m) for m in data['members']))


def ensemble_predict(model: EnsembleModel, v: FeatureVector) -> ClassLabel:
    return model.predict(v).label


def build_default_ensemble(ds: Dataset, b: int = DEFAULT_BINS, t: float = DEFAULT_THRESHOLD,
                           method: str = EQUAL_FREQUENCY) -> EnsembleModel:
    """
    Three differently configured members: naive Bayes, standardized 1-NN and
    standardized 3-NN (k capped at the row count).
    """
    members = (
        nb_train(ds, b=b, t=t, method=method),
        knn_train(ds, k=1, standardized=True),
        knn_train(ds, k=min(3, len(ds)), standardized=True),
    )
    return EnsembleModel(members=members)
