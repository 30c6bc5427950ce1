"""
Monitoring models: stream frames, detection events and trend polynomials
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial

from ..errors import TrendError
from .features import ClassLabel, FeatureVector

FrameSource = Union[str, Path, FeatureVector]


@dataclass(frozen=True)
class FrameSample:
    """
    One frame of a monitoring stream.

    Attributes:
        index: Ordinal position in the stream
        timestamp: Seconds since run start
        source: Image path, or an inline feature vector
    """
    index: int
    timestamp: float
    source: FrameSource

    @property
    def is_inline(self) -> bool:
        return isinstance(self.source, FeatureVector)


@dataclass(frozen=True)
class DetectionEvent:
    """
    Committed product-state transition.

    Attributes:
        frame_index: First frame carrying the new state
        timestamp: Timestamp of that frame
        from_state: State committed before the transition
        to_state: Newly committed state
        confidence: Mean classifier confidence over the confirming frames
    """
    frame_index: int
    timestamp: float
    from_state: ClassLabel
    to_state: ClassLabel
    confidence: float

    def __post_init__(self):
        if ClassLabel.of(self.from_state) == ClassLabel.of(self.to_state):
            raise ValueError("DetectionEvent requires from_state != to_state")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence must lie in [0, 1], got {self.confidence}")

    def to_dict(self) -> Dict:
        return {
            'frame': self.frame_index,
            'timestamp': self.timestamp,
            'from': str(self.from_state),
            'to': str(self.to_state),
            'confidence': self.confidence,
        }


@dataclass(frozen=True)
class TrendModel:
    """
    Least-squares polynomial over a texture-measure time series.

    The fit is carried out on timestamps mapped onto [-1, 1]; `coefficients`
    are the same polynomial expressed in original time units.

    Attributes:
        coefficients: Ascending-degree coefficients in original coordinates
        degree: Polynomial degree d
        attribute_name: Texture attribute the series was taken from
        residual_rms: Root-mean-square fit residual
        domain: (first, last) timestamp of the fitted series
        scaled_coefficients: Ascending coefficients on the [-1, 1] window
    """
    coefficients: Tuple[float, ...]
    degree: int
    attribute_name: str
    residual_rms: float
    domain: Tuple[float, float]
    scaled_coefficients: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise TrendError(
                f"Trend of degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )
        if self.residual_rms < 0:
            raise TrendError("residual_rms must be >= 0")

    @property
    def polynomial(self) -> Polynomial:
        if self.scaled_coefficients:
            return Polynomial(self.scaled_coefficients, domain=list(self.domain), window=[-1, 1])
        return Polynomial(self.coefficients)

    def __call__(self, t):
        return self.polynomial(np.asarray(t, dtype=np.float64))

    def to_dict(self) -> Dict:
        return {
            'coefficients': list(self.coefficients),
            'degree': self.degree,
            'attribute_name': self.attribute_name,
            'residual_rms': self.residual_rms,
            'domain': list(self.domain),
            'scaled_coefficients': list(self.scaled_coefficients),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'TrendModel':
        return cls(coefficients=tuple(data['coefficients']),
                   degree=int(data['degree']),
                   attribute_name=data['attribute_name'],
                   residual_rms=float(data['residual_rms']),
                   domain=tuple(data['domain']),
                   scaled_coefficients=tuple(data.get('scaled_coefficients', ())))


@dataclass
class DetectionResult:
    """
    Outcome of one monitoring run.

    Attributes:
        labels: Classified label per frame, in frame order
        confidences: Classifier confidence per frame
        events: Committed transitions
        timestamps: Frame timestamps
        vectors: Feature vector per frame
        trend: Trend fitted over one attribute of the vectors, when requested
    """
    labels: List[ClassLabel]
    confidences: List[float]
    events: List[DetectionEvent]
    timestamps: List[float] = field(default_factory=list)
    vectors: List[FeatureVector] = field(default_factory=list)
    trend: Optional[TrendModel] = None

    @property
    def frame_count(self) -> int:
        return len(self.labels)

    def series(self, attribute: str) -> List[Tuple[float, float]]:
        """(timestamp, value) pairs of one attribute across the run."""
        return [(t, v[attribute]) for t, v in zip(self.timestamps, self.vectors)]
