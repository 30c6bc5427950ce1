"""
Real-time collapse detection loop.

Each frame is turned into a feature vector (measured from its image, or
taken inline), classified, and fed to a debouncing state machine that commits
a new product state only after `debounce` consecutive frames agree on it.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from ..errors import StreamError
from ..features import build_feature_vector
from ..imaging import load_image
from ..models import ClassLabel, DetectionEvent, DetectionResult, FeatureVector, FrameSample, Roi
from ..classify import Classifier

logger = logging.getLogger(__name__)

DEFAULT_DEBOUNCE = 3


class CollapseDetector:
    """
    Debounced product-state tracker.

    The first classified frame sets the committed state. A transition is
    committed once `debounce` consecutive frames carry the same label that
    differs from the committed state; the event is stamped with the first of
    those frames. The event count never grows with `debounce`.
    """

    def __init__(self, debounce: int = DEFAULT_DEBOUNCE):
        if debounce < 1:
            raise ValueError(f"Debounce must be >= 1, got {debounce}")
        self.debounce = debounce
        self.committed: Optional[ClassLabel] = None
        self.events: List[DetectionEvent] = []
        self._candidate: Optional[ClassLabel] = None
        self._run: List[tuple] = []

    def reset(self) -> None:
        self.committed = None
        self.events = []
        self._clear()

    def _clear(self) -> None:
        self._candidate = None
        self._run = []

    def update(self, frame_index: int, timestamp: float, label: ClassLabel,
               confidence: float = 1.0) -> Optional[DetectionEvent]:
        """
        Feed one classified frame.

        Returns:
            The DetectionEvent committed by this frame, or None
        """
        label = ClassLabel.of(label)
        if self.committed is None:
            self.committed = label
            return None
        if label == self.committed:
            self._clear()
            return None
        if label != self._candidate:
            self._candidate = label
            self._run = []
        self._run.append((frame_index, timestamp, confidence))
        if len(self._run) < self.debounce:
            return None

        first_index, first_time, _ = self._run[0]
        mean_conf = sum(c for _, _, c in self._run) / len(self._run)
        event = DetectionEvent(frame_index=first_index, timestamp=first_time,
                               from_state=self.committed, to_state=label,
                               confidence=min(max(mean_conf, 0.0), 1.0))
        self.committed = label
        self.events.append(event)
        self._clear()
        logger.info("state change at frame %d (t=%.1fs): %s -> %s (confidence %.2f)",
                    event.frame_index, event.timestamp, event.from_state,
                    event.to_state, event.confidence)
        return event


def check_stream_order(stream: Sequence[FrameSample]) -> None:
    """
    Raises:
        StreamError: empty stream, non-increasing indices or decreasing timestamps
    """
    if not stream:
        raise StreamError("Frame stream is empty")
    for prev, cur in zip(stream, stream[1:]):
        if cur.index <= prev.index:
            raise StreamError(f"Frame indices not strictly increasing at frame {cur.index}")
        if cur.timestamp < prev.timestamp:
            raise StreamError(f"Timestamp goes backwards at frame {cur.index}")


def frame_vector(sample: FrameSample, rois: Optional[Sequence[Roi]]) -> FeatureVector:
    """Inline vector, or the measured vector of the frame's image."""
    if sample.is_inline:
        return sample.source
    if not rois:
        raise StreamError(f"Frame {sample.index} is an image but no rois were given")
    return build_feature_vector(load_image(sample.source), rois)


def run_detection_loop(stream: Sequence[FrameSample], classifier: Classifier,
                       rois: Optional[Sequence[Roi]] = None,
                       debounce: int = DEFAULT_DEBOUNCE, workers: int = 1) -> DetectionResult:
    """
    Classify every frame in order and commit debounced state changes.

    Args:
        stream: Frames in index order
        classifier: Trained model whose schema matches the frame vectors
        rois: Sampling areas for image-sourced frames
        debounce: Consecutive agreeing frames needed to commit a change
        workers: Threads measuring image frames ahead of classification

    Returns:
        DetectionResult with one label per frame and the committed events
    """
    frames = list(stream)
    check_stream_order(frames)
    detector = CollapseDetector(debounce)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            vectors = list(pool.map(lambda s: frame_vector(s, rois), frames))
    else:
        vectors = [frame_vector(s, rois) for s in frames]

    result = DetectionResult(labels=[], confidences=[], events=[])
    for sample, vector in zip(frames, vectors):
        prediction = classifier.predict(vector)
        logger.debug("frame %d: %s (%.2f)", sample.index, prediction.label,
                     prediction.confidence)
        result.labels.append(prediction.label)
        result.confidences.append(prediction.confidence)
        result.timestamps.append(sample.timestamp)
        result.vectors.append(vector)
        detector.update(sample.index, sample.timestamp, prediction.label, prediction.confidence)

    result.events.extend(detector.events)
    return result
