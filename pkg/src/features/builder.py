"""
Per-frame feature vector assembly from sampling areas
"""

from typing import Iterable, List, Sequence, Tuple

from ..errors import RoiError
from ..imaging import extract_window
from ..models import AREA_LABELS, Dataset, FeatureVector, GrayImage, Roi, attribute_name
from ..texture import MEASURE_LAYOUT, measure_window
from ..texture.measures import MIN_WINDOW


def area_tag(roi: Roi, position: int) -> str:
    """Roi label, falling back to A, B, C, ... by position."""
    if roi.area_label:
        return roi.area_label
    if position < len(AREA_LABELS):
        return AREA_LABELS[position]
    return f"R{position + 1}"


def feature_schema(rois: Sequence[Roi]) -> Tuple[str, ...]:
    """Attribute names produced for a roi list, nine per roi in roi order."""
    names: List[str] = []
    for position, roi in enumerate(rois):
        tag = area_tag(roi, position)
        names.extend(attribute_name(measure, k, tag) for measure, k in MEASURE_LAYOUT)
    if len(set(names)) != len(names):
        raise RoiError("Roi area labels must be distinct")
    return tuple(names)


def build_feature_vector(image: GrayImage, rois: Sequence[Roi]) -> FeatureVector:
    """
    Measure every sampling area of a frame.

    Args:
        image: Full frame
        rois: Sampling areas, each at least 5x5

    Returns:
        FeatureVector with 9 * len(rois) values
    """
    if not rois:
        raise RoiError("At least one roi is required")
    names = feature_schema(rois)
    values: List[float] = []
    for roi in rois:
        if roi.w < MIN_WINDOW or roi.h < MIN_WINDOW:
            raise RoiError(f"Roi {roi.to_spec()} is smaller than {MIN_WINDOW}x{MIN_WINDOW}")
        values.extend(measure_window(extract_window(image, roi)))
    return FeatureVector(tuple(values), names)


def build_dataset(images: Iterable[GrayImage], labels: Iterable, rois: Sequence[Roi]) -> Dataset:
    """Feature vectors for a batch of labelled frames sharing one roi layout."""
    rows = tuple(build_feature_vector(image, rois) for image in images)
    return Dataset(rows=rows, labels=tuple(labels), attribute_names=feature_schema(rois))
