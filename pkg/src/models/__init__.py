"""
Core data models for laser speckle monitoring
"""

from .gray_image import GrayImage, Roi, AREA_LABELS
from .features import (ClassLabel, FeatureVector, Dataset, attribute_name,
                       NORMAL, MICRO_COLLAPSE, DRY_LAYER_A, DRY_LAYER_B)
from .speckle import PhasorFieldConfig, ComplexAmplitude
from .monitoring import FrameSample, DetectionEvent, DetectionResult, TrendModel

__all__ = [
    'GrayImage', 'Roi', 'AREA_LABELS',
    'ClassLabel', 'FeatureVector', 'Dataset', 'attribute_name',
    'NORMAL', 'MICRO_COLLAPSE', 'DRY_LAYER_A', 'DRY_LAYER_B',
    'PhasorFieldConfig', 'ComplexAmplitude',
    'FrameSample', 'DetectionEvent', 'DetectionResult', 'TrendModel',
]
