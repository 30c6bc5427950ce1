"""
Feature vectors, standardization, dataset CSV and the published fixture
"""

from .builder import area_tag, feature_schema, build_feature_vector, build_dataset
from .standardization import (StandardizationParams, fit_standardization,
                              apply_standardization, standardize_dataset)
from .csv_io import read_csv, write_csv
from .fixture import table3_fixture, FIXTURE_ATTRIBUTES, FIXTURE_AREA
from .selection import class_means, fisher_scores, most_discriminant_attribute

__all__ = [
    'area_tag', 'feature_schema', 'build_feature_vector', 'build_dataset',
    'StandardizationParams', 'fit_standardization', 'apply_standardization',
    'standardize_dataset', 'read_csv', 'write_csv',
    'table3_fixture', 'FIXTURE_ATTRIBUTES', 'FIXTURE_AREA',
    'class_means', 'fisher_scores', 'most_discriminant_attribute',
]
