"""
Speckle field simulation and speckle contrast
"""

from .phasor import (phasor_sum, simulate_intensity_field, simulate_speckle, quantise_field,
                     speckle_contrast, speckle_contrast_map, exponential_ks_statistic)

__all__ = [
    'phasor_sum', 'simulate_intensity_field', 'simulate_speckle', 'quantise_field',
    'speckle_contrast', 'speckle_contrast_map', 'exponential_ks_statistic',
]
