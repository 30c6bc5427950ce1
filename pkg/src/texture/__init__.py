"""
Windowed texture measures (Russ, Levine, Sigma, Skewness, StdDev)
"""

from .operators import TextureOperator, KERNEL_SIZES, neighbourhoods, validate_kernel
from .concrete_operators import (RussOperator, LevineOperator, SigmaOperator,
                                 SkewnessOperator, StdDevOperator, OPERATORS,
                                 russ, levine, sigma, skewness, std_dev)
from .measures import MEASURE_LAYOUT, measure_names, measure_window

__all__ = [
    'TextureOperator', 'KERNEL_SIZES', 'neighbourhoods', 'validate_kernel',
    'RussOperator', 'LevineOperator', 'SigmaOperator', 'SkewnessOperator', 'StdDevOperator',
    'OPERATORS', 'russ', 'levine', 'sigma', 'skewness', 'std_dev',
    'MEASURE_LAYOUT', 'measure_names', 'measure_window',
]
