"""
Utility functions and helpers
"""

from .data_generator import DataGenerator
from .logger import Logger
from .config import RunConfig, load_config, deep_merge, DEFAULTS

__all__ = ['DataGenerator', 'Logger', 'RunConfig', 'load_config', 'deep_merge', 'DEFAULTS']
