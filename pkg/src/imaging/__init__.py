"""
Image I/O and sampling-area handling
"""

from .image_io import load_image, save_image, decode_pgm, encode_pgm
from .windows import (extract_window, suggest_rois, window_means,
                      intensity_bands, parse_roi)

__all__ = [
    'load_image', 'save_image', 'decode_pgm', 'encode_pgm',
    'extract_window', 'suggest_rois', 'window_means',
    'intensity_bands', 'parse_roi',
]
