"""
Real-time monitoring: debounced detection loop and polynomial trend model
"""

from .trend import (fit_polynomial_trend, locate_transition_from_trend, class_midpoint,
                    DEFAULT_DEGREE)
from .detection_loop import (CollapseDetector, run_detection_loop, check_stream_order,
                             DEFAULT_DEBOUNCE)
from .stream_io import (read_stream_csv, write_stream_csv, write_events_csv, image_stream,
                        open_stream, DEFAULT_CADENCE)

__all__ = [
    'fit_polynomial_trend', 'locate_transition_from_trend', 'class_midpoint', 'DEFAULT_DEGREE',
    'CollapseDetector', 'run_detection_loop', 'check_stream_order', 'DEFAULT_DEBOUNCE',
    'read_stream_csv', 'write_stream_csv', 'write_events_csv', 'image_stream',
    'open_stream', 'DEFAULT_CADENCE',
]
