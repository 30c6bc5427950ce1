"""
Nine-measure window summary in the published attribute order
"""

from typing import List, Tuple

from ..errors import KernelError
from .concrete_operators import OPERATORS
from .operators import WindowLike, as_window_array

# (measure, kernel) pairs, in published column order
MEASURE_LAYOUT: Tuple[Tuple[str, int], ...] = (
    ('Russ', 3),
    ('Levine', 3),
    ('Sigma', 3),
    ('Skewness', 3),
    ('Russ', 5),
    ('Levine', 5),
    ('Sigma', 5),
    ('Skewness', 5),
    ('StdDev', 3),
)

MIN_WINDOW = max(k for _, k in MEASURE_LAYOUT)


def measure_names() -> List[str]:
    """'<Measure>_<k>x<k>' labels of the nine measures."""
    return [f"{name}_{k}x{k}" for name, k in MEASURE_LAYOUT]


def measure_window(window: WindowLike) -> Tuple[float, ...]:
    """
    Evaluate all nine texture measures on a sampling window.

    Args:
        window: Sampling area, at least 5x5

    Returns:
        (Russ3, Levine3, Sigma3, Skewness3, Russ5, Levine5, Sigma5, Skewness5, StdDev3)
    """
    arr = as_window_array(window)
    if arr.shape[0] < MIN_WINDOW or arr.shape[1] < MIN_WINDOW:
        raise KernelError(
            f"Window {arr.shape[1]}x{arr.shape[0]} is smaller than {MIN_WINDOW}x{MIN_WINDOW}"
        )
    return tuple(OPERATORS[name](arr, k) for name, k in MEASURE_LAYOUT)
