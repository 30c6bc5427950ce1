"""
Texture operator base class.

A texture operator scans every valid centre of a sampling window (centres
whose k x k neighbourhood lies fully inside the window), computes a
per-centre response, and reports the mean response as the window's
cumulative texture value. Concrete operators only implement the
per-neighbourhood response.
"""

from abc import ABC, abstractmethod
from typing import Union

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import KernelError
from ..models import GrayImage

WindowLike = Union[GrayImage, np.ndarray]

KERNEL_SIZES = (3, 5)


def validate_kernel(k: int) -> int:
    """Kernel side must be an odd integer >= 3."""
    if int(k) != k or k < 3 or k % 2 == 0:
        raise KernelError(f"Kernel size must be an odd integer >= 3, got {k}")
    return int(k)


def as_window_array(window: WindowLike) -> np.ndarray:
    """2-D float64 view of an image or array window."""
    arr = window.to_array() if isinstance(window, GrayImage) else np.asarray(window, dtype=np.float64)
    if arr.ndim != 2:
        raise KernelError(f"Window must be 2-D, got shape {arr.shape}")
    return arr


def neighbourhoods(window: WindowLike, k: int) -> np.ndarray:
    """
    All k x k neighbourhoods of a window.

    Returns:
        Array of shape (rows - k + 1, cols - k + 1, k, k)
    """
    k = validate_kernel(k)
    arr = as_window_array(window)
    if arr.shape[0] < k or arr.shape[1] < k:
        raise KernelError(
            f"Window {arr.shape[1]}x{arr.shape[0]} is smaller than the {k}x{k} kernel"
        )
    return sliding_window_view(arr, (k, k))


class TextureOperator(ABC):
    """Base class for windowed texture measures."""

    name: str = ""

    @abstractmethod
    def response(self, blocks: np.ndarray) -> np.ndarray:
        """
        Per-centre response.

        Args:
            blocks: Neighbourhoods of shape (..., k, k)

        Returns:
            Array of shape blocks.shape[:-2]
        """
        pass

    def response_map(self, window: WindowLike, k: int) -> np.ndarray:
        """Responses for every valid centre, indexed like the window minus a k//2 border."""
        return self.response(neighbourhoods(window, k))

    def __call__(self, window: WindowLike, k: int) -> float:
        """Cumulative texture value: mean response over all valid centres."""
        return float(np.mean(self.response_map(window, k)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
