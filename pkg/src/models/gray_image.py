"""
Grayscale image and region-of-interest models.

Pixel origin is the top-left corner and pixels are stored row-major,
matching the camera sensor layout.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from ..errors import RoiError

AREA_LABELS = ('A', 'B', 'C')


@dataclass(frozen=True, eq=False)
class GrayImage:
    """
    Immutable 8-bit grayscale image.

    Attributes:
        width: Pixel count along x
        height: Pixel count along y
        pixels: uint8 array of shape (height, width), read-only
    """
    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"Image dimensions must be >= 1, got {self.width}x{self.height}")
        arr = np.asarray(self.pixels)
        if arr.size != self.width * self.height:
            raise ValueError(
                f"Pixel count {arr.size} does not match {self.width}x{self.height}"
            )
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("Pixel values must lie in 0..255")
            arr = arr.astype(np.uint8)
        arr = np.array(arr.reshape(self.height, self.width), dtype=np.uint8, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, 'pixels', arr)

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'GrayImage':
        """Build an image from a 2-D array of 0..255 values."""
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise ValueError(f"Expected a 2-D array, got shape {arr.shape}")
        return cls(width=arr.shape[1], height=arr.shape[0], pixels=arr)

    @classmethod
    def from_bytes(cls, width: int, height: int, data: Union[bytes, Sequence[int]]) -> 'GrayImage':
        """Build an image from a row-major byte sequence."""
        arr = np.frombuffer(bytes(data), dtype=np.uint8)
        return cls(width=width, height=height, pixels=arr)

    def to_array(self) -> np.ndarray:
        """Writable float64 copy of the pixels."""
        return self.pixels.astype(np.float64)

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()

    @property
    def shape(self) -> tuple:
        return (self.height, self.width)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (self.width == other.width and self.height == other.height
                and np.array_equal(self.pixels, other.pixels))

    __hash__ = None

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


@dataclass(frozen=True)
class Roi:
    """
    Rectangular sampling area.

    Attributes:
        x: Left column (0-based)
        y: Top row (0-based)
        w: Width in pixels
        h: Height in pixels
        area_label: Diffusion band label (A, B, C) or None when unlabeled
    """
    x: int
    y: int
    w: int
    h: int
    area_label: Optional[str] = None

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise RoiError(f"Roi origin must be non-negative, got ({self.x},{self.y})")
        if self.w < 1 or self.h < 1:
            raise RoiError(f"Roi extent must be >= 1, got {self.w}x{self.h}")

    def fits(self, image: GrayImage) -> bool:
        """True when the roi lies fully inside the image."""
        return self.x + self.w <= image.width and self.y + self.h <= image.height

    def contains(self, col: int, row: int) -> bool:
        return self.x <= col < self.x + self.w and self.y <= row < self.y + self.h

    def to_spec(self) -> str:
        """Render as the CLI roi string 'x,y,w,h[:label]'."""
        text = f"{self.x},{self.y},{self.w},{self.h}"
        return f"{text}:{self.area_label}" if self.area_label else text

    @classmethod
    def parse(cls, text: str) -> 'Roi':
        """
        Parse a roi specification string.

        Args:
            text: 'x,y,w,h' optionally followed by ':label'

        Returns:
            Roi instance
        """
        body, _, label = text.strip().partition(':')
        parts = body.split(',')
        if len(parts) != 4:
            raise RoiError(f"Roi '{text}': expected 4 comma-separated integers x,y,w,h")
        values = []
        for name, token in zip(('x', 'y', 'w', 'h'), parts):
            try:
                values.append(int(token.strip()))
            except ValueError:
                raise RoiError(f"Roi '{text}': {name}='{token.strip()}' is not an integer") from None
        return cls(*values, area_label=label.strip() or None)
