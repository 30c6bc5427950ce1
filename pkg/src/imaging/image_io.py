"""
Grayscale image file I/O.

Binary PGM (P5, maxval 255) is the canonical format and is read and written
byte-exactly. 8-bit grayscale PNG files can also be read through Pillow.
"""

from pathlib import Path
from typing import Tuple, Union

import numpy as np

from ..errors import ImageFormatError, PgmHeaderError, PgmMaxvalError, PgmTruncatedError
from ..models import GrayImage

PathLike = Union[str, Path]

PNG_SIGNATURE = b'\x89PNG\r\n\x1a\n'
_WHITESPACE = b' \t\r\n\x0b\x0c'


def _read_token(data: bytes, pos: int, field: str) -> Tuple[bytes, int, int]:
    """Return (token, token_start, position after token), skipping whitespace and comments."""
    n = len(data)
    while pos < n:
        ch = data[pos:pos + 1]
        if ch == b'#':
            end = data.find(b'\n', pos)
            pos = n if end < 0 else end + 1
        elif ch in _WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b'#':
        pos += 1
    if start == pos:
        raise PgmHeaderError(field, start, "missing value")
    return data[start:pos], start, pos


def _parse_int(token: bytes, field: str, offset: int) -> int:
    try:
        value = int(token.decode('ascii'))
    except (UnicodeDecodeError, ValueError):
        raise PgmHeaderError(field, offset, f"not an integer: {token!r}") from None
    if value < 1:
        raise PgmHeaderError(field, offset, f"must be >= 1, got {value}")
    return value


def decode_pgm(data: bytes) -> GrayImage:
    """
    Decode a binary P5 PGM byte string.

    Raises:
        PgmHeaderError: malformed magic number, width, height or separator
        PgmMaxvalError: maxval other than 255
        PgmTruncatedError: fewer payload bytes than width x height
    """
    if data[:2] != b'P5':
        raise PgmHeaderError('magic', 0, f"expected b'P5', got {data[:2]!r}")
    if len(data) < 3 or data[2:3] not in _WHITESPACE:
        raise PgmHeaderError('magic', 2, "magic number must be followed by whitespace")

    token, offset, pos = _read_token(data, 2, 'width')
    width = _parse_int(token, 'width', offset)
    token, offset, pos = _read_token(data, pos, 'height')
    height = _parse_int(token, 'height', offset)
    token, offset, pos = _read_token(data, pos, 'maxval')
    maxval = _parse_int(token, 'maxval', offset)
    if maxval != 255:
        raise PgmMaxvalError(maxval, offset)

    # exactly one whitespace byte separates the header from the raster
    if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
        raise PgmHeaderError('separator', pos, "expected a single whitespace byte after maxval")
    payload_offset = pos + 1

    expected = width * height
    payload = data[payload_offset:payload_offset + expected]
    if len(payload) < expected:
        raise PgmTruncatedError(expected, len(payload), payload_offset)
    return GrayImage.from_bytes(width, height, payload)


def encode_pgm(image: GrayImage) -> bytes:
    """Encode an image as P5 with a minimal single-space header."""
    header = f"P5\n{image.width} {image.height}\n255\n".encode('ascii')
    return header + image.tobytes()


def _decode_png(path: Path) -> GrayImage:
    from PIL import Image

    with Image.open(path) as im:
        if im.mode != 'L':
            raise ImageFormatError(f"{path}: PNG mode '{im.mode}' is not 8-bit grayscale ('L')")
        arr = np.asarray(im, dtype=np.uint8)
    return GrayImage.from_array(arr)


def load_image(path: PathLike) -> GrayImage:
    """
    Load a grayscale image with exact pixel values.

    Args:
        path: P5 PGM file, or 8-bit grayscale PNG

    Returns:
        GrayImage
    """
    path = Path(path)
    data = path.read_bytes()
    if data.startswith(PNG_SIGNATURE):
        return _decode_png(path)
    try:
        return decode_pgm(data)
    except ImageFormatError as exc:
        exc.args = (f"{path}: {exc.args[0]}",) + exc.args[1:]
        raise


def save_image(image: GrayImage, path: PathLike) -> None:
    """Write an image as byte-exact binary PGM."""
    Path(path).write_bytes(encode_pgm(image))
