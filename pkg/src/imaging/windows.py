"""
Window extraction and automated sampling-area suggestion.

Sampling areas are normally placed by hand on the laser diffusion bands of a
frame. `suggest_rois` is a best-effort histogram-driven alternative: it splits
the intensity histogram into equal-frequency bands, drops the brightest band
(the specular core) and, for every remaining band, places a square window
whose mean intensity is closest to the band's median intensity.
"""

import logging
from typing import List

import numpy as np

from ..errors import RoiError
from ..models import AREA_LABELS, GrayImage, Roi

logger = logging.getLogger(__name__)


def parse_roi(text: str) -> Roi:
    """Roi from its 'x,y,w,h[:label]' specification."""
    return Roi.parse(text)


def extract_window(image: GrayImage, roi: Roi) -> GrayImage:
    """
    Copy the roi's sub-image out of a frame.

    Args:
        image: Source frame (left untouched)
        roi: Region inside the frame

    Returns:
        New w x h GrayImage
    """
    if not roi.fits(image):
        raise RoiError(
            f"Roi {roi.to_spec()} exceeds image bounds {image.width}x{image.height}"
        )
    return GrayImage.from_array(image.pixels[roi.y:roi.y + roi.h, roi.x:roi.x + roi.w])


def window_means(pixels: np.ndarray, size: int) -> np.ndarray:
    """Mean of every size x size window, indexed by top-left corner."""
    integral = np.zeros((pixels.shape[0] + 1, pixels.shape[1] + 1), dtype=np.float64)
    integral[1:, 1:] = np.cumsum(np.cumsum(pixels.astype(np.float64), axis=0), axis=1)
    sums = (integral[size:, size:] - integral[:-size, size:]
            - integral[size:, :-size] + integral[:-size, :-size])
    return sums / float(size * size)


def intensity_bands(pixels: np.ndarray, band_count: int) -> List[np.ndarray]:
    """Split the sorted pixel intensities into band_count equal-frequency chunks."""
    ordered = np.sort(pixels, axis=None)
    return [chunk for chunk in np.array_split(ordered, band_count) if chunk.size]


def suggest_rois(image: GrayImage, band_count: int = 4, roi_size: int = 50) -> List[Roi]:
    """
    Suggest one square sampling area per non-specular intensity band.

    Args:
        image: Frame to segment
        band_count: Number of equal-frequency intensity bands (>= 1)
        roi_size: Side of each suggested window in pixels

    Returns:
        Rois ordered from the darkest band upwards; empty for a constant image
    """
    if band_count < 1:
        raise ValueError(f"band_count must be >= 1, got {band_count}")
    if roi_size < 1:
        raise ValueError(f"roi_size must be >= 1, got {roi_size}")
    if image.width <= roi_size or image.height <= roi_size:
        raise RoiError(
            f"Image {image.width}x{image.height} is too small for {roi_size}x{roi_size} rois"
        )

    pixels = image.pixels
    if pixels.min() == pixels.max():
        return []

    bands = intensity_bands(pixels, band_count)[:-1]
    if not bands:
        return []

    means = window_means(pixels, roi_size)
    # no suggested window may cover the specular peak
    peak_row, peak_col = np.unravel_index(int(np.argmax(pixels)), pixels.shape)
    row0 = max(0, peak_row - roi_size + 1)
    col0 = max(0, peak_col - roi_size + 1)
    means[row0:peak_row + 1, col0:peak_col + 1] = np.nan

    rois: List[Roi] = []
    taken = set()
    for band_idx, band in enumerate(bands):
        centre = float(np.median(band))
        distance = np.abs(means - centre)
        if np.all(np.isnan(distance)):
            break
        flat = int(np.nanargmin(distance))
        if flat in taken:
            continue
        taken.add(flat)
        row, col = np.unravel_index(flat, means.shape)
        label = AREA_LABELS[len(rois)] if len(rois) < len(AREA_LABELS) else None
        rois.append(Roi(int(col), int(row), roi_size, roi_size, area_label=label))
        logger.debug("band %d centre %.1f -> roi %s", band_idx, centre, rois[-1].to_spec())
    return rois
