"""
Synthetic data for speckle monitoring runs
"""

from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from ..features.fixture import FIXTURE_ATTRIBUTES, MICRO_COLLAPSE_ROWS, NORMAL_ROWS
from ..imaging import save_image
from ..models import (DRY_LAYER_A, DRY_LAYER_B, MICRO_COLLAPSE, NORMAL, Dataset,
                      FeatureVector, FrameSample, GrayImage, PhasorFieldConfig)
from ..speckle import simulate_speckle

# class centroid = fixture class mean row * factor
FOUR_CLASS_CENTROIDS = (
    (NORMAL, NORMAL_ROWS, 1.0),
    (MICRO_COLLAPSE, MICRO_COLLAPSE_ROWS, 1.0),
    (DRY_LAYER_A, NORMAL_ROWS, 1.3),
    (DRY_LAYER_B, MICRO_COLLAPSE_ROWS, 0.7),
)


class DataGenerator:
    """
    Generates reproducible streams, datasets and frames for tests and demos.
    """

    @staticmethod
    def perturbed_fixture_stream(seed: int = 0, perturbation: float = 0.02,
                                 cadence: float = 72.0) -> List[FrameSample]:
        """
        Twenty-frame vector stream built from the published rows.

        Frame i takes normal row i for i < 10 and micro-collapse row i - 10
        otherwise, each attribute scaled by an independent uniform factor in
        [1 - perturbation, 1 + perturbation].

        Args:
            seed: Random seed for reproducibility
            perturbation: Relative half-width of the scaling factor
            cadence: Seconds between frames

        Returns:
            List of FrameSample with inline feature vectors
        """
        rng = np.random.default_rng(seed)
        rows = NORMAL_ROWS + MICRO_COLLAPSE_ROWS
        stream = []
        for i, row in enumerate(rows):
            factors = rng.uniform(1.0 - perturbation, 1.0 + perturbation, size=len(row))
            values = tuple(float(v) for v in np.asarray(row, dtype=np.float64) * factors)
            stream.append(FrameSample(i, i * cadence, FeatureVector(values, FIXTURE_ATTRIBUTES)))
        return stream

    @staticmethod
    def four_class_dataset(rows_per_class: int = 15, seed: int = 0,
                           spread: float = 0.05) -> Dataset:
        """
        Seeded dataset over normal, micro-collapse and two dry-layer classes.

        Args:
            rows_per_class: Rows drawn per class
            seed: Random seed
            spread: Relative half-width of the per-attribute scaling noise

        Returns:
            Dataset with fixture attribute names, classes in centroid order
        """
        if rows_per_class < 2:
            raise ValueError(f"rows_per_class must be >= 2, got {rows_per_class}")
        rng = np.random.default_rng(seed)
        matrix = []
        labels = []
        for label, source_rows, factor in FOUR_CLASS_CENTROIDS:
            centroid = np.mean(np.asarray(source_rows, dtype=np.float64), axis=0) * factor
            noise = rng.uniform(1.0 - spread, 1.0 + spread,
                                size=(rows_per_class, centroid.size))
            matrix.extend(centroid * noise)
            labels.extend([label] * rows_per_class)
        return Dataset.from_matrix(np.asarray(matrix), labels, FIXTURE_ATTRIBUTES)

    @staticmethod
    def ring_image(size: int = 160,
                   levels: Tuple[int, int, int, int] = (250, 200, 150, 100)) -> GrayImage:
        """
        Concentric square bands of near-equal area.

        Chebyshev radius r from the centre: r < s/4 gets levels[0], then bands
        bounded at s/4*sqrt(2), s/4*sqrt(3) and the border.
        """
        centre = (size - 1) / 2.0
        coords = np.abs(np.arange(size) - centre)
        radius = np.maximum(coords[:, None], coords[None, :])
        quarter = size / 4.0
        bounds = (quarter, quarter * np.sqrt(2.0), quarter * np.sqrt(3.0))
        pixels = np.full((size, size), levels[3], dtype=np.uint8)
        for bound, level in zip(reversed(bounds), reversed(levels[:3])):
            pixels[radius < bound] = level
        return GrayImage.from_array(pixels)

    @staticmethod
    def speckle_frames(n_frames: int = 20, change_at: int = 10, size: int = 64,
                       n_phasors: int = 50, fine_radius: int = 0, coarse_radius: int = 3,
                       seed: int = 0) -> List[GrayImage]:
        """
        Simulated frames whose grain coarsens from frame `change_at` on.

        Frame i uses seed + i and correlation radius fine_radius before the
        change and coarse_radius after it.
        """
        frames = []
        for i in range(n_frames):
            radius = fine_radius if i < change_at else coarse_radius
            cfg = PhasorFieldConfig(width=size, height=size, n_phasors=n_phasors,
                                    seed=seed + i, correlation_radius=radius)
            frames.append(simulate_speckle(cfg))
        return frames

    @staticmethod
    def save_frames(frames: Sequence[GrayImage], directory: Union[str, Path],
                    prefix: str = 'frame') -> str:
        """
        Write frames as numbered PGM files.

        Returns:
            Glob pattern matching the written files in frame order
        """
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        for i, frame in enumerate(frames):
            save_image(frame, out / f"{prefix}_{i:04d}.pgm")
        return str(out / f"{prefix}_*.pgm")
