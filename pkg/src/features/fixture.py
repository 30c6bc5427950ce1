"""
Published sample texture dataset.

Twenty single-area rows (10 normal, 10 micro-collapse) of the nine texture
measures. The source does not say which diffusion band the values came from,
so the attributes carry the area tag 'U' (unspecified).
"""

from ..models import MICRO_COLLAPSE, NORMAL, Dataset, attribute_name
from ..texture import MEASURE_LAYOUT

FIXTURE_AREA = 'U'

FIXTURE_ATTRIBUTES = tuple(attribute_name(m, k, FIXTURE_AREA) for m, k in MEASURE_LAYOUT)

# Russ3, Levine3, Sigma3, Skewness3, Russ5, Levine5, Sigma5, Skewness5, StdDev3
NORMAL_ROWS = (
    (378, 6002, 77.47, 0.5, 883, 7621, 87.3, 0.47, 69.95),
    (385, 5233, 72.34, 0.5, 612, 6580, 81.12, 0.48, 65.29),
    (247, 5215, 72.21, 0.46, 491, 6526, 80.78, 0.44, 65.31),
    (337, 5726, 75.67, 0.5, 606, 7273, 85.28, 0.49, 68.62),
    (370, 5634, 75.06, 0.55, 727, 7110, 84.32, 0.53, 67.79),
    (398, 5445, 73.79, 0.51, 607, 6841, 82.71, 0.49, 67.07),
    (340, 5800, 76.16, 0.46, 646, 7379, 85.9, 0.44, 68.61),
    (386, 5390, 73.42, 0.48, 670, 6865, 82.86, 0.47, 66.72),
    (329, 3788, 61.55, 0.59, 532, 4861, 69.72, 0.57, 55.88),
    (397, 6344, 79.65, 0.46, 655, 8005, 89.47, 0.44, 71.88),
)

MICRO_COLLAPSE_ROWS = (
    (343, 3266, 57.15, 0.56, 511, 4138, 64.33, 0.53, 51.3),
    (334, 3499, 59.15, 0.58, 498, 4392, 66.27, 0.56, 52.88),
    (362, 4194, 64.76, 0.4, 501, 5226, 72.29, 0.36, 57.98),
    (327, 3112, 55.79, 0.51, 471, 3888, 62.35, 0.48, 49.88),
    (316, 4201, 64.82, 0.5, 537, 5288, 72.72, 0.47, 58.2),
    (294, 2977, 54.56, 0.54, 511, 3755, 61.28, 0.52, 48.9),
    (325, 3770, 61.4, 0.53, 530, 4723, 68.72, 0.49, 55.04),
    (346, 3442, 58.67, 0.42, 512, 4273, 65.37, 0.38, 52.54),
    (275, 2884, 53.7, 0.38, 438, 3593, 59.94, 0.35, 47.95),
    (346, 3629, 60.24, 0.32, 495, 4542, 67.39, 0.28, 53.95),
)


def table3_fixture() -> Dataset:
    """The 20 published rows, normal first, then micro-collapse."""
    rows = NORMAL_ROWS + MICRO_COLLAPSE_ROWS
    labels = (NORMAL,) * len(NORMAL_ROWS) + (MICRO_COLLAPSE,) * len(MICRO_COLLAPSE_ROWS)
    return Dataset.from_matrix(rows, labels, FIXTURE_ATTRIBUTES)
