#!/usr/bin/env python3
"""
Plot a monitoring run over the synthetic 20-frame stream.

Trains a standardized 1-NN on the published sample dataset, runs the
debounced detection loop over the perturbed stream and draws the Levine 3x3
series with its polynomial trend, the class-mean midpoint and the committed
event.
"""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.classify import knn_train
from src.features import FIXTURE_ATTRIBUTES, table3_fixture
from src.monitor import (class_midpoint, fit_polynomial_trend, locate_transition_from_trend,
                         run_detection_loop)
from src.utils import DataGenerator

try:
    import matplotlib
    matplotlib.use('Agg')  # Use non-interactive backend
    import matplotlib.pyplot as plt
    import numpy as np
    HAS_MATPLOTLIB = True
except ImportError:
    HAS_MATPLOTLIB = False
    print("Warning: matplotlib not available. Will only print summary.")

OUTPUT = os.path.join('output', 'monitoring_run.png')
ATTRIBUTE = FIXTURE_ATTRIBUTES[1]
DEGREE = 3


def main():
    fixture = table3_fixture()
    model = knn_train(fixture, k=1, standardized=True)
    stream = DataGenerator.perturbed_fixture_stream(seed=0)
    result = run_detection_loop(stream, model, debounce=3)

    series = result.series(ATTRIBUTE)
    trend = fit_polynomial_trend(series, DEGREE, attribute_name=ATTRIBUTE)
    threshold = class_midpoint(fixture, ATTRIBUTE)
    crossing = locate_transition_from_trend(trend, threshold)

    print("=" * 60)
    print("MONITORING RUN")
    print("=" * 60)
    print("Labels: " + " ".join(str(label) for label in result.labels))
    for event in result.events:
        print(f"Event at frame {event.frame_index} (t={event.timestamp:.0f}s): "
              f"{event.from_state} -> {event.to_state}")
    if crossing is not None:
        print(f"Trend crosses {threshold:.1f} at t={crossing:.0f}s")

    if not HAS_MATPLOTLIB:
        return

    times = np.array([t for t, _ in series])
    values = np.array([v for _, v in series])
    dense = np.linspace(times[0], times[-1], 400)

    fig, ax = plt.subplots(figsize=(10, 6))
    ax.plot(times / 60.0, values, 'ko', markersize=6, label=f'{ATTRIBUTE} per frame')
    ax.plot(dense / 60.0, trend(dense), 'b-', linewidth=2,
            label=f'Degree {DEGREE} polynomial trend')
    ax.axhline(threshold, color='gray', linestyle='--', label='Class-mean midpoint')
    for event in result.events:
        ax.axvline(event.timestamp / 60.0, color='red', linewidth=2,
                   label=f'Detected {event.to_state}')
    ax.set_xlabel('Time (minutes)', fontsize=12)
    ax.set_ylabel(ATTRIBUTE, fontsize=12)
    ax.set_title('Laser speckle texture during primary drying', fontsize=14, fontweight='bold')
    ax.legend(loc='upper right')
    ax.grid(True, alpha=0.3)

    os.makedirs(os.path.dirname(OUTPUT), exist_ok=True)
    plt.tight_layout()
    plt.savefig(OUTPUT, dpi=150)
    print(f"Saved: {OUTPUT}")


if __name__ == "__main__":
    main()
