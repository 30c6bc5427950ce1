#!/usr/bin/env python3
"""
Speckle contrast and intensity statistics of simulated fields.

For a few seeds, prints the contrast and the Kolmogorov-Smirnov distance to
the negative-exponential law, and plots the intensity histogram of the first
field against that law for fine and coarse grain.
"""

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.models import PhasorFieldConfig
from src.speckle import exponential_ks_statistic, simulate_intensity_field, speckle_contrast

try:
    import matplotlib
    matplotlib.use('Agg')  # Use non-interactive backend
    import matplotlib.pyplot as plt
    import numpy as np
    HAS_MATPLOTLIB = True
except ImportError:
    HAS_MATPLOTLIB = False
    print("Warning: matplotlib not available. Will only print summary.")

OUTPUT = os.path.join('output', 'speckle_statistics.png')
SEEDS = (1, 2, 3)


def main():
    print(f"{'seed':>6} {'radius':>6} {'contrast':>10} {'KS':>8}")
    fields = {}
    for radius in (0, 3):
        for seed in SEEDS:
            field = simulate_intensity_field(PhasorFieldConfig(seed=seed,
                                                               correlation_radius=radius))
            fields.setdefault(radius, field)
            print(f"{seed:>6} {radius:>6} {speckle_contrast(field):>10.4f} "
                  f"{exponential_ks_statistic(field):>8.4f}")

    if not HAS_MATPLOTLIB:
        return

    fig, axes = plt.subplots(1, 2, figsize=(12, 5))
    for ax, (radius, field) in zip(axes, sorted(fields.items())):
        normalised = field.ravel() / field.mean()
        ax.hist(normalised, bins=80, range=(0, 6), density=True, alpha=0.6,
                label='Simulated intensity')
        x = np.linspace(0, 6, 200)
        ax.plot(x, np.exp(-x), 'r-', linewidth=2, label='exp(-I/<I>)')
        ax.set_title(f'Correlation radius {radius}')
        ax.set_xlabel('I / <I>')
        ax.legend()
    os.makedirs(os.path.dirname(OUTPUT), exist_ok=True)
    plt.tight_layout()
    plt.savefig(OUTPUT, dpi=150)
    print(f"Saved: {OUTPUT}")


if __name__ == "__main__":
    main()
