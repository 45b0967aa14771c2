"""Standard optimization test functions used as sanity oracles."""

from __future__ import annotations

import numpy as np

from .optimizers.common import Bounds


def sphere(x) -> float:
    """sum(x_i^2); global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(np.dot(x, x))


def rastrigin(x) -> float:
    """10*d + sum(x_i^2 - 10*cos(2*pi*x_i)); global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(10.0 * x.size + np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x)))


def hypercube_bounds(dimension: int, half_width: float = 5.12) -> Bounds:
    """The classic [-half_width, half_width]^d test box."""
    return Bounds(np.full(dimension, -half_width), np.full(dimension, half_width))
