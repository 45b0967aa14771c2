"""Binary-coded genetic minimizer: rank roulette, multipoint crossover,
per-bit mutation, elitism.

Each variable is a fixed-point code of ``bits_per_variable`` bits mapping
[lower_j, upper_j] linearly onto 0 .. 2**bits - 1 (all-zero bits decode to
the lower bound, all-one bits to the upper bound); a chromosome is the
concatenation over dimensions.  Selection is roulette on linear rank
weights (raw-fitness roulette is ill-posed for minimization), the best
``elitism`` individuals are copied unchanged, and the whole population is
decoded and evaluated every generation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .common import (
    INIT_STREAM,
    SEARCH_STREAM,
    Bounds,
    RunRecorder,
    RunResult,
    TrackedObjective,
    substream,
)


@dataclass(frozen=True)
class BgaParams:
    population: int = 50
    iterations: int = 300
    bits_per_variable: int = 16
    crossover_points: int = 2
    crossover_prob: float = 0.9
    mutation_prob_per_bit: float | None = None  # None -> 1/(bits*d) at run time
    elitism: int = 1

    def __post_init__(self) -> None:
        if self.population < 2 or self.population % 2 != 0:
            raise ValueError(f"population must be even and >= 2 (got {self.population})")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1 (got {self.iterations})")
        if not (8 <= self.bits_per_variable <= 32):
            raise ValueError(f"bits_per_variable must be in [8, 32] (got {self.bits_per_variable})")
        if self.crossover_points < 1:
            raise ValueError(f"crossover_points must be >= 1 (got {self.crossover_points})")
        if not (0.0 <= self.crossover_prob <= 1.0):
            raise ValueError(f"crossover_prob must be in [0, 1] (got {self.crossover_prob})")
        if self.mutation_prob_per_bit is not None and not (0.0 <= self.mutation_prob_per_bit <= 1.0):
            raise ValueError(
                f"mutation_prob_per_bit must be in [0, 1] (got {self.mutation_prob_per_bit})"
            )
        if self.elitism < 0:
            raise ValueError(f"elitism must be >= 0 (got {self.elitism})")


def decode_bits(bits: np.ndarray, bounds: Bounds, bits_per_variable: int) -> np.ndarray:
    """Decode one chromosome (bool array, MSB first per variable) to a point."""
    nb = bits_per_variable
    scale = float((1 << nb) - 1)
    weights = (2.0 ** np.arange(nb - 1, -1, -1))
    ints = bits.reshape(bounds.dimension, nb).astype(float) @ weights
    return bounds.lower + ints / scale * bounds.width


def encode_point(x: np.ndarray, bounds: Bounds, bits_per_variable: int) -> np.ndarray:
    """Encode a point to the nearest chromosome (inverse of decode_bits)."""
    nb = bits_per_variable
    scale = (1 << nb) - 1
    frac = (np.asarray(x, dtype=float) - bounds.lower) / np.where(bounds.width > 0, bounds.width, 1.0)
    ints = np.clip(np.rint(frac * scale).astype(np.int64), 0, scale)
    bits = np.zeros(bounds.dimension * nb, dtype=bool)
    for j, iv in enumerate(ints):
        for b in range(nb):
            bits[j * nb + b] = (iv >> (nb - 1 - b)) & 1
    return bits


def rank_probabilities(costs: np.ndarray) -> np.ndarray:
    """Linear rank weights: the best individual gets weight N, the worst 1."""
    n = len(costs)
    order = np.argsort(costs, kind="stable")
    weights = np.empty(n, dtype=float)
    weights[order] = np.arange(n, 0, -1)
    return weights / weights.sum()


def multipoint_crossover(
    parent_a: np.ndarray, parent_b: np.ndarray, cut_points: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Swap alternate segments between two chromosomes at the given cuts."""
    child_a = parent_a.copy()
    child_b = parent_b.copy()
    length = parent_a.size
    swap = False
    prev = 0
    for cut in list(np.sort(cut_points)) + [length]:
        if swap:
            child_a[prev:cut] = parent_b[prev:cut]
            child_b[prev:cut] = parent_a[prev:cut]
        swap = not swap
        prev = cut
    return child_a, child_b


def optimize_bga(
    objective,
    bounds: Bounds,
    params: BgaParams,
    seed: int,
    init_points: np.ndarray | None = None,
) -> RunResult:
    """Minimize ``objective`` over ``bounds`` with the binary GA.

    ``init_points`` (population, d) seeds the first generation through the
    encoder instead of random bits (testing hook).
    """
    pop, d = params.population, bounds.dimension
    nb = params.bits_per_variable
    length = nb * d
    if params.crossover_points > length - 1:
        raise ValueError(
            f"crossover_points must be <= chromosome length - 1 ({length - 1}), "
            f"got {params.crossover_points}"
        )
    p_mut = params.mutation_prob_per_bit
    if p_mut is None:
        p_mut = 1.0 / length

    rng_init = substream(seed, INIT_STREAM)
    rng = substream(seed, SEARCH_STREAM)

    tracked = TrackedObjective(objective)
    recorder = RunRecorder(tracked)

    if init_points is None:
        bits = rng_init.random((pop, length)) < 0.5
    else:
        bits = np.array(
            [encode_point(p, bounds, nb) for p in np.asarray(init_points, dtype=float)]
        ).reshape(pop, length)
    points = np.array([decode_bits(b, bounds, nb) for b in bits])
    costs = np.array([tracked(p) for p in points])
    recorder.checkpoint_initial()

    cut_positions = np.arange(1, length)
    for _ in range(params.iterations):
        probs = rank_probabilities(costs)
        order = np.argsort(costs, kind="stable")
        next_bits = [bits[i].copy() for i in order[: params.elitism]]

        while len(next_bits) < pop:
            ia, ib = rng.choice(pop, size=2, p=probs)
            child_a, child_b = bits[ia].copy(), bits[ib].copy()
            if rng.random() < params.crossover_prob:
                cuts = rng.choice(cut_positions, size=params.crossover_points, replace=False)
                child_a, child_b = multipoint_crossover(bits[ia], bits[ib], cuts)
            child_a ^= rng.random(length) < p_mut
            child_b ^= rng.random(length) < p_mut
            next_bits.append(child_a)
            if len(next_bits) < pop:
                next_bits.append(child_b)

        bits = np.array(next_bits)
        points = np.array([decode_bits(b, bounds, nb) for b in bits])
        costs = np.array([tracked(p) for p in points])
        recorder.checkpoint_iteration()

    return recorder.finish("bga", seed)
