"""Hybrid GA/PSO minimizer (breeding-swarm style).

Each generation the population is ranked by cost; the top
``ceil(phi * population)`` elites receive one particle-swarm update
(inertia-weight rule with a persistent per-individual velocity and
personal best, and the current population best standing in for the swarm
best) and pass to the next generation directly.  The remaining slots are
filled by GA offspring bred from the whole current population with the
binary operators (encode, rank roulette, multipoint crossover, per-bit
mutation, decode).  Offspring start with zero velocity and themselves as
personal best.

With phi = 1 every individual is an elite and the dynamics degenerate to
plain PSO; the random-draw order still differs from ``optimize_pso`` (the
ranking permutes particle processing and the swarm attractor is the
population best rather than the all-time best), so traces agree
qualitatively rather than bitwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bga import BgaParams, decode_bits, encode_point, multipoint_crossover, rank_probabilities
from .common import (
    INIT_STREAM,
    SEARCH_STREAM,
    Bounds,
    RunRecorder,
    RunResult,
    TrackedObjective,
    substream,
)
from .pso import PsoParams, inertia_weight


@dataclass(frozen=True)
class HgapsoParams:
    population: int = 50
    iterations: int = 300
    breeding_ratio: float = 0.5
    # operator settings reused from the plain algorithms; their population
    # and iteration counts are ignored here
    pso: PsoParams = field(default_factory=PsoParams)
    bga: BgaParams = field(default_factory=BgaParams)

    def __post_init__(self) -> None:
        if self.population < 2:
            raise ValueError(f"population must be >= 2 (got {self.population})")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1 (got {self.iterations})")
        if not (0.0 < self.breeding_ratio <= 1.0):
            raise ValueError(f"breeding_ratio must be in (0, 1] (got {self.breeding_ratio})")


def elite_count(breeding_ratio: float, population: int) -> int:
    """Number of PSO-enhanced elites per generation: ceil(phi * population)."""
    return min(population, math.ceil(breeding_ratio * population))


def optimize_hgapso(objective, bounds: Bounds, params: HgapsoParams, seed: int) -> RunResult:
    """Minimize ``objective`` over ``bounds`` with the GA/PSO hybrid."""
    pop, d = params.population, bounds.dimension
    nb = params.bga.bits_per_variable
    length = nb * d
    p_mut = params.bga.mutation_prob_per_bit
    if p_mut is None:
        p_mut = 1.0 / length
    v_max = params.pso.v_max_fraction * bounds.width
    n_elite = elite_count(params.breeding_ratio, pop)
    # the inertia schedule runs over this hybrid's own generation count
    schedule = PsoParams(
        population=pop,
        iterations=params.iterations,
        c1=params.pso.c1,
        c2=params.pso.c2,
        w_max=params.pso.w_max,
        w_min=params.pso.w_min,
        v_max_fraction=params.pso.v_max_fraction,
    )

    rng_init = substream(seed, INIT_STREAM)
    rng = substream(seed, SEARCH_STREAM)

    tracked = TrackedObjective(objective)
    recorder = RunRecorder(tracked)

    x = bounds.lerp(rng_init.random((pop, d)))
    v = (rng_init.random((pop, d)) * 2.0 - 1.0) * v_max
    f = np.array([tracked(xi) for xi in x])
    pbest_x = x.copy()
    pbest_f = f.copy()
    recorder.checkpoint_initial()

    cut_positions = np.arange(1, length)
    for t in range(1, params.iterations + 1):
        w = inertia_weight(schedule, t)
        order = np.argsort(f, kind="stable")
        swarm_best = x[order[0]].copy()
        probs = rank_probabilities(f)

        new_x = np.empty_like(x)
        new_v = np.zeros_like(v)
        new_pbest_x = np.empty_like(pbest_x)
        new_pbest_f = np.empty(pop)
        slot = 0

        for i in order[:n_elite]:
            u1 = rng.random(d)
            u2 = rng.random(d)
            vi = w * v[i] + params.pso.c1 * u1 * (pbest_x[i] - x[i]) + params.pso.c2 * u2 * (
                swarm_best - x[i]
            )
            vi = np.clip(vi, -v_max, v_max)
            new_x[slot] = bounds.clip(x[i] + vi)
            new_v[slot] = vi
            new_pbest_x[slot] = pbest_x[i]
            new_pbest_f[slot] = pbest_f[i]
            slot += 1

        while slot < pop:
            ia, ib = rng.choice(pop, size=2, p=probs)
            bits_a = encode_point(x[ia], bounds, nb)
            bits_b = encode_point(x[ib], bounds, nb)
            if rng.random() < params.bga.crossover_prob:
                cuts = rng.choice(cut_positions, size=params.bga.crossover_points, replace=False)
                bits_a, bits_b = multipoint_crossover(bits_a, bits_b, cuts)
            bits_a ^= rng.random(length) < p_mut
            bits_b ^= rng.random(length) < p_mut
            for bits in (bits_a, bits_b):
                if slot >= pop:
                    break
                child = decode_bits(bits, bounds, nb)
                new_x[slot] = child
                new_pbest_x[slot] = child
                new_pbest_f[slot] = np.inf
                slot += 1

        x, v, pbest_x, pbest_f = new_x, new_v, new_pbest_x, new_pbest_f
        f = np.array([tracked(xi) for xi in x])
        improved = f < pbest_f
        pbest_x[improved] = x[improved]
        pbest_f[improved] = f[improved]
        recorder.checkpoint_iteration()

    return recorder.finish("hgapso", seed)
