"""Shared pieces of the four derivative-free minimizers.

Every optimizer takes a scalar objective callback, a box, a params
dataclass and a seed, and returns a :class:`RunResult`.  Randomness comes
from counter-based Philox streams derived per run and per phase, so a run
is bit-for-bit reproducible from its seed and adding a new random-consuming
phase cannot perturb the existing draw sequence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

# spawn-key paths for the per-run sub-streams
INIT_STREAM = 0
SEARCH_STREAM = 1


def substream(seed: int, *path: int) -> np.random.Generator:
    """Independent Philox stream for one phase of one seeded run."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=path)))


class NonFiniteObjectiveError(RuntimeError):
    """The objective returned nan/inf; carries the offending point."""

    def __init__(self, point: np.ndarray, value: float):
        self.point = np.asarray(point, dtype=float).copy()
        self.value = value
        super().__init__(f"objective returned non-finite value {value!r} at point {self.point.tolist()}")


@dataclass
class Bounds:
    """Per-dimension box constraints (lower_j <= upper_j)."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        self.lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        self.upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if self.lower.shape != self.upper.shape or self.lower.ndim != 1:
            raise ValueError(
                f"lower/upper must be 1-d arrays of equal length "
                f"(got {self.lower.shape} and {self.upper.shape})"
            )
        if not np.all(np.isfinite(self.lower)) or not np.all(np.isfinite(self.upper)):
            raise ValueError("bounds must be finite")
        if np.any(self.lower > self.upper):
            raise ValueError(f"lower must be <= upper per dimension (got {self.lower} > {self.upper})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bounds):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    @property
    def dimension(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def lerp(self, u) -> np.ndarray:
        """Map u in [0, 1]^d onto the box: lower + u*(upper - lower)."""
        return self.lower + np.asarray(u, dtype=float) * self.width

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass
class RunResult:
    """Outcome of one seeded optimizer run.

    trace       best-so-far objective value: entry 0 after the initial
                population evaluation, then one entry per iteration
                (length = iterations + 1, non-increasing)
    time_trace  cumulative wall seconds at the end of each iteration
                (length = iterations)
    """

    algorithm: str
    seed: int
    best_x: np.ndarray
    best_f: float
    trace: np.ndarray
    evaluations: int
    wall_time: float
    time_trace: np.ndarray = field(default_factory=lambda: np.empty(0))


class TrackedObjective:
    """Wraps the raw callback: counts calls, keeps the incumbent, rejects
    non-finite values with a diagnostic naming the offending point."""

    __slots__ = ("fn", "evaluations", "best_f", "best_x")

    def __init__(self, fn):
        self.fn = fn
        self.evaluations = 0
        self.best_f = np.inf
        self.best_x = None

    def __call__(self, x: np.ndarray) -> float:
        value = float(self.fn(x))
        if not np.isfinite(value):
            raise NonFiniteObjectiveError(x, value)
        self.evaluations += 1
        if value < self.best_f:
            self.best_f = value
            self.best_x = np.array(x, dtype=float)
        return value


class RunRecorder:
    """Collects the best-so-far and timing traces during a run."""

    def __init__(self, tracked: TrackedObjective):
        self.tracked = tracked
        self.trace: list[float] = []
        self.time_trace: list[float] = []
        self._t0 = time.perf_counter()

    def checkpoint_initial(self) -> None:
        self.trace.append(self.tracked.best_f)

    def checkpoint_iteration(self) -> None:
        self.trace.append(self.tracked.best_f)
        self.time_trace.append(time.perf_counter() - self._t0)

    def finish(self, algorithm: str, seed: int) -> RunResult:
        return RunResult(
            algorithm=algorithm,
            seed=seed,
            best_x=np.array(self.tracked.best_x, dtype=float),
            best_f=self.tracked.best_f,
            trace=np.array(self.trace),
            evaluations=self.tracked.evaluations,
            wall_time=time.perf_counter() - self._t0,
            time_trace=np.array(self.time_trace),
        )
