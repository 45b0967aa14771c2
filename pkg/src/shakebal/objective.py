"""Scalar balancing cost: polar area of the force profile, with moment-area
constraints handled by an exterior penalty.

The cost is the area the radial curve r(theta) = |p1| + |p2| encloses in
polar coordinates over one revolution, computed with the periodic rectangle
rule

    A = 1/2 * (2*pi/n) * sum_k r_k**2

which is spectrally accurate for smooth periodic integrands (the |.| kinks
of the force profile limit the practical order to ~n**-2).  The same area
reading is applied uniformly to the two moment integrals C1 (over |p3|)
and C2 (over |p4|).  Constraint violations are normalized against their
bounds and added as  penalty_weight * sum(max(0, C - C_max) / C_max);
an exterior penalty keeps infeasible points informative for the
derivative-free samplers instead of rejecting them outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .mechanism import DecisionVector, MechanismConfig, theta_grid
from .optimizers.common import Bounds, substream

TWO_PI = 2.0 * math.pi

# Constraint bounds used when a config file does not set them: half of the
# largest C1/C2 seen over 10^4 uniform samples of the default search box on
# the default mechanism (calibrate_bounds with fraction=0.5, seed=0).
DEFAULT_C1_MAX = 242365.14329605742
DEFAULT_C2_MAX = 260486.7421214862


def default_search_bounds(cfg: MechanismConfig | None = None) -> Bounds:
    """Search box for (m_1, m_2, phi_1, phi_2): masses up to 50x the known
    unbalance mass, angles over a full turn."""
    m_0 = MechanismConfig().m_0 if cfg is None else cfg.m_0
    m_hi = 50.0 * m_0
    return Bounds(np.array([0.0, 0.0, 0.0, 0.0]), np.array([m_hi, m_hi, TWO_PI, TWO_PI]))


@dataclass(frozen=True)
class ObjectiveSpec:
    """Quadrature resolution, constraint bounds, penalty weight and the
    search box for the four unknowns."""

    n_samples: int = 720
    c1_max: float = DEFAULT_C1_MAX
    c2_max: float = DEFAULT_C2_MAX
    penalty_weight: float = 1e6
    bounds: Bounds = field(default_factory=default_search_bounds)

    def __post_init__(self) -> None:
        if self.n_samples < 8:
            raise ValueError(f"n_samples must be >= 8 (got {self.n_samples})")
        if self.c1_max <= 0:
            raise ValueError(f"c1_max must be > 0 (got {self.c1_max})")
        if self.c2_max <= 0:
            raise ValueError(f"c2_max must be > 0 (got {self.c2_max})")
        if self.penalty_weight < 0:
            raise ValueError(f"penalty_weight must be >= 0 (got {self.penalty_weight})")
        if self.bounds.dimension != 4:
            raise ValueError(f"bounds must be 4-dimensional (got {self.bounds.dimension})")


@dataclass(frozen=True)
class CostBreakdown:
    """Raw polar-area cost, the two moment areas, and the penalized total."""

    raw_cost: float
    c1: float
    c2: float
    violation: float
    total: float


def polar_area(radii) -> float:
    """Area enclosed by a radial curve sampled at theta_k = 2*pi*k/n.

    Implements 1/2 * integral of r**2 d(theta) by the periodic rectangle
    rule.  Radii must be finite and non-negative.
    """
    radii = np.asarray(radii, dtype=float)
    if radii.ndim != 1 or radii.size < 1:
        raise ValueError("radii must be a non-empty 1-d array")
    if not np.all(np.isfinite(radii)):
        raise ValueError("radii must be finite")
    if np.any(radii < 0):
        raise ValueError("radii must be >= 0")
    n = radii.size
    return 0.5 * (TWO_PI / n) * float(np.dot(radii, radii))


class GridEvaluator:
    """Cost evaluator with the per-config trig work hoisted out of the loop.

    The four profiles are linear in the counterweight terms, so everything
    that does not depend on the decision vector is precomputed on the theta
    grid once; a single evaluation then only expands the two counterweight
    harmonics via the angle-addition identities.  Agreement with the plain
    mechanism functions is exercised by the test suite.
    """

    def __init__(self, cfg: MechanismConfig, spec: ObjectiveSpec):
        self.cfg = cfg
        self.spec = spec
        theta = theta_grid(spec.n_samples)
        w2 = cfg.omega**2
        t2 = theta + cfg.theta_0
        arm_2 = cfg.a_1 + cfg.a_2
        arm_3 = 2 * cfg.a_1 + cfg.a_2

        slider_2 = cfg.m_p * cfg.R * w2 * (np.cos(t2) + (cfg.R / cfg.L) * np.cos(2 * t2))
        crank_2_cos = cfg.m_c * cfg.R * w2 * np.cos(t2)
        crank_2_sin = cfg.m_c * cfg.R * w2 * np.sin(t2)
        unbal_cos = cfg.m_0 * cfg.R_0 * w2 * np.cos(theta + cfg.alpha)
        unbal_sin = cfg.m_0 * cfg.R_0 * w2 * np.sin(theta + cfg.alpha)

        self._cos = np.cos(theta)
        self._sin = np.sin(theta)
        self._base1 = (
            cfg.m_p * cfg.R * w2 * (np.cos(theta) + (cfg.R / cfg.L) * np.cos(2 * theta))
            + cfg.m_c * cfg.R * w2 * np.cos(theta)
            + unbal_cos
            + slider_2
            + crank_2_cos
        )
        self._base2 = cfg.m_c * cfg.R * w2 * np.sin(theta) + unbal_sin + crank_2_sin
        self._base3 = unbal_sin * cfg.a_1 + crank_2_sin * arm_3
        self._base4 = unbal_cos * cfg.a_1 + (slider_2 + crank_2_cos) * arm_3
        self._k1_scale = cfg.r_1 * w2
        self._k2_scale = cfg.r_2 * w2
        self._arm_2 = arm_2
        self._half_step = math.pi / spec.n_samples  # 0.5 * (2*pi/n)

    def profiles(self, dv: DecisionVector):
        """(p1, p2, p3, p4) arrays over the grid for one counterweight choice."""
        k1 = dv.m_1 * self._k1_scale
        k2 = dv.m_2 * self._k2_scale
        cos_1 = self._cos * math.cos(dv.phi_1) - self._sin * math.sin(dv.phi_1)
        sin_1 = self._sin * math.cos(dv.phi_1) + self._cos * math.sin(dv.phi_1)
        cos_2 = self._cos * math.cos(dv.phi_2) - self._sin * math.sin(dv.phi_2)
        sin_2 = self._sin * math.cos(dv.phi_2) + self._cos * math.sin(dv.phi_2)
        p1 = self._base1 + k1 * cos_1 + k2 * cos_2
        p2 = self._base2 + k1 * sin_1 + k2 * sin_2
        p3 = self._base3 + k1 * sin_1 * self.cfg.a_1 + k2 * sin_2 * self._arm_2
        p4 = self._base4 + k1 * cos_1 * self.cfg.a_1 + k2 * cos_2 * self._arm_2
        return p1, p2, p3, p4

    def breakdown(self, dv: DecisionVector) -> CostBreakdown:
        p1, p2, p3, p4 = self.profiles(dv)
        r = np.abs(p1) + np.abs(p2)
        h = self._half_step
        raw = h * float(np.dot(r, r))
        c1 = h * float(np.dot(p3, p3))  # |p3|**2 == p3**2
        c2 = h * float(np.dot(p4, p4))
        violation = max(0.0, c1 - self.spec.c1_max) / self.spec.c1_max + max(
            0.0, c2 - self.spec.c2_max
        ) / self.spec.c2_max
        total = raw + self.spec.penalty_weight * violation
        return CostBreakdown(raw_cost=raw, c1=c1, c2=c2, violation=violation, total=total)

    def total(self, x: np.ndarray) -> float:
        return self.breakdown(DecisionVector.from_array(x)).total


def evaluate(cfg: MechanismConfig, dv: DecisionVector, spec: ObjectiveSpec) -> CostBreakdown:
    """Full cost breakdown of one counterweight choice."""
    return GridEvaluator(cfg, spec).breakdown(dv)


def make_objective(cfg: MechanismConfig, spec: ObjectiveSpec):
    """Scalar callback x -> penalized total for the optimizers, with the
    grid precomputation shared across calls."""
    return GridEvaluator(cfg, spec).total


def calibrate_bounds(
    cfg: MechanismConfig,
    spec_bounds: Bounds,
    n_random: int,
    fraction: float = 0.5,
    seed: int = 0,
    n_samples: int = 720,
) -> tuple[float, float]:
    """Constraint bounds from the observed C1/C2 maxima of a random search.

    Samples ``n_random`` decision vectors uniformly in ``spec_bounds`` and
    returns (fraction * max C1, fraction * max C2).  A few thousand samples
    make the maxima stable across seeds; n_random >= 100 is a sensible
    floor.  Deterministic per seed (own Philox stream).
    """
    if n_random < 1:
        raise ValueError(f"n_random must be >= 1 (got {n_random})")
    if not (0.0 < fraction <= 1.0):
        raise ValueError(f"fraction must be in (0, 1] (got {fraction})")
    # penalty/bound fields are irrelevant here; only the grid is used
    probe = ObjectiveSpec(n_samples=n_samples, c1_max=1.0, c2_max=1.0, bounds=spec_bounds)
    evaluator = GridEvaluator(cfg, probe)
    rng = substream(seed, 0)
    c1_worst = 0.0
    c2_worst = 0.0
    for _ in range(n_random):
        dv = DecisionVector.from_array(spec_bounds.lerp(rng.random(4)))
        b = evaluator.breakdown(dv)
        c1_worst = max(c1_worst, b.c1)
        c2_worst = max(c2_worst, b.c2)
    return fraction * c1_worst, fraction * c2_worst
