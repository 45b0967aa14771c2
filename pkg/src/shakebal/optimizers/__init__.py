"""Four seeded, bounded, derivative-free minimizers over one callback interface."""

from .abc_colony import AbcParams, fitness_from_cost, optimize_abc, selection_probabilities
from .bga import BgaParams, decode_bits, encode_point, optimize_bga
from .common import Bounds, NonFiniteObjectiveError, RunResult, substream
from .hgapso import HgapsoParams, elite_count, optimize_hgapso
from .pso import PsoParams, inertia_weight, optimize_pso

OPTIMIZERS = {
    "pso": optimize_pso,
    "abc": optimize_abc,
    "bga": optimize_bga,
    "hgapso": optimize_hgapso,
}

ALGORITHM_NAMES = tuple(OPTIMIZERS)

__all__ = [
    "AbcParams",
    "ALGORITHM_NAMES",
    "BgaParams",
    "Bounds",
    "HgapsoParams",
    "NonFiniteObjectiveError",
    "OPTIMIZERS",
    "PsoParams",
    "RunResult",
    "decode_bits",
    "elite_count",
    "encode_point",
    "fitness_from_cost",
    "inertia_weight",
    "optimize_abc",
    "optimize_bga",
    "optimize_hgapso",
    "optimize_pso",
    "selection_probabilities",
    "substream",
]
