"""One seeded balancing run, end to end.

Builds the penalized objective for the default mechanism, minimizes it
with PSO, and reports the solution next to the unbalanced baseline.
"""

from shakebal import (
    DecisionVector,
    MechanismConfig,
    ObjectiveSpec,
    PsoParams,
    evaluate,
    make_objective,
    optimize_pso,
)

cfg = MechanismConfig()
spec = ObjectiveSpec()
objective = make_objective(cfg, spec)

baseline = evaluate(cfg, DecisionVector.zero(), spec)
print(f"unbalanced cost: {baseline.total:.2f}  (c1 {baseline.c1:.1f}, c2 {baseline.c2:.1f})")

result = optimize_pso(objective, spec.bounds, PsoParams(population=50, iterations=300), seed=1)
dv = DecisionVector.from_array(result.best_x)
best = evaluate(cfg, dv, spec)

print(f"\npso, seed 1, 300 iterations, {result.evaluations} evaluations, "
      f"{result.wall_time:.2f}s")
print(f"  m_1 = {dv.m_1:.4f}   phi_1 = {dv.phi_1:.4f} rad")
print(f"  m_2 = {dv.m_2:.4f}   phi_2 = {dv.phi_2:.4f} rad")
print(f"  cost {best.total:.4f}  ({100 * best.total / baseline.total:.2f}% of unbalanced)")
print(f"  constraints: c1 {best.c1:.1f} <= {spec.c1_max:.0f}, "
      f"c2 {best.c2:.1f} <= {spec.c2_max:.0f}")

print("\nbest-so-far trace (every 30th iteration):")
for it in range(0, len(result.trace), 30):
    print(f"  iter {it:4d}   best {result.trace[it]:12.4f}")
