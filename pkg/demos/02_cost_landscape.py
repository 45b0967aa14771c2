"""The polar-area cost as a function of the counterweight parameters.

Sweeps one decision variable at a time around the analytic optimum of the
crank/slider-free mechanism to show what the optimizers are descending.
"""

import math

import numpy as np

from shakebal import DecisionVector, MechanismConfig, ObjectiveSpec, evaluate

cfg = MechanismConfig(m_c=0.0, m_p=0.0)  # only the unbalance mass remains
spec = ObjectiveSpec()

best_m1 = cfg.m_0 * cfg.R_0 / cfg.r_1
best_phi1 = cfg.alpha + math.pi
print(f"analytic optimum: m_1 = {best_m1:.3f}, phi_1 = {best_phi1:.3f} rad, cost 0")

print("\nsweep m_1 (phi_1 held at the optimum):")
for m_1 in np.linspace(0.0, 2.5 * best_m1, 6):
    b = evaluate(cfg, DecisionVector(m_1, 0.0, best_phi1, 0.0), spec)
    print(f"  m_1 = {m_1:6.3f}   f = {b.raw_cost:12.4f}   total = {b.total:12.4f}")

print("\nsweep phi_1 (m_1 held at the optimum):")
for phi_1 in np.linspace(0.0, 2 * math.pi, 9):
    b = evaluate(cfg, DecisionVector(best_m1, 0.0, phi_1, 0.0), spec)
    print(f"  phi_1 = {phi_1:6.3f}   f = {b.raw_cost:12.4f}")

print("\nthe cost is 2*pi-periodic in the angles and quartic in omega:")
fast = MechanismConfig(m_c=0.0, m_p=0.0, omega=2 * cfg.omega)
dv = DecisionVector(best_m1, 0.0, 1.0, 0.0)
ratio = evaluate(fast, dv, spec).raw_cost / evaluate(cfg, dv, spec).raw_cost
print(f"  f(2*omega) / f(omega) = {ratio:.1f}  (= 2**4)")
