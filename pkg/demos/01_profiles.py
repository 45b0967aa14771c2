"""Shaking force/moment profiles of the default mechanism.

Walks the four profiles p1..p4 over one revolution, first for the
unbalanced machine, then with the counterweight that exactly cancels the
disk-2 unbalance (same plane, same m*r, half a turn away).
"""

import math

import numpy as np

from shakebal import DecisionVector, MechanismConfig, sample_profile

cfg = MechanismConfig()
print("mechanism:", cfg)

unbalanced = sample_profile(cfg, DecisionVector.zero(), 360)
p1 = np.array([s.p1 for s in unbalanced])
p2 = np.array([s.p2 for s in unbalanced])
print(f"\nunbalanced, over one revolution (N / N*m):")
print(f"  |p1| peak {np.abs(p1).max():9.2f}   |p2| peak {np.abs(p2).max():9.2f}")
print(f"  |p3| peak {max(abs(s.p3) for s in unbalanced):9.2f}"
      f"   |p4| peak {max(abs(s.p4) for s in unbalanced):9.2f}")

# cancel the unbalance m_0*R_0 with m_1*r_1 in antiphase on the same disk
m_1 = cfg.m_0 * cfg.R_0 / cfg.r_1
antiphase = DecisionVector(m_1=m_1, m_2=0.0, phi_1=cfg.alpha + math.pi, phi_2=0.0)
print(f"\nantiphase counterweight: m_1 = {m_1:.3f} at phi_1 = {antiphase.phi_1:.3f} rad")

balanced = sample_profile(cfg, antiphase, 360)
print("after balancing (slider/crank forces remain, the unbalance is gone):")
print(f"  |p1| peak {max(abs(s.p1) for s in balanced):9.2f}"
      f"   |p2| peak {max(abs(s.p2) for s in balanced):9.2f}")
print(f"  |p3| peak {max(abs(s.p3) for s in balanced):9.2f}"
      f"   |p4| peak {max(abs(s.p4) for s in balanced):9.2f}")
