"""Theta-function series, the constant V_0 and the elliptic Calogero-Sutherland limit.

Run: python demos/03_theta_and_ecs.py
"""

from fractions import Fraction

from nsr.operators import TwistedSeries, ecs_apply, eigen_extract
from nsr.qseries import Cyclic, arc, theta_expand, theta_triple_product, v0_coefficients, v_potential_pseries
from nsr.scalar import TAU
from nsr.specialfn import f_ecs, psi0

coords = Cyclic(3)
w = arc(3, 1, 2)
print("Theta as a product equals Theta as a sum:",
      theta_expand(w, coords, 8) == theta_triple_product(w, coords, 8))

print("V_0 coefficients:", [int(c) for c in v0_coefficients(7)])
print("V(pz) = V(z) with z symbolic:", v_potential_pseries(5, TAU, 1) == v_potential_pseries(5, TAU))

# non-stationary eCS: (k p d/dp + H_eCS) x^lambda psi0 f_eCS = (1/2 sum lambda^2) x^lambda psi0 f_eCS
lam, k, beta, D = (Fraction(1, 3), Fraction(-2, 5)), Fraction(3, 7), Fraction(1, 2), 2
F = TwistedSeries(psi0(2, beta, D) * f_ecs(2, lam, k, beta, D), None, lam)
rep = eigen_extract(ecs_apply(F, beta, "NonStat", k), F)
print("\nnon-stationary eCS ratio:", dict(rep.ratio.items()))
print("expected eigenvalue:", sum(l * l for l in lam) / 2)
