"""The t -> 0 limit: affine q-Toda functions and the non-stationary Toda operator.

Run: python demos/04_toda.py
"""

from fractions import Fraction

from nsr.operators import TwistedSeries, eigen_extract, toda_nonstat_apply
from nsr.specialfn import ParamPoint, f_toda, f_toda_from_limit

r = Fraction(2, 3)
q = r * r
lam = (1, 0)
point = ParamPoint(2, q, None, Fraction(3, 7), tuple(q ** l for l in lam), r=r)

ft = f_toda(point, 4)
print("closed form equals the t -> 0 limit of f (D=2):", f_toda_from_limit(point, 2) == ft.truncate(2))

X = TwistedSeries(ft, tuple(q ** l for l in lam), lam)
rep = eigen_extract(toda_nonstat_apply(X, q, point.kappa, r), X)
print("T(kappa) eigen-ratio:", dict(rep.ratio.items()))
print("q^{sum lambda^2 / 2} =", r ** sum(l * l for l in lam))
