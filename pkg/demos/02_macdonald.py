"""Finite Macdonald functions: eigen-equation and the dual table.

Run: python demos/02_macdonald.py
"""

from fractions import Fraction

from nsr.operators import TwistedSeries, eigen_extract, macdonald_apply
from nsr.specialfn import f_macdonald, phi_macdonald_dual

q, t = Fraction(1, 3), Fraction(2, 5)
N = 3
qlambda = (Fraction(3, 2), Fraction(1, 7), Fraction(5, 4))
s = tuple(t ** (N - i) * qlambda[i - 1] for i in range(1, N + 1))

f = f_macdonald(N, s, q, t, 4)
print(f"f^gl{N} has {len(f)} nonzero coefficients up to z-degree 4")

X = TwistedSeries(f, qlambda)
rep = eigen_extract(macdonald_apply(X, q, t), X)
print("D(x^lambda f) / (x^lambda f) is constant:", rep.uniform)
print("eigenvalue:", rep.constant_term, " sum of s_i:", sum(s))

# phi expanded jointly in z and zeta = s_{l+1}/s_l is symmetric under (z, zeta) swap
table = phi_macdonald_dual(2, q, t, 2, 2)
sym = all(table.get((e, d), 0) == c for (d, e), c in table.items())
print("\ndual table (N=2, bidegree (2,2)) symmetric:", sym)
for (d, e), c in sorted(table.items()):
    print(f"  z^{d} zeta^{e}: {c}")
