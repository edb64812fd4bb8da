"""The affine series f, its kappa = 0 closed form and its character limits.

Run: python demos/01_affine_series.py
"""

from fractions import Fraction

from nsr.specialfn import (
    ParamPoint,
    char_gl1_point,
    char_glN_limit,
    f_hat,
    f_hat_kappa0,
    f_hat_kappa_zero,
    gt_pattern_counts,
)

point = ParamPoint(2, Fraction(1, 3), Fraction(2, 5), Fraction(3, 7), (Fraction(1), Fraction(5, 11)))
f = f_hat(point, 2)
print("f for N=2 up to degree 2:")
for d, c in f.items():
    print(f"  y^{d}: {c}")

# at kappa = 0 the sum over tuples collapses to a product of Pochhammer symbols
zero = point.replace(kappa=Fraction(0))
print("\nkappa = 0 sum equals closed product:", f_hat_kappa_zero(zero, 4) == f_hat_kappa0(2, zero.q, zero.t, 4))

# s = (1, 1), kappa = 1/t and last argument q/t: only p^{Nk} survives, with coefficient p(k)
gl1 = f_hat(char_gl1_point(2, Fraction(1, 3), Fraction(2, 5)), 8)
print("\ngl1 character coefficients:", [str(gl1[(k, k)]) for k in range(5)])
print("non-uniform support:", [d for d in gl1.coeffs if d[0] != d[1]])

# dominant weight (K, mu) = (1, ()): t -> q limit counts affine GT patterns
lim = char_glN_limit(2, 1, (), Fraction(1, 3), 4)
print("\nglN limit equals GT pattern counts:", lim == gt_pattern_counts(2, 1, (), 4))
print("counts:", {d: int(c) for d, c in lim.items()})
