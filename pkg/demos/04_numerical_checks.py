# Floating-point evidence for the exact formulas
#
# The parabolic contribution rests on a cotangent / Gauss-sum identity. The
# left side is evaluated numerically, the right side exactly through Hurwitz
# class numbers. The lifting identity for p = 1 mod 12 uses the conjectured
# dimension of skew-holomorphic forms.

import numpy as np

from jacobi_dims.crosscheck import lemma_check, lifting_identity_check
from jacobi_dims.dimensions import skew_dim_conjecture

errors = np.array([[lemma_check(a, f).abs_error for f in range(1, 37)] for a in range(1, 37)])
print(f"lemma: worst |LHS - RHS| over 1 <= a, f <= 36 is {errors.max():.2e}")
for a, f in [(1, 4), (2, 8), (3, 9), (5, 24)]:
    r = lemma_check(a, f)
    print(f"   a={a:2d} f={f:2d}  numeric {r.lhs_numeric:+.12f}  exact {r.rhs_exact}")

print("\nlifting identity, dim S_{k,1}(Gamma0(p)) = S_{k,1} + S_{k,p} + S^skew_{k,p}:")
for p in (13, 37, 61, 73):
    print(f"   p={p}: " + " ".join(f"k={k}:{'ok' if lifting_identity_check(p, k) else 'NO'}" for k in range(4, 17, 2)))
print("   conjectured skew dims at p = 13:", [int(skew_dim_conjecture(k, 13)) for k in range(4, 17, 2)])
