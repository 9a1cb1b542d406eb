# Jacobi cusp forms on the full modular group
#
# On SL(2,Z) the dimension of S_{k,m} is a sum of s-function terms over the one
# cusp (width 1) and the two elliptic points. For index 1 and even k it
# reproduces dim S_{2k-2}(SL(2,Z)); for odd k and index 1 it vanishes.

from jacobi_dims import dim_jacobi, principal_congruence_scheme
from jacobi_dims.crosscheck import classical_dim_cusp_forms

full = principal_congruence_scheme(1)
print(full)

print("\n k   dim S_{k,1}   dim S_{2k-2}")
for k in range(3, 21):
    jac = dim_jacobi(k, 1, full).value
    ell = classical_dim_cusp_forms(2 * k - 2, 1)
    print(f"{k:2d}   {jac!s:>10}   {ell:>10}")

# a small table in k and m
print("\n k \\ m " + "".join(f"{m:5d}" for m in range(1, 11)))
for k in range(2, 13):
    row = [dim_jacobi(k, m, full) for m in range(1, 11)]
    print(f"{k:5d}  " + "".join(f"{int(r.value):5d}" for r in row) + ("   (minus skew part)" if k == 2 else ""))
