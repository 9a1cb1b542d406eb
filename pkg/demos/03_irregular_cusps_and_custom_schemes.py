# Groups without -1, irregular cusps, and hand-written branching schemes
#
# The formulas only see the branching scheme. Gamma1(4) is the classic example
# with an irregular cusp (at 1/2); Gamma1(3) has an elliptic point of order 3.

import json

from jacobi_dims import BranchingScheme, dim_jacobi, gamma0_scheme, gamma1_scheme, principal_congruence_scheme

for N in (3, 4, 5, 6):
    chain = [principal_congruence_scheme(N), gamma1_scheme(N), gamma0_scheme(N)]
    print(f"N = {N}")
    for s in chain:
        dims = [int(dim_jacobi(k, 2, s).value) for k in range(3, 9)]
        print(f"   {s.label:<10} psl index {s.psl_index():3d}  dim S_(k,2), k=3..8: {dims}")

# A scheme can be written by hand, e.g. read from JSON
text = json.dumps(gamma1_scheme(4).to_dict())
print("\nGamma1(4) as JSON:", text)
scheme = BranchingScheme.from_json(text)
print("dim S_{4,3}:", dim_jacobi(4, 3, scheme).value)

# data that no subgroup realises is rejected once the value is not a dimension
fake = BranchingScheme(False, (1,))
try:
    dim_jacobi(3, 1, fake)
except ArithmeticError as exc:
    print("synthetic scheme:", exc)
