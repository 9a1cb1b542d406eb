# Gamma(N): the closed form against the general formula
#
# Gamma(N), N >= 3, is torsion free with phi(N) psi(N) / 2 regular cusps, all
# of width N, so the general torsion-free formula collapses to a closed
# expression. When 4m divides N the class-number sum drops out entirely.

from jacobi_dims import dim_corollary_gammaN, dim_gammaN_4m_divides_N, dim_theorem1, dim_theorem2
from jacobi_dims.groups import principal_congruence_scheme

for N in (3, 4, 5, 8, 12):
    widths = principal_congruence_scheme(N).regular_cusp_widths
    print(f"Gamma({N}): {len(widths)} cusps of width {N}")
    for m in (1, 2, 3):
        for k in (3, 4, 5):
            closed = dim_corollary_gammaN(N, k, m).value
            t1 = dim_theorem1(k, m, widths).value
            t2 = dim_theorem2(k, m, widths).value
            extra = ""
            if N % (4 * m) == 0:
                extra = f"   4m|N form: {dim_gammaN_4m_divides_N(N, k, m).value}"
            print(f"   k={k} m={m}: closed {closed}, class-number form {t1}, s-function form {t2}{extra}")
