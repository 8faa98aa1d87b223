"""Transverse vs generalized Dolbeault cohomology, and the (p,0) coincidence.

For the twisted structure on the 4-dimensional nilpotent algebra the
involutive limit distribution is 2-dimensional; the transverse table is that
of a 1-dimensional complex torus, the invariant model of the leaf space.
The generalized (mu_bar-then-del_bar) table is computed independently, and
the two agree in all degrees (p,0).
"""

from transdolbeault import (
    catalog_get,
    compare_p0,
    comparison_map_rank,
    derived_flag,
    generalized_dolbeault,
    mu_bar_cohomology,
    transverse_dolbeault,
)


def show(table, m, label):
    print(label)
    print("      " + "".join(f"q={q:<4}" for q in range(m + 1)))
    for p in range(m + 1):
        print(f"  p={p} " + "".join(f"{table.dim(p, q):<5}" for q in range(m + 1)))


for name in ("kodaira_thurston", "iwasawa", "max_nonintegrable_candidate"):
    entry = catalog_get(name)
    L, J = entry.algebra, entry.acs
    m = L.dim // 2
    print("=" * 60)
    print(name, "| limit distribution dim:", derived_flag(L, J).limit.rank)
    show(transverse_dolbeault(L, J), m, "H_trans:")
    show(mu_bar_cohomology(L, J), m, "H_mu_bar:")
    show(generalized_dolbeault(L, J), m, "H_cw:")
    print("(p,0) coincidence:", compare_p0(L, J))
    ranks = {(p, q): comparison_map_rank(L, J, p, q)
             for p in range(m + 1) for q in range(m + 1)}
    print("comparison map ranks:", {k: v for k, v in ranks.items() if v})
