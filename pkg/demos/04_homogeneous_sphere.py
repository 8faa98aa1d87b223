"""Homogeneous checks: the 2-sphere as su(2)/u(1), and a Lie-group foliation.

At a base point, a G-invariant almost complex structure is a linear lift J
with J^2 = -Id modulo the stabilizer subalgebra h. The Nijenhuis tensor is
computed in g and read mod h: for the round sphere it vanishes (the complex
structure of CP^1), while the twisted structure on the dim-4 nilpotent group
produces a genuine foliation with complex fibers.
"""

from transdolbeault import (
    AlmostComplexStructure,
    HomogeneousPair,
    Subspace,
    base_nijenhuis,
    basis_vector,
    catalog_get,
    fibration_report,
    invariance_check,
    minimal_homogeneous_check,
    validate_pair,
)

su2 = catalog_get("su2_mod_u1")
pair = HomogeneousPair(su2.algebra, su2.h, su2.acs)
print("su(2)/u(1):")
print("  pair valid:", validate_pair(pair).valid)
print("  invariant under h:", invariance_check(pair)["invariant"])
n12 = base_nijenhuis(pair, basis_vector(3, 0), basis_vector(3, 1))
print("  N^J(e1, e2) mod h:", [str(c) for c in n12], "(integrable sphere)")

kt = catalog_get("kodaira_thurston")
group = HomogeneousPair.lie_group(
    kt.algebra, AlmostComplexStructure(kt.acs.J, mod_h=Subspace.zero(4))
)
print("\nLie-group case (h = 0), twisted J on the dim-4 nilpotent group:")
check = minimal_homogeneous_check(group)
print("  minimality criterion holds:", check["holds"],
      "| via ideal shortcut:", check["via_ideal_shortcut"])
print("  fibration report:", fibration_report(group))
