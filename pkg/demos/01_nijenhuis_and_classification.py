"""Build a 4-dimensional nilpotent algebra by hand and classify two structures.

The algebra has the single bracket [e1, e2] = e3. One almost complex
structure on it is integrable; the other is non-integrable but in the
mildest possible way: the image of its Nijenhuis tensor already generates an
involutive distribution.
"""

from transdolbeault import (
    AlmostComplexStructure,
    LieAlgebra,
    basis_vector,
    classify,
    derived_flag,
    nijenhuis,
    nijenhuis_image,
    validate_lie_algebra,
)

algebra = LieAlgebra.from_brackets(4, {(0, 1): {2: 1}})
print("Jacobi identity holds:", validate_lie_algebra(algebra).valid)

# J sends e1 -> e3, e2 -> e4 (and squares to -Id)
j_twisted = AlmostComplexStructure.from_rows([
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
])
# J0 sends e1 -> e2, e3 -> e4: compatible with the bracket, hence integrable
j_split = AlmostComplexStructure.from_rows([
    [0, -1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 0, 1, 0],
])

e = [basis_vector(4, i) for i in range(4)]
print("\nN^J(e1, e2) for the twisted J:",
      [str(c) for c in nijenhuis(algebra, j_twisted, e[0], e[1])])
print("N^J(e1, e2) for the split J:  ",
      [str(c) for c in nijenhuis(algebra, j_split, e[0], e[1])])

for name, acs in (("twisted", j_twisted), ("split", j_split)):
    image = nijenhuis_image(algebra, acs)
    flag = derived_flag(algebra, acs)
    verdict = classify(algebra, acs)
    print(f"\n{name} J:")
    print("  dim Im N^J =", image.rank)
    print("  flag dims  =", [s.rank for s in flag.stages],
          "stable at", flag.stable_index)
    print("  class      =", verdict.class_name)
