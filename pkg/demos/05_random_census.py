"""A seeded census of random structures on the catalog algebras.

random_acs conjugates the block-standard J0 by a random invertible integer
matrix, so every draw satisfies J^2 = -Id exactly and the run is
reproducible. The census tallies integrability classes and checks the (p,0)
coincidence on every instance.
"""

from collections import Counter

from transdolbeault import catalog_get, classify, compare_p0, random_acs

algebras = {
    "abelian^4": catalog_get("abelian2n", n=2).algebra,
    "nilpotent dim 4": catalog_get("kodaira_thurston").algebra,
    "complex heisenberg": catalog_get("iwasawa").algebra,
    "heisenberg5 + R": catalog_get("heisenberg5_plus_r").algebra,
    "so(3) + so(3)": catalog_get("max_nonintegrable_candidate").algebra,
}

for name, algebra in algebras.items():
    tally = Counter()
    for seed in range(20):
        acs = random_acs(algebra, seed)
        verdict = classify(algebra, acs)
        tally[verdict.class_name] += 1
        compare_p0(algebra, acs)  # raises on any counterexample
    print(f"{name:20s} {dict(tally)}")

print("\nevery instance passed the (p,0) coincidence check")
