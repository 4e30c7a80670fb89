"""Root systems, realized brackets, and root-subset predicates.

Builds a handful of root systems, checks the classical root counts, computes
a few brackets through the Weyl-algebra realizations, and classifies some
root subsets.
"""
from weightcat.rootsys import (RootSubset, build_root_system, classify_subset,
                               lattice_disjoint, levi_decomposition)

for name in ("A2", "A4", "B3", "C3", "D4", "F4", "G2", "E6"):
    rs = build_root_system(name)
    print(f"{name}: {len(rs.roots)} roots, simple basis of size {rs.rank}")

print()
a3 = build_root_system("A3")
real = a3.realization
e1, e2 = a3.simple_root(1), a3.simple_root(2)
print("A3:  [X_e1, X_e2] =", real.bracket(real.root_vector(e1), real.root_vector(e2)))
print("A3:  [X_e1, X_-e1] =", real.bracket(real.root_vector(e1), real.root_vector((-1, 0, 0))))
print("     H_e1          =", real.coroot(1))

c2 = build_root_system("C2")
long_root = c2.simple_root(2)
print("C2:  X_e2 =", c2.realization.root_vector(long_root),
      " X_-e2 =", c2.realization.root_vector((0, -1)))
print("C2:  [X_e2, X_-e2] =", c2.realization.bracket(
    c2.realization.root_vector(long_root), c2.realization.root_vector((0, -1))))

print()
a2 = build_root_system("A2")
positive = RootSubset.of(a2, [r for r in a2.roots if sum(r) > 0])
flags = classify_subset(positive)
print("A2 positive roots:", flags)
levi = RootSubset.generated_by_simples(a2, [1])
print("A2 span of e1:   ", classify_subset(levi))
print("lattices of {±e1} and {±(e1+e2)} disjoint:",
      lattice_disjoint(levi, RootSubset.of(a2, [(1, 1), (-1, -1)])))

span, nplus, nminus = levi_decomposition(c2, [1])
print("C2 parabolic over {e1}: nilradical roots:", sorted(nplus))
