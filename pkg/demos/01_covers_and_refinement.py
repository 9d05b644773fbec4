# Canonical covers of a small set, the refinement order and the wedge.
from nearness import Cover, GroundSet, canonicalize, enumerate_canonical_covers, refines, wedge

X = GroundSet(3)

# Raw coverings may repeat information; the canonical form keeps only the
# maximal blocks, and the two refine each other.
raw = [[0, 1], [0], [], [1, 2]]
print("raw", raw, "->", canonicalize([X.subset(b) for b in raw], X))

a = Cover.of(3, [[0, 1], [2]])
b = Cover.of(3, [[0], [1, 2]])
print(a, "≺", b, ":", refines(a, b))
print(a, "∧", b, "=", wedge(a, b))

# Every canonical cover of a 3-element set, in serialization order, with its
# row of the refinement matrix.
universe = enumerate_canonical_covers(X)
print(len(universe), "canonical covers")
for cover, row in zip(universe.covers, universe.refinement_matrix):
    print(f"{cover!r:18}", "".join("x" if r else "." for r in row))

for n in range(1, 6):
    print("n =", n, "covers:", len(enumerate_canonical_covers(GroundSet(n))))
