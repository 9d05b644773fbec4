# The join of two nearness structures is again nearness and is the least
# structure above both.
import itertools

from nearness import GroundSet, enumerate_structures, interior, is_nearness, join, subset_of

X = GroundSet(3)
structures = enumerate_structures(X)
near = [mu for mu in structures if is_nearness(mu)]

for a, b in itertools.combinations(near, 2):
    j = join(a, b)
    least = all(subset_of(j, mu) for mu in structures if subset_of(a, mu) and subset_of(b, mu))
    print(a.sorted_basis(), "∨", b.sorted_basis(), "=", j.sorted_basis(),
          "nearness:", is_nearness(j), "least:", least)

# int_a(S) ∩ int_b(T) ⊆ int_{a∨b}(S ∩ T) for every pair of subsets
ok = all(
    interior(a, s) & interior(b, t) & ~interior(join(a, b), s & t) == 0
    for a, b in itertools.product(near, repeat=2)
    for s, t in itertools.product(X.subsets(), repeat=2)
)
print("interior inclusion holds:", ok)
