# Merotopic structures as filters of covers; interiors and the nearness test.
from nearness import (
    Cover,
    GroundSet,
    discrete,
    enumerate_structures,
    generate,
    indiscrete,
    interior,
    interior_image,
    is_nearness,
    members,
)

X = GroundSet(3)
path = generate(X, [Cover.of(3, [[0, 1], [1, 2]])])
print(path)

# int(A) = {x : {A, X∖{x}} is uniform}
for a in X.subsets():
    print(f"int({set(members(a)) or '{}'}) =", set(members(interior(path, a))) or "{}")

# The interiors of the blocks of the basis cover no longer cover X, so the
# structure is merotopic but not nearness.
print("interior image:", [set(members(s)) for s in interior_image(path, Cover.of(3, [[0, 1], [1, 2]]))])
print("nearness?", is_nearness(path))

# On a finite set every structure is the up-set of a single cover.
for mu in enumerate_structures(X):
    tag = "nearness " if is_nearness(mu) else "merotopic"
    print(tag, mu.sorted_basis())

print(is_nearness(indiscrete(X)), is_nearness(discrete(X)))
