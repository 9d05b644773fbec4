# Two ways to compute the largest nearness structure inside a merotopic one.
from nearness import (
    Cover,
    GroundSet,
    enumerate_nearness_substructures,
    generate,
    iterate_reflection,
    reflect_maximal,
)

X = GroundSet(3)
mu = generate(X, [Cover.of(3, [[0, 1], [1, 2]])])

# Descending fixpoint: drop covers whose interior image is not uniform.
tilde, rounds = iterate_reflection(mu)
print("iterative:", tilde, "after", rounds, "rounds")

# Join of every nearness structure contained in mu.
print("nearness structures inside mu:", enumerate_nearness_substructures(mu))
print("maximal:  ", reflect_maximal(mu))

# Larger ground sets only need the iterative algorithm.
Y = GroundSet(5)
chain = generate(Y, [Cover.of(5, [[0, 1], [1, 2], [2, 3], [3, 4]])])
mixed = generate(Y, [Cover.of(5, [[0, 1], [1, 2], [3], [4]])])
for s in (chain, mixed):
    print(s, "->", *iterate_reflection(s))
