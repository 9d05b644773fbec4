# The initial structure induced by a map into a nearness space is nearness;
# into a merely merotopic space it need not be.
from nearness import (
    Cover,
    GroundSet,
    SetMap,
    discrete,
    find_counterexample,
    generate,
    initial_structure,
    is_nearness,
)

X, Y = GroundSet(3), GroundSet(2)
f = SetMap(X, Y, (0, 1, 1))
mu_f = initial_structure(f, discrete(Y))
print(f, "pulls back discrete(2) to", mu_f, "nearness:", is_nearness(mu_f))

nu = generate(X, [Cover.of(3, [[0, 1], [1, 2]])])
ident = SetMap.identity(X)
print("identity into", nu, "gives", initial_structure(ident, nu),
      "nearness:", is_nearness(initial_structure(ident, nu)))

print("first counterexample found by search:", find_counterexample(X))
