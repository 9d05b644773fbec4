# Exhaustive check of the universal property of the reflection for every
# structure on a 3-element set, against all nearness codomains of size <= 3.
from nearness import GroundSet, enumerate_structures, verify_bireflection

for mu in enumerate_structures(GroundSet(3)):
    report = verify_bireflection(mu, bound=3)
    status = "ok " if report.passed else "BAD"
    universal = dict((name, witness) for name, _, witness in report.checks)["universal"]
    print(status, mu.sorted_basis(), "->", report.reflection.sorted_basis(),
          f"({universal} continuous maps checked)")
