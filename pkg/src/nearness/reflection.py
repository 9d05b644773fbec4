"""Joins, initial structures and the reflection of Mer onto Near.

Two reflectors are provided and should always agree:

* :func:`reflect_iterative` starts from all members of ``mu`` and repeatedly
  discards covers whose interior image is not uniform, until nothing changes.
* :func:`reflect_maximal` enumerates every nearness structure inside ``mu``
  and joins them; the join of two nearness structures is again nearness, so
  the result is the unique maximum of that family.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce

from .covers import GroundSet, SetMap, canonicalize, is_cover, preimage_cover, refines, wedge
from .enumeration import (
    MAX_COVER_N,
    MAX_STRUCTURE_N,
    enumerate_canonical_covers,
    enumerate_maps,
    enumerate_nearness_substructures,
    enumerate_structures,
)
from .errors import AlgorithmDisagreement, GroundSetMismatch, GroundSetTooLarge
from .structures import (
    MerotopicStructure,
    contains,
    interior_by,
    is_nearness,
    minimal_covers,
    subset_of,
    uniformly_continuous,
)

MODES = ("iterative", "maximal", "both")


def join(mu1: MerotopicStructure, mu2: MerotopicStructure) -> MerotopicStructure:
    """Least merotopic structure containing both arguments.

    If both arguments are nearness structures, so is the result.
    """
    if mu1.ground != mu2.ground:
        raise GroundSetMismatch(f"{mu1.ground} vs {mu2.ground}")
    basis = minimal_covers(wedge(b1, b2) for b1 in mu1.basis for b2 in mu2.basis)
    return MerotopicStructure(mu1.ground, basis)


def initial_structure(f: SetMap, nu: MerotopicStructure) -> MerotopicStructure:
    """Coarsest structure on the domain of ``f`` making ``f`` uniformly continuous into ``nu``."""
    if nu.ground != f.codomain:
        raise GroundSetMismatch(f"structure over {nu.ground}, map codomain {f.codomain}")
    basis = minimal_covers(preimage_cover(f, b) for b in nu.basis)
    return MerotopicStructure(f.domain, basis)


def _as_structure(ground: GroundSet, family: set, universe) -> MerotopicStructure:
    # A filter in a finite meet-semilattice is principal; recover its least
    # element and confirm that the family is exactly its up-set.
    least = reduce(wedge, family)
    if least not in family:
        raise AssertionError(f"family is not wedge-closed: {least!r} missing")
    for c in universe.covers:
        if (c in family) != refines(least, c):
            raise AssertionError(f"family is not up-closed at {c!r}")
    return MerotopicStructure(ground, frozenset([least]))


def iterate_reflection(mu: MerotopicStructure, rng: random.Random | None = None):
    """Descending fixpoint iteration; returns ``(reflection, rounds)``.

    ``rounds`` counts filtering passes including the final one that changes
    nothing, so a nearness input takes one round. Passing ``rng`` shuffles the
    order in which covers are visited; the result must not depend on it.
    """
    ground = mu.ground
    if ground.n > MAX_COVER_N:
        raise GroundSetTooLarge(f"iterative reflection supports n <= {MAX_COVER_N}, got {ground.n}")
    universe = enumerate_canonical_covers(ground)
    family = {c for c in universe.covers if contains(mu, c)}
    rounds = 0
    while True:
        rounds += 1
        current = family

        def member(c, current=current):
            return c in current

        interiors = {a: interior_by(member, ground, a) for a in ground.subsets()}
        order = [c for c in universe.covers if c in current]
        if rng is not None:
            rng.shuffle(order)
        kept = set()
        for c in order:
            image = [interiors[b] for b in c.blocks]
            if is_cover(image, ground) and canonicalize(image, ground) in current:
                kept.add(c)
        if kept == current:
            return _as_structure(ground, current, universe), rounds
        family = kept


def reflect_iterative(mu: MerotopicStructure, rng: random.Random | None = None) -> MerotopicStructure:
    return iterate_reflection(mu, rng)[0]


def reflect_maximal(mu: MerotopicStructure) -> MerotopicStructure:
    """Join of every nearness structure contained in ``mu`` (n <= 3)."""
    if mu.ground.n > MAX_STRUCTURE_N:
        raise GroundSetTooLarge(
            f"maximal reflection supports n <= {MAX_STRUCTURE_N}, got {mu.ground.n}"
        )
    family = enumerate_nearness_substructures(mu)
    top = reduce(join, family)
    if top not in family:
        raise AssertionError(f"join of nearness substructures {top!r} escaped the family")
    for nu in family:
        if nu != top and subset_of(top, nu):
            raise AssertionError(f"{top!r} is not maximal: {nu!r} is larger")
    return top


def reflect(mu: MerotopicStructure, mode: str = "both") -> MerotopicStructure:
    if mode == "iterative":
        return reflect_iterative(mu)
    if mode == "maximal":
        return reflect_maximal(mu)
    if mode == "both":
        a = reflect_iterative(mu)
        b = reflect_maximal(mu)
        if a != b:
            raise AlgorithmDisagreement(a, b)
        return a
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


@dataclass
class ReflectionReport:
    input: MerotopicStructure
    reflection: MerotopicStructure
    iterations: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]


def verify_bireflection(mu: MerotopicStructure, bound: int = 3, mode: str = "both") -> ReflectionReport:
    """Check the universal property of the reflection of ``mu`` exhaustively.

    Clauses recorded in ``checks`` as ``(name, passed, witness)``:

    ``contained``
        the reflection is a substructure of ``mu``;
    ``identity_uniformly_continuous``
        ``id: (X, mu) -> (X, reflection)`` is uniformly continuous;
    ``nearness``
        the reflection is a nearness structure;
    ``universal``
        every uniformly continuous ``f: (X, mu) -> (Y, nu)`` into a nearness
        space with ``|Y| <= bound`` has ``mu_f`` inside the reflection, and is
        still uniformly continuous from the reflection. The witness is the
        number of continuous maps checked, or the first offending
        ``(f, nu)``.
    """
    ground = mu.ground
    if ground.n > MAX_STRUCTURE_N or bound > MAX_STRUCTURE_N:
        raise GroundSetTooLarge(
            f"bireflection sweep supports n, bound <= {MAX_STRUCTURE_N}, got {ground.n}, {bound}"
        )
    tilde, rounds = iterate_reflection(mu)
    if mode != "iterative":
        other = reflect(mu, mode)
        if other != tilde:
            raise AlgorithmDisagreement(tilde, other)

    identity = SetMap.identity(ground)
    report = ReflectionReport(mu, tilde, rounds)
    report.checks.append(("contained", subset_of(tilde, mu), tilde))
    report.checks.append(
        ("identity_uniformly_continuous", uniformly_continuous(identity, mu, tilde), identity)
    )
    report.checks.append(("nearness", is_nearness(tilde), tilde))

    checked = 0
    witness = None
    for m in range(1, bound + 1):
        target = GroundSet(m)
        for nu in enumerate_structures(target):
            if not is_nearness(nu):
                continue
            for f in enumerate_maps(ground, target):
                if not uniformly_continuous(f, mu, nu):
                    continue
                checked += 1
                via_initial = subset_of(initial_structure(f, nu), tilde)
                direct = uniformly_continuous(f, tilde, nu)
                if not (via_initial and direct):
                    witness = (f, nu)
                    break
            if witness:
                break
        if witness:
            break
    report.checks.append(("universal", witness is None, witness or checked))
    return report


__all__ = [
    "ReflectionReport",
    "initial_structure",
    "iterate_reflection",
    "join",
    "reflect",
    "reflect_iterative",
    "reflect_maximal",
    "verify_bireflection",
]
