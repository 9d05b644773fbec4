"""Merotopic structures, the interior operator and uniform continuity.

A merotopic structure on ``X`` is a non-empty family of covers that is closed
upward under refinement and under the wedge. In the canonical-cover order it
is a filter, and we store it by its set of minimal members (the basis): a
cover belongs to the structure iff some basis cover refines it.

On a finite ground set the wedge of all members is itself a member, so every
structure is the principal filter of a single cover and the basis always has
exactly one element. The type does not rely on this; the constructor simply
rejects any basis that violates wedge-closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable

from .covers import (
    Cover,
    GroundSet,
    SetMap,
    Subset,
    canonicalize,
    is_cover,
    preimage_cover,
    refines,
    singletons,
    wedge,
    whole,
)
from .errors import EmptyGenerators, GroundSetMismatch

__all__ = [
    "MerotopicStructure",
    "SetMap",
    "contains",
    "discrete",
    "generate",
    "indiscrete",
    "interior",
    "interior_image",
    "is_nearness",
    "minimal_covers",
    "subset_of",
    "uniformly_continuous",
]


def minimal_covers(covers: Iterable[Cover]) -> frozenset:
    """The ≺-minimal elements of a family of canonical covers."""
    covers = set(covers)
    return frozenset(
        c for c in covers if not any(d != c and refines(d, c) for d in covers)
    )


@dataclass(frozen=True)
class MerotopicStructure:
    ground: GroundSet
    basis: frozenset

    def __post_init__(self):
        basis = frozenset(self.basis)
        object.__setattr__(self, "basis", basis)
        if not basis:
            raise EmptyGenerators("a merotopic structure needs a non-empty basis")
        for b in basis:
            if b.ground != self.ground:
                raise GroundSetMismatch(f"basis cover over {b.ground}, structure over {self.ground}")
        if minimal_covers(basis) != basis:
            raise ValueError(f"basis {sorted_covers(basis)} is not a ≺-antichain")
        for b1 in basis:
            for b2 in basis:
                w = wedge(b1, b2)
                if not any(refines(b, w) for b in basis):
                    raise ValueError(f"basis is not wedge-closed: {b1!r} ∧ {b2!r} = {w!r}")

    def sorted_basis(self) -> list[Cover]:
        return sorted_covers(self.basis)

    def sort_key(self) -> tuple:
        return tuple(c.sort_key() for c in self.sorted_basis())

    def __contains__(self, cover: Cover) -> bool:
        return contains(self, cover)

    def __repr__(self):
        return f"Mer(n={self.ground.n}, basis={self.sorted_basis()})"


def sorted_covers(covers: Iterable[Cover]) -> list[Cover]:
    return sorted(covers, key=Cover.sort_key)


def _check(mu: MerotopicStructure, ground: GroundSet):
    if mu.ground != ground:
        raise GroundSetMismatch(f"{mu.ground} vs {ground}")


def generate(ground: GroundSet, gens: Iterable[Cover]) -> MerotopicStructure:
    """Smallest merotopic structure containing every generator.

    The wedge over any non-empty subset of generators is refined by the wedge
    of all of them, so that single cover is the whole minimal antichain.
    """
    gens = list(gens)
    if not gens:
        raise EmptyGenerators("generate() needs at least one cover")
    for g in gens:
        if g.ground != ground:
            raise GroundSetMismatch(f"generator over {g.ground}, expected {ground}")
    return MerotopicStructure(ground, frozenset([reduce(wedge, gens)]))


def indiscrete(ground: GroundSet) -> MerotopicStructure:
    """The smallest structure: the coverings that contain ``X`` itself."""
    return MerotopicStructure(ground, frozenset([whole(ground)]))


def discrete(ground: GroundSet) -> MerotopicStructure:
    """The largest structure, all of ``c(X)``."""
    return MerotopicStructure(ground, frozenset([singletons(ground)]))


def contains(mu: MerotopicStructure, cover: Cover) -> bool:
    _check(mu, cover.ground)
    return any(refines(b, cover) for b in mu.basis)


def subset_of(mu1: MerotopicStructure, mu2: MerotopicStructure) -> bool:
    """``mu1 ⊆ mu2``; by up-closure it suffices to test the basis of ``mu1``."""
    _check(mu2, mu1.ground)
    return all(contains(mu2, b) for b in mu1.basis)


def interior_by(member: Callable[[Cover], bool], ground: GroundSet, a: Subset) -> Subset:
    """Interior of ``a`` relative to an arbitrary membership predicate on covers.

    ``{a, X∖{x}}`` covers ``X`` only when ``x ∈ a``; other points are skipped.
    """
    out = 0
    for x in range(ground.n):
        if a >> x & 1:
            if member(canonicalize([a, ground.full & ~(1 << x)], ground)):
                out |= 1 << x
    return out


def interior(mu: MerotopicStructure, a: Subset) -> Subset:
    """``int_mu(a) = {x : {a, X∖{x}} ∈ mu}`` as a bitmask."""
    if a < 0 or a & ~mu.ground.full:
        raise ValueError(f"subset {a:#b} outside {mu.ground}")
    return interior_by(lambda c: contains(mu, c), mu.ground, a)


def interior_image(mu: MerotopicStructure, cover: Cover) -> frozenset:
    """Raw family of blockwise interiors; may contain ∅ and need not cover X."""
    _check(mu, cover.ground)
    return frozenset(interior(mu, b) for b in cover.blocks)


def is_nearness(mu: MerotopicStructure) -> bool:
    # Interiors are monotone, so the image of a basis cover refines the image
    # of any cover it refines; checking the basis is enough.
    for b in mu.basis:
        image = interior_image(mu, b)
        if not is_cover(image, mu.ground):
            return False
        if not contains(mu, canonicalize(image, mu.ground)):
            return False
    return True


def uniformly_continuous(f: SetMap, mu: MerotopicStructure, nu: MerotopicStructure) -> bool:
    """Whether ``f: (X, mu) -> (Y, nu)`` pulls every uniform cover back to one."""
    _check(mu, f.domain)
    _check(nu, f.codomain)
    return all(contains(mu, preimage_cover(f, b)) for b in nu.basis)
