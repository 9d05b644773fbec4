"""Exhaustive universes and independent oracles for small ground sets.

Everything here is deliberately brute force. The oracles (the naive cover
enumerator, the filter enumerator, :func:`membership_oracle` and
:func:`is_nearness_exhaustive`) work from the refinement matrix of the cover
universe and never call :func:`~nearness.covers.wedge` or
:func:`~nearness.structures.contains`, so they can be used to check those.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .covers import (
    Cover,
    GroundSet,
    SetMap,
    block_key,
    canonicalize,
    is_cover,
    is_subset,
    refines,
    wedge,
)
from .errors import BudgetExceeded, GroundSetMismatch, GroundSetTooLarge
from .structures import (
    MerotopicStructure,
    interior_by,
    is_nearness,
    subset_of,
)

MAX_COVER_N = 5
MAX_NAIVE_N = 4
MAX_STRUCTURE_N = 3
MAP_BUDGET = 3**3


def _gate(ground: GroundSet, limit: int, what: str):
    if ground.n > limit:
        raise GroundSetTooLarge(f"{what} supports n <= {limit}, got n = {ground.n}")


@dataclass(frozen=True, eq=False)
class CoverUniverse:
    """All canonical covers of a ground set, in serialization order."""

    ground: GroundSet
    covers: tuple
    index: dict = field(repr=False)

    def __len__(self):
        return len(self.covers)

    def index_of(self, cover: Cover) -> int:
        if cover.ground != self.ground:
            raise GroundSetMismatch(f"{cover.ground} vs universe over {self.ground}")
        return self.index[cover]

    @cached_property
    def refinement_matrix(self) -> np.ndarray:
        """``R[i, j]`` is True iff ``covers[i] ≺ covers[j]``.

        Built by counting, for every pair, how many blocks of the first cover
        fit in some block of the second; independent of :func:`refines`.
        """
        masks = np.arange(1, 1 << self.ground.n, dtype=np.int64)
        contained = (masks[:, None] & ~masks[None, :]) == 0
        incidence = np.zeros((len(self.covers), masks.size), dtype=np.int32)
        for i, c in enumerate(self.covers):
            incidence[i, [b - 1 for b in c.blocks]] = 1
        fits = (contained.astype(np.int32) @ incidence.T) > 0
        counts = incidence @ fits.astype(np.int32)
        return counts == incidence.sum(axis=1)[:, None]

    def meet_index(self, i: int, j: int) -> int:
        """Index of the greatest common refinement of covers ``i`` and ``j``."""
        r = self.refinement_matrix
        lower = np.flatnonzero(r[:, i] & r[:, j])
        for m in lower:
            if r[lower, m].all():
                return int(m)
        raise AssertionError("cover universe is not a meet-semilattice")


def _antichain_covers(ground: GroundSet) -> list[frozenset]:
    order = sorted(range(1, 1 << ground.n), key=block_key)
    found = []

    def extend(start, chosen, union):
        if union == ground.full:
            found.append(frozenset(chosen))
        for k in range(start, len(order)):
            s = order[k]
            if any(is_subset(s, c) or is_subset(c, s) for c in chosen):
                continue
            chosen.append(s)
            extend(k + 1, chosen, union | s)
            chosen.pop()

    extend(0, [], 0)
    return found


@lru_cache(maxsize=None)
def enumerate_canonical_covers(ground: GroundSet) -> CoverUniverse:
    """Every antichain of non-empty subsets with union ``X`` (n <= 5)."""
    _gate(ground, MAX_COVER_N, "cover enumeration")
    covers = sorted(
        (Cover(ground, blocks) for blocks in _antichain_covers(ground)),
        key=Cover.sort_key,
    )
    return CoverUniverse(ground, tuple(covers), {c: i for i, c in enumerate(covers)})


def naive_canonical_covers(ground: GroundSet) -> set[frozenset]:
    """Filter every family of non-empty subsets; the trustworthy slow route."""
    _gate(ground, MAX_NAIVE_N, "naive cover enumeration")
    subsets = list(range(1, 1 << ground.n))
    out = set()
    for pick in range(1, 1 << len(subsets)):
        family = [s for k, s in enumerate(subsets) if pick >> k & 1]
        if not is_cover(family, ground):
            continue
        if all(a == b or not is_subset(a, b) for a in family for b in family):
            out.add(frozenset(family))
    return out


def _structure_from_family(universe: CoverUniverse, family) -> MerotopicStructure:
    r = universe.refinement_matrix
    fam = sorted(family)
    basis = [
        universe.covers[i]
        for i in fam
        if not any(j != i and r[j, i] for j in fam)
    ]
    return MerotopicStructure(universe.ground, frozenset(basis))


def _sorted_structures(structures):
    return sorted(structures, key=MerotopicStructure.sort_key)


@lru_cache(maxsize=None)
def _structures(ground: GroundSet) -> tuple:
    universe = enumerate_canonical_covers(ground)
    covers = universe.covers
    found = []

    def extend(start, chosen):
        if chosen and all(
            any(refines(b, wedge(b1, b2)) for b in chosen)
            for b1 in chosen
            for b2 in chosen
        ):
            found.append(MerotopicStructure(ground, frozenset(chosen)))
        for k in range(start, len(covers)):
            c = covers[k]
            if any(refines(c, d) or refines(d, c) for d in chosen):
                continue
            chosen.append(c)
            extend(k + 1, chosen)
            chosen.pop()

    extend(0, [])
    return tuple(_sorted_structures(found))


def enumerate_structures(ground: GroundSet) -> list[MerotopicStructure]:
    """All merotopic structures on ``ground`` (n <= 3), via antichain bases."""
    _gate(ground, MAX_STRUCTURE_N, "structure enumeration")
    return list(_structures(ground))


def enumerate_structures_by_filters(ground: GroundSet) -> list[MerotopicStructure]:
    """All up-closed, meet-closed, non-empty families of the cover universe.

    Second, independent enumerator: tests every subset of the universe against
    the refinement matrix only.
    """
    _gate(ground, MAX_STRUCTURE_N, "structure enumeration")
    universe = enumerate_canonical_covers(ground)
    r = universe.refinement_matrix
    k = len(universe)
    meets = [[universe.meet_index(i, j) for j in range(k)] for i in range(k)]
    found = []
    for pick in range(1, 1 << k):
        family = [i for i in range(k) if pick >> i & 1]
        members = set(family)
        if any(not (pick >> j & 1) for i in family for j in np.flatnonzero(r[i])):
            continue
        if any(meets[i][j] not in members for i in family for j in family):
            continue
        found.append(_structure_from_family(universe, members))
    return _sorted_structures(found)


def enumerate_nearness_substructures(mu: MerotopicStructure) -> list[MerotopicStructure]:
    """The family of nearness structures contained in ``mu``, in serialization order."""
    return [
        nu
        for nu in enumerate_structures(mu.ground)
        if subset_of(nu, mu) and is_nearness(nu)
    ]


def enumerate_maps(domain: GroundSet, codomain: GroundSet, budget: int = MAP_BUDGET) -> list[SetMap]:
    count = codomain.n**domain.n
    if count > budget:
        raise BudgetExceeded(f"{count} maps {domain.n}->{codomain.n} exceed budget {budget}")
    return [
        SetMap(domain, codomain, images)
        for images in itertools.product(range(codomain.n), repeat=domain.n)
    ]


@lru_cache(maxsize=4096)
def oracle_family(basis: frozenset, universe: CoverUniverse) -> frozenset:
    """Indices of the explicit structure generated by ``basis`` inside ``universe``."""
    r = universe.refinement_matrix
    family = {universe.index_of(b) for b in basis}
    while True:
        grown = set(family)
        for i in family:
            grown.update(int(j) for j in np.flatnonzero(r[i]))
        for i in list(grown):
            for j in list(grown):
                grown.add(universe.meet_index(i, j))
        if grown == family:
            return frozenset(family)
        family = grown


def membership_oracle(mu_basis, cover: Cover, universe: CoverUniverse) -> bool:
    """Membership by explicit up- and meet-closure over the whole universe."""
    mu_basis = frozenset(mu_basis)
    for b in mu_basis:
        if b.ground != universe.ground:
            raise GroundSetMismatch(f"{b.ground} vs universe over {universe.ground}")
    return universe.index_of(cover) in oracle_family(mu_basis, universe)


def is_nearness_exhaustive(mu: MerotopicStructure, universe: CoverUniverse | None = None) -> bool:
    """Nearness checked on every member of ``mu``, not just its basis."""
    if universe is None:
        universe = enumerate_canonical_covers(mu.ground)
    family = oracle_family(mu.basis, universe)
    ground = mu.ground

    def member(c):
        return universe.index_of(c) in family

    interiors = {a: interior_by(member, ground, a) for a in ground.subsets()}
    for i in family:
        image = [interiors[b] for b in universe.covers[i].blocks]
        if not is_cover(image, ground) or not member(canonicalize(image, ground)):
            return False
    return True


def find_counterexample(ground: GroundSet, codomain_bound: int = 3):
    """First ``(f, nu, mu_f)`` with ``nu`` merely merotopic and ``mu_f`` not nearness.

    Codomains are searched by increasing size, structures in serialization
    order, maps in lexicographic order of their images. Returns None when no
    such triple exists.
    """
    from .reflection import initial_structure

    _gate(ground, MAX_STRUCTURE_N, "counterexample search")
    for m in range(1, codomain_bound + 1):
        target = GroundSet(m)
        for nu in enumerate_structures(target):
            if is_nearness(nu):
                continue
            for f in enumerate_maps(ground, target):
                mu_f = initial_structure(f, nu)
                if not is_nearness(mu_f):
                    return f, nu, mu_f
    return None


def is_counterexample(f: SetMap, nu: MerotopicStructure) -> bool:
    """True iff ``nu`` is merotopic but not nearness and so is the initial structure."""
    from .reflection import initial_structure

    return not is_nearness(nu) and not is_nearness(initial_structure(f, nu))


__all__ = [
    "CoverUniverse",
    "enumerate_canonical_covers",
    "enumerate_maps",
    "enumerate_nearness_substructures",
    "enumerate_structures",
    "enumerate_structures_by_filters",
    "find_counterexample",
    "is_counterexample",
    "is_nearness_exhaustive",
    "membership_oracle",
    "naive_canonical_covers",
    "oracle_family",
]
