"""Ground sets, subsets, canonical coverings, refinement and wedge.

Subsets of a ground set of size ``n`` are plain ``int`` bitmasks: element
``i`` belongs to the subset ``s`` iff ``s >> i & 1``. Covers are stored only
in canonical form, i.e. as antichains of non-empty blocks whose union is the
whole ground set. Two raw coverings that refine each other have the same
canonical form, and every question asked about merotopic structures depends
only on that refinement-equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GroundSetMismatch, NotACover

Subset = int


@dataclass(frozen=True)
class GroundSet:
    """The finite set ``{0, ..., n-1}``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ground set size must be a positive int, got {self.n!r}")

    @property
    def full(self) -> Subset:
        return (1 << self.n) - 1

    def subset(self, elements: Iterable[int]) -> Subset:
        """Bitmask for ``elements``; raises ``ValueError`` on out-of-range indices."""
        mask = 0
        for i in elements:
            if not 0 <= i < self.n:
                raise ValueError(f"element {i} outside ground set of size {self.n}")
            mask |= 1 << i
        return mask

    def subsets(self) -> range:
        """All ``2**n`` subsets, as bitmasks in increasing numeric order."""
        return range(1 << self.n)

    def __repr__(self):
        return f"GroundSet({self.n})"


def members(s: Subset) -> tuple[int, ...]:
    """Ascending element indices of the subset ``s``."""
    out = []
    i = 0
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return tuple(out)


def is_subset(a: Subset, b: Subset) -> bool:
    return a & ~b == 0


def block_key(s: Subset) -> tuple[int, tuple[int, ...]]:
    """Serialization order of blocks: by size, then lexicographically."""
    elems = members(s)
    return (len(elems), elems)


def _as_mask(block, ground: GroundSet) -> Subset:
    if isinstance(block, int):
        if block < 0 or block & ~ground.full:
            raise ValueError(f"subset {block:#b} outside ground set of size {ground.n}")
        return block
    return ground.subset(block)


def _masks(raw, ground: GroundSet) -> list[Subset]:
    return [_as_mask(b, ground) for b in raw]


@dataclass(frozen=True)
class Cover:
    """A canonical covering: a non-empty antichain of non-empty blocks with union X.

    Use :func:`canonicalize` (or :meth:`of`) to build one from an arbitrary
    covering; the constructor itself only validates.
    """

    ground: GroundSet
    blocks: frozenset

    def __post_init__(self):
        blocks = frozenset(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise NotACover("a cover needs at least one block")
        union = 0
        for b in blocks:
            if b == 0:
                raise ValueError("canonical covers have no empty block")
            if b & ~self.ground.full:
                raise ValueError(f"block {b:#b} outside ground set of size {self.ground.n}")
            union |= b
        if union != self.ground.full:
            raise NotACover(f"blocks {self.as_lists()} do not cover {self.ground}")
        for a in blocks:
            for b in blocks:
                if a != b and is_subset(a, b):
                    raise ValueError(f"blocks {self.as_lists()} are not an antichain")

    @classmethod
    def of(cls, ground: GroundSet | int, blocks) -> Cover:
        """Canonical cover from blocks given as element iterables or bitmasks."""
        if isinstance(ground, int):
            ground = GroundSet(ground)
        return canonicalize(blocks, ground)

    def sorted_blocks(self) -> list[Subset]:
        return sorted(self.blocks, key=block_key)

    def sort_key(self) -> tuple:
        return tuple(block_key(b) for b in self.sorted_blocks())

    def as_lists(self) -> list[list[int]]:
        return [list(members(b)) for b in sorted(self.blocks, key=block_key)]

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sorted_blocks())

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        body = ",".join("{" + ",".join(map(str, blk)) + "}" for blk in self.as_lists())
        return f"[{body}]"


def _check_same(a: Cover, b: Cover):
    if a.ground != b.ground:
        raise GroundSetMismatch(f"{a.ground} vs {b.ground}")


def is_cover(raw, ground: GroundSet) -> bool:
    """True iff ``raw`` is a non-empty family whose union is the ground set.

    Empty members are allowed; they never change the union.
    """
    masks = _masks(raw, ground)
    if not masks:
        return False
    union = 0
    for m in masks:
        union |= m
    return union == ground.full


def minimal_blocks(masks: Iterable[Subset]) -> frozenset:
    """Drop empty sets and every set contained in a distinct one (keep the maximal ones)."""
    distinct = sorted({m for m in masks if m}, key=lambda m: -bin(m).count("1"))
    kept: list[Subset] = []
    for m in distinct:
        if not any(is_subset(m, k) for k in kept):
            kept.append(m)
    return frozenset(kept)


def canonicalize(raw, ground: GroundSet) -> Cover:
    """Canonical form of a raw covering; raises :class:`NotACover` otherwise."""
    masks = _masks(raw, ground)
    if not is_cover(masks, ground):
        raise NotACover(f"{[list(members(m)) for m in masks]} does not cover {ground}")
    return Cover(ground, minimal_blocks(masks))


def refines(a: Cover, b: Cover) -> bool:
    """``a ≺ b``: every block of ``a`` lies inside some block of ``b``."""
    _check_same(a, b)
    return all(any(is_subset(x, y) for y in b.blocks) for x in a.blocks)


def wedge(a: Cover, b: Cover) -> Cover:
    """Canonical form of ``{A ∩ B}``; the meet of ``a`` and ``b`` under refinement."""
    _check_same(a, b)
    return Cover(a.ground, minimal_blocks(x & y for x in a.blocks for y in b.blocks))


def whole(ground: GroundSet) -> Cover:
    """The one-block cover ``[X]``, top of the refinement order."""
    return Cover(ground, frozenset([ground.full]))


def singletons(ground: GroundSet) -> Cover:
    """The partition into singletons, bottom of the refinement order."""
    return Cover(ground, frozenset(1 << i for i in range(ground.n)))


@dataclass(frozen=True)
class SetMap:
    """A total function ``domain -> codomain`` given by its image tuple."""

    domain: GroundSet
    codomain: GroundSet
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.domain.n:
            raise ValueError(
                f"map needs {self.domain.n} images, got {len(self.images)}"
            )
        for i in self.images:
            if not isinstance(i, int) or not 0 <= i < self.codomain.n:
                raise ValueError(f"image {i!r} outside codomain of size {self.codomain.n}")

    @classmethod
    def identity(cls, ground: GroundSet) -> SetMap:
        return cls(ground, ground, tuple(range(ground.n)))

    @classmethod
    def constant(cls, domain: GroundSet, codomain: GroundSet, value: int = 0) -> SetMap:
        return cls(domain, codomain, (value,) * domain.n)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def preimage(self, s: Subset) -> Subset:
        out = 0
        for x, y in enumerate(self.images):
            if s >> y & 1:
                out |= 1 << x
        return out

    def then(self, g: SetMap) -> SetMap:
        """Composite ``g ∘ self``."""
        if g.domain != self.codomain:
            raise GroundSetMismatch(f"{self.codomain} vs {g.domain}")
        return SetMap(self.domain, g.codomain, tuple(g.images[y] for y in self.images))

    def __repr__(self):
        return "SetMap(" + ",".join(f"{x}->{y}" for x, y in enumerate(self.images)) + ")"


def preimage_cover(f: SetMap, a: Cover) -> Cover:
    """Canonical form of ``f⁻¹[a]``, a cover of the domain of ``f``."""
    if a.ground != f.codomain:
        raise GroundSetMismatch(f"cover over {a.ground}, map codomain {f.codomain}")
    return canonicalize([f.preimage(b) for b in a.blocks], f.domain)
