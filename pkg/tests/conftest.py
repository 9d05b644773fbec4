import pytest
from hypothesis import strategies as st

from nearness import Cover, GroundSet, canonicalize, enumerate_structures, generate


def C(n, *blocks):
    """Shorthand: ``C(3, [0, 1], [1, 2])``."""
    return Cover.of(n, [list(b) for b in blocks])


@st.composite
def raw_covers(draw, n):
    """A raw covering of ``{0..n-1}``, possibly with ∅ and nested blocks."""
    ground = GroundSet(n)
    blocks = draw(st.lists(st.integers(0, ground.full), min_size=1, max_size=6))
    union = 0
    for b in blocks:
        union |= b
    if union != ground.full:
        blocks.append(ground.full & ~union | draw(st.integers(0, ground.full)))
    return blocks


@st.composite
def covers(draw, n):
    return canonicalize(draw(raw_covers(n)), GroundSet(n))


@st.composite
def structures(draw, n):
    gens = draw(st.lists(covers(n), min_size=1, max_size=3))
    return generate(GroundSet(n), gens)


sizes = st.integers(1, 5)


@pytest.fixture(scope="session")
def all_structures():
    return [mu for n in (1, 2, 3) for mu in enumerate_structures(GroundSet(n))]
