"""Group axioms and serialization for the base family catalog."""

import random

import pytest

from srslab.groups import (CyclicGroup, FreeGroup, IntGroup, IntTupleGroup,
                           SymmetricGroup)

FAMILIES = [
    IntGroup(),
    IntTupleGroup(3),
    CyclicGroup(5),
    FreeGroup(2),
    SymmetricGroup(3),
]


def random_element(group, rng, size=6):
    g = group.identity()
    gens = group.generators()
    for _ in range(rng.randrange(size)):
        g = group.mul(g, rng.choice(gens))
    return g


@pytest.mark.parametrize("group", FAMILIES, ids=lambda g: g.name)
def test_group_axioms(group):
    rng = random.Random(7)
    e = group.identity()
    for _ in range(400):
        x, y, z = (random_element(group, rng) for _ in range(3))
        assert group.mul(group.mul(x, y), z) == group.mul(x, group.mul(y, z))
        assert group.mul(x, e) == x and group.mul(e, x) == x
        assert group.mul(x, group.inv(x)) == e
        assert group.mul(group.inv(x), x) == e


@pytest.mark.parametrize("group", FAMILIES, ids=lambda g: g.name)
def test_generators_inverse_closed(group):
    gens = group.generators()
    for g in gens:
        assert group.inv(g) in gens


@pytest.mark.parametrize("group", FAMILIES, ids=lambda g: g.name)
def test_format_parse_roundtrip(group):
    rng = random.Random(11)
    for _ in range(50):
        x = random_element(group, rng)
        assert group.parse_element(group.format_element(x)) == x


def test_free_reduction():
    F = FreeGroup(2)
    assert F.mul((1, 2), (-2, -1)) == ()
    assert F.mul((1,), (1,)) == (1, 1)
    assert F.reduce([1, -1, 2]) == (2,)


def test_symmetric_basics():
    S = SymmetricGroup(3)
    t01 = S.transposition(0, 1)
    t02 = S.transposition(0, 2)
    t12 = S.transposition(1, 2)
    # conjugation (02)(01)(02)^-1 = (12)
    assert S.mul(S.mul(t02, t01), S.inv(t02)) == t12
    assert S.order_of(t01) == 2
    assert S.cyclic_subgroup(t01) == frozenset({S.identity(), t01})
    assert S.center() == frozenset({S.identity()})
    assert len(S.elements()) == 6


def test_cyclic_wraps():
    C = CyclicGroup(5)
    assert C.mul(3, 4) == 2
    assert C.inv(2) == 3
