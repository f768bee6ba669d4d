import random

import pytest

from OrbifoldBench.core.errors import MalformedElementError, ValidationError
from OrbifoldBench.core.groups import GroupSpec, Triple


def test_group_law():
    G = GroupSpec([3, 4])
    assert G.group_order == 12
    assert G.multiply((2, 3), (2, 2)) == (1, 1)
    assert G.inverse((1, 1)) == (2, 3)
    assert G.power((1, 1), 3) == (0, 3)
    assert G.identity == (0, 0)


def test_order():
    G = GroupSpec([3, 4])
    assert G.order((0, 0)) == 1
    assert G.order((1, 0)) == 3
    assert G.order((0, 2)) == 2
    assert G.order((1, 2)) == 6


def test_elements_identity_first():
    G = GroupSpec([2, 3])
    elements = G.elements()
    assert len(elements) == 6
    assert elements[0] == (0, 0)
    assert elements == sorted(elements)


def test_subgroup_order():
    G = GroupSpec([2, 2])
    assert G.subgroup_order([]) == 1
    assert G.subgroup_order([(1, 0)]) == 2
    assert G.subgroup_order([(1, 0), (0, 1)]) == 4
    assert GroupSpec([6]).subgroup_order([(2,), (3,)]) == 6


def test_enumerate_triples_z3():
    G = GroupSpec([3])
    triples = G.enumerate_triples()
    assert len(triples) == 9
    assert Triple((1,), (1,), (1,)) in triples
    assert Triple((2,), (2,), (2,)) in triples
    for t in triples:
        assert G.is_identity(G.multiply(G.multiply(t.g1, t.g2), t.g3))


def test_enumerate_triples_order():
    G = GroupSpec([2, 2])
    triples = G.enumerate_triples()
    assert len(triples) == 16
    assert [(t.g1, t.g2) for t in triples] == sorted((t.g1, t.g2) for t in triples)


def test_validate():
    G = GroupSpec([3])
    with pytest.raises(MalformedElementError):
        G.validate((3,))
    with pytest.raises(MalformedElementError):
        G.validate((1, 0))
    with pytest.raises(MalformedElementError):
        G.multiply((1,), (-1,))


@pytest.mark.parametrize('orders', [[], [0], [2, -1], [1.5], [True]])
def test_bad_orders(orders):
    with pytest.raises(ValidationError):
        GroupSpec(orders)


def test_worked_examples():
    assert GroupSpec([6]).order((4,)) == 3
    assert GroupSpec([3]).inverse((1,)) == (2,)
    assert GroupSpec([4, 2]).inverse((3, 1)) == (1, 1)
    assert GroupSpec([3]).subgroup_order([(1,), (1,)]) == 3
    assert GroupSpec([2]).enumerate_triples() == [Triple((0,), (0,), (0,)), Triple((0,), (1,), (1,)),
                                                  Triple((1,), (0,), (1,)), Triple((1,), (1,), (0,))]
    assert GroupSpec([1]).enumerate_triples() == [Triple((0,), (0,), (0,))]


@pytest.mark.parametrize('seed', range(20))
def test_inverse_and_cyclic_subgroup_orders(seed):
    rng = random.Random(seed)
    G = GroupSpec([rng.randint(1, 6) for _ in range(rng.randint(1, 2))])

    for g in G.elements():
        assert G.order(G.inverse(g)) == G.order(g)
        assert G.subgroup_order([g]) == G.order(g)
        assert G.is_identity(G.multiply(g, G.inverse(g)))
        assert G.is_identity(G.power(g, G.order(g)))

    assert len(G.enumerate_triples()) == G.group_order ** 2
