from __future__ import annotations

import itertools

import pytest

from cohint.lattice import RationalSubspace, pair
from cohint.weyl import (
    GroupElement,
    GroupError,
    coset_representatives,
    generate,
    orbits,
    pointwise_stabilizer,
    setwise_stabilizer,
)

SWAP = GroupElement.of([[0, 1], [1, 0]])
FLIP = GroupElement.of([[1, 0], [0, -1]])


def signed_permutations(n):
    """Oracle for the type B_n Weyl group: every signed permutation matrix."""
    out = set()
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product([1, -1], repeat=n):
            m = [[0] * n for _ in range(n)]
            for i, j in enumerate(perm):
                m[j][i] = signs[i]
            out.add(GroupElement.of(m))
    return out


def test_generate_examples():
    assert generate([SWAP]).order == 2
    assert generate([], rank=2).order == 1
    b2 = generate([SWAP, FLIP])
    assert b2.order == 8
    assert set(b2) == signed_permutations(2)


def test_generate_errors():
    with pytest.raises(GroupError, match="group too large"):
        generate([SWAP, FLIP], cap=5)
    with pytest.raises(GroupError, match="non-invertible"):
        generate([GroupElement.of([[1, 1], [1, 1]])])


def test_generate_idempotent():
    b2 = generate([SWAP, FLIP])
    again = generate(b2.elements, rank=2)
    assert set(again) == set(b2)


def test_group_axioms():
    b2 = generate([SWAP, FLIP])
    for g, h in itertools.product(b2, b2):
        assert g * h in b2
    for g in b2:
        assert g.inverse() in b2
        assert (g * g.inverse()).is_identity()


def test_pointwise_stabilizer_examples():
    s2 = generate([SWAP])
    assert pointwise_stabilizer(s2, RationalSubspace.span([(1, 1)], 2)).order == 2
    assert pointwise_stabilizer(s2, RationalSubspace.full(2)).order == 1
    b2 = generate([SWAP, FLIP])
    stab = pointwise_stabilizer(b2, RationalSubspace.span([(1, 0)], 2))
    brute = {g for g in b2 if g.act((1, 0)) == (1, 0)}
    assert set(stab) == brute == {GroupElement.identity(2), FLIP}


def _act(g, s):
    return g.act_on_subspace(s)


def test_setwise_stabilizer_examples():
    s2 = generate([SWAP])
    zero = RationalSubspace.zero(2)
    assert setwise_stabilizer(s2, zero, _act).order == 2
    axis = RationalSubspace.span([(1, 0)], 2)
    assert set(setwise_stabilizer(s2, axis, _act)) == {GroupElement.identity(2)}
    diag = RationalSubspace.span([(1, 1)], 2)
    assert setwise_stabilizer(s2, diag, _act).order == 2


def test_coset_representatives_examples():
    s2 = generate([SWAP])
    trivial = generate([], rank=2)
    assert coset_representatives(s2, s2) == [GroupElement.identity(2)]
    assert set(coset_representatives(s2, trivial)) == set(s2)
    b2 = generate([SWAP, FLIP])
    h = pointwise_stabilizer(b2, RationalSubspace.span([(1, 0)], 2))
    reps = coset_representatives(b2, h)
    assert len(reps) == b2.order // h.order == 4
    cosets = [frozenset(r * x for x in h) for r in reps]
    assert len(set(cosets)) == 4
    assert sum(len(c) for c in cosets) == b2.order


def test_coset_representatives_not_subgroup():
    s2 = generate([SWAP])
    with pytest.raises(GroupError, match="not a subgroup"):
        coset_representatives(s2, generate([FLIP]))


def test_act_on_weight_is_contragredient():
    g = GroupElement.of([[1, 1], [0, 1]])
    lam, beta = (2, 3), (1, -4)
    assert pair(g.act(lam), g.act_on_weight(beta)) == pair(lam, beta)


def test_orbits_partition():
    b2 = generate([SWAP, FLIP])
    items = [RationalSubspace.span([v], 2) for v in [(1, 0), (0, 1), (1, 1), (1, -1)]]
    assert orbits(b2, items, _act) == [[0, 1], [2, 3]]
