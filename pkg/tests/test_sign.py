from __future__ import annotations

import itertools

import pytest

from cohint.poset import class_of_cocharacter, enumerate_classes, poset_data
from cohint.sign import SignError, epsilon, k_multiset
from cohint.weyl import GroupElement

from pairs import PROPERTY_FIXTURES, gl2_adjoint, gl2_std_dual, sl2_std_dual, swap_torus2, t_star_c, t_star_c2

SWAP = GroupElement.of([[0, 1], [1, 0]])


def test_k_multiset_examples():
    c = enumerate_classes(t_star_c())[1]
    k = k_multiset(c, t_star_c(), (1,))
    assert k.numerator == ((1,),) and k.denominator == ()
    c = enumerate_classes(t_star_c2())[1]
    k = k_multiset(c, t_star_c2(), (1,))
    assert k.numerator == ((1,), (1,)) and k.denominator == ()
    p = gl2_adjoint()
    c = enumerate_classes(p)[1]
    k = k_multiset(c, p, (1, -1))
    assert k.numerator == ((1, -1),) and k.denominator == ((1, -1),)


def test_epsilon_examples():
    p = gl2_adjoint()
    c = enumerate_classes(p)[1]
    assert epsilon(c, GroupElement.identity(2), p) == 1
    assert epsilon(c, SWAP, p) == 1
    q = swap_torus2()
    reg = [c for c in enumerate_classes(q) if not c.v_fixed_key][0]
    k = k_multiset(reg, q)
    assert sorted(k.numerator) == [(0, 1), (1, 0)]
    assert epsilon(reg, SWAP, q) == 1


def test_epsilon_sign_character_sl2():
    p = sl2_std_dual()
    data = poset_data(p)
    reg = data.classes[1]
    signs = sorted(epsilon(reg, w, p) for w in data.stabilizers[1].setwise)
    assert signs == [-1, 1]


def test_epsilon_outside_stabilizer_raises():
    p = gl2_std_dual()
    data = poset_data(p)
    i = next(i for o in data.orbits if len(o) == 2 for i in o)
    with pytest.raises(SignError, match="k not quasi-invariant"):
        epsilon(data.classes[i], SWAP, p)


ALL = dict(PROPERTY_FIXTURES, gl2_std_dual=gl2_std_dual, swap_torus2=swap_torus2)


@pytest.mark.parametrize("name", sorted(ALL))
def test_epsilon_is_a_character_trivial_on_levi(name):
    p = ALL[name]()
    data = poset_data(p)
    for c, s in zip(data.classes, data.stabilizers):
        for w1, w2 in itertools.product(s.setwise, s.setwise):
            assert epsilon(c, w1 * w2, p) == epsilon(c, w1, p) * epsilon(c, w2, p)
        for w in s.pointwise:
            assert epsilon(c, w, p) == 1


@pytest.mark.parametrize("name", sorted(ALL))
def test_epsilon_independent_of_representative(name):
    p = ALL[name]()
    data = poset_data(p)
    for c, s in zip(data.classes, data.stabilizers):
        # a second generic point of the same torus: 7 lam plus a basis vector
        basis = c.torus.integer_basis()
        for shift in basis:
            lam2 = tuple(7 * x + y for x, y in zip(c.rep_cochar, shift))
            if class_of_cocharacter(p, lam2).key != c.key:
                continue
            for w in s.setwise:
                assert epsilon(c, w, p, lam2) == epsilon(c, w, p)
