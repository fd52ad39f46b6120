"""Test fixtures shared across modules."""
from __future__ import annotations

import random

from cohint.group_rep import PairVG, SymmetricRep, adjoint, gl, raw, sl, sl_coroot_coordinates, torus
from cohint.weyl import GroupElement, generate


def rank1(weights) -> PairVG:
    return PairVG(SymmetricRep.make(1, [(k,) for k in weights]), torus(1))


def t_star_c() -> PairVG:
    return rank1([1, -1])


def t_star_c2() -> PairVG:
    return rank1([1, 1, -1, -1])


def gl2_adjoint() -> PairVG:
    return PairVG(adjoint(gl(2)), gl(2))


def gl2_std_dual() -> PairVG:
    return PairVG(SymmetricRep.make(2, [(1, 0), (0, 1), (-1, 0), (0, -1)]), gl(2))


def sl2_std_dual() -> PairVG:
    ws = [sl_coroot_coordinates(w) for w in [(1, 0), (0, 1), (-1, 0), (0, -1)]]
    return PairVG(SymmetricRep.make(1, ws), sl(2))


def torus2_example() -> PairVG:
    ws = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    return PairVG(SymmetricRep.make(2, ws), torus(2))


def zero_rep() -> PairVG:
    return PairVG(SymmetricRep.make(1, []), torus(1))


def b2_group():
    swap = [[0, 1], [1, 0]]
    flip = [[1, 0], [0, -1]]
    roots = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
    return raw(2, roots, [swap, flip], label="B2")


def swap_torus2() -> PairVG:
    """torus(2) with the coordinate swap supplied as an outer Weyl group."""
    g = raw(2, [], [[[0, 1], [1, 0]]], label="T2 swap", dim=2)
    return PairVG(SymmetricRep.make(2, [(1, 0), (0, 1), (-1, 0), (0, -1)]), g)


def random_rank1_weights(rng: random.Random, max_dim: int = 12, max_k: int = 5) -> list[int]:
    n_pairs = rng.randint(1, max_dim // 2)
    ws = []
    for _ in range(n_pairs):
        k = rng.randint(0, max_k)
        ws += [k, -k]
    if not any(ws):
        ws[0], ws[1] = 1, -1
    return ws


PROPERTY_FIXTURES = {
    "B1": t_star_c,
    "B2": t_star_c2,
    "rank1_2_1": lambda: rank1([2, 1, -1, -2]),
    "rank1_zero": lambda: rank1([3, 0, -3]),
    "gl2_adjoint": gl2_adjoint,
    "sl2_std_dual": sl2_std_dual,
    "torus2": torus2_example,
}
