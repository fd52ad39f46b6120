"""Finite matrix groups acting on the cocharacter lattice.

Group elements are square matrices acting on cocharacters (column vectors).
Weights transform contragrediently, by the inverse transpose, so that the
pairing is invariant.  Groups are enumerated exhaustively; nothing here is
meant for groups beyond a few thousand elements.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .lattice import RationalSubspace, matvec

DEFAULT_CAP = 10080


class GroupError(ValueError):
    pass


def _norm(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def _matmul(a, b):
    n = len(a)
    m = len(b[0])
    return tuple(
        tuple(_norm(sum(a[i][k] * b[k][j] for k in range(len(b)))) for j in range(m))
        for i in range(n)
    )


def _inverse(m):
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(tuple(_norm(x) for x in row[n:]) for row in aug)


@dataclass(frozen=True)
class GroupElement:
    matrix: tuple

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "GroupElement":
        return cls(tuple(tuple(_norm(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, r: int) -> "GroupElement":
        return cls(tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.rank == 0:
            return self
        return GroupElement(_matmul(self.matrix, other.matrix))

    @cached_property
    def _inv(self) -> "GroupElement":
        if self.rank == 0:
            return self
        inv = _inverse(self.matrix)
        if inv is None:
            raise GroupError(f"non-invertible generator {self.matrix}")
        return GroupElement(inv)

    def inverse(self) -> "GroupElement":
        return self._inv

    def is_identity(self) -> bool:
        return self == GroupElement.identity(self.rank)

    def act(self, cochar: Sequence) -> tuple:
        """Action on a cocharacter (or any vector of the torus Lie algebra)."""
        return tuple(_norm(x) for x in matvec(self.matrix, cochar))

    def act_on_weight(self, beta: Sequence) -> tuple:
        """Contragredient action on a linear form: beta -> M^{-T} beta."""
        inv = self.inverse().matrix
        r = self.rank
        return tuple(_norm(sum(inv[k][i] * beta[k] for k in range(r))) for i in range(r))

    def act_on_subspace(self, s: RationalSubspace) -> RationalSubspace:
        return s.transform(self.matrix)


@dataclass(frozen=True)
class FiniteGroup:
    rank: int
    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._index

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.elements)

    def identity(self) -> GroupElement:
        return GroupElement.identity(self.rank)

    def subgroup(self, predicate: Callable[[GroupElement], bool]) -> "FiniteGroup":
        return FiniteGroup(self.rank, tuple(g for g in self.elements if predicate(g)))

    def is_subgroup(self, other: "FiniteGroup") -> bool:
        """True if `other` is a subgroup of self."""
        if other.identity() not in other:
            return False
        if not all(g in self for g in other):
            return False
        return all(a * b.inverse() in other for a in other for b in other)

    def is_normal(self, sub: "FiniteGroup") -> bool:
        return all(g * h * g.inverse() in sub for g in self for h in sub)


def generate(generators: Iterable[GroupElement], rank: int | None = None, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Close a list of generators under multiplication (breadth first)."""
    gens = list(generators)
    if rank is None:
        if not gens:
            raise GroupError("rank required for an empty generator list")
        rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise GroupError(f"generator of rank {g.rank} in a rank-{rank} group")
        g.inverse()  # raises on singular matrices
    e = GroupElement.identity(rank)
    seen = {e: None}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                if len(seen) >= cap:
                    raise GroupError(f"group too large: more than {cap} elements")
                seen[y] = None
                queue.append(y)
    return FiniteGroup(rank, tuple(seen), tuple(gens))


def pointwise_stabilizer(group: FiniteGroup, subspace: RationalSubspace) -> FiniteGroup:
    """Elements fixing every vector of `subspace`."""
    return group.subgroup(lambda g: all(tuple(g.act(b)) == tuple(b) for b in subspace.basis))


def setwise_stabilizer(group: FiniteGroup, key: Hashable, action: Callable[[GroupElement, Hashable], Hashable]) -> FiniteGroup:
    """Elements g with action(g, key) == key."""
    return group.subgroup(lambda g: action(g, key) == key)


def coset_representatives(group: FiniteGroup, sub: FiniteGroup) -> list[GroupElement]:
    """One representative per left coset gH, the first in the stored element order."""
    if not group.is_subgroup(sub):
        raise GroupError("not a subgroup")
    covered = set()
    reps = []
    for g in group:
        if g in covered:
            continue
        reps.append(g)
        covered.update(g * h for h in sub)
    return reps


def orbits(group: FiniteGroup, items: Sequence[Hashable], action: Callable[[GroupElement, Hashable], Hashable]) -> list[list[int]]:
    """Partition the indices of `items` into orbits; errors if the action leaves the set."""
    position = {item: i for i, item in enumerate(items)}
    assigned = [False] * len(items)
    out = []
    for i, item in enumerate(items):
        if assigned[i]:
            continue
        orb = []
        for g in group:
            img = action(g, item)
            if img not in position:
                raise GroupError(f"action does not permute the item set: {img}")
            j = position[img]
            if not assigned[j]:
                assigned[j] = True
                orb.append(j)
        out.append(sorted(orb))
    return out
