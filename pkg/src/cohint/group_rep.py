"""Reductive groups and representations as presented data.

A group is a rank, a multiset of roots and a Weyl matrix group; a
representation is a multiset of weights.  Nothing is classified or checked
against an actual algebraic group beyond the symmetry of the root multiset and
Weyl stability.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import lattice
from .lattice import RationalSubspace, common_kernel, pair
from .weyl import FiniteGroup, GroupElement, generate, pointwise_stabilizer


class DescriptorError(ValueError):
    pass


Weight = tuple  # tuple of ints


def _multiset(forms: Iterable[Sequence]) -> tuple[Weight, ...]:
    return tuple(sorted(tuple(int(x) for x in f) for f in forms))


def _neg(f: Weight) -> Weight:
    return tuple(-x for x in f)


def _is_symmetric_multiset(forms: Sequence[Weight]) -> bool:
    counts = Counter(forms)
    return all(counts[_neg(f)] == m for f, m in counts.items())


@dataclass(frozen=True)
class GroupDescriptor:
    rank: int
    roots: tuple[Weight, ...]
    weyl: FiniteGroup
    dim: int
    label: str = ""

    @classmethod
    def make(cls, rank: int, roots: Iterable[Sequence[int]], weyl: FiniteGroup, label: str = "",
             dim: int | None = None) -> "GroupDescriptor":
        roots = _multiset(roots)
        if dim is None:
            dim = rank + len(roots)
        g = cls(rank, roots, weyl, dim, label)
        g.validate()
        return g

    def validate(self) -> None:
        for a in self.roots:
            if len(a) != self.rank:
                raise DescriptorError(f"root {a} does not have length {self.rank}")
            if not any(a):
                raise DescriptorError("0 is not allowed as a root")
        if not _is_symmetric_multiset(self.roots):
            raise DescriptorError("root multiset is not symmetric")
        if self.weyl.rank != self.rank:
            raise DescriptorError("Weyl group rank differs from the group rank")
        for w in self.weyl.generators or self.weyl.elements:
            if _multiset_act(w, self.roots) != self.roots:
                raise DescriptorError(f"Weyl element {w.matrix} does not permute the roots")


def _multiset_act(w: GroupElement, forms: Sequence[Weight]) -> tuple:
    return tuple(sorted(w.act_on_weight(f) for f in forms))


@dataclass(frozen=True)
class SymmetricRep:
    """A representation given by its weight multiset (zero weights allowed)."""

    rank: int
    weights: tuple[Weight, ...]

    @classmethod
    def make(cls, rank: int, weights: Iterable[Sequence[int]]) -> "SymmetricRep":
        ws = _multiset(weights)
        for w in ws:
            if len(w) != rank:
                raise DescriptorError(f"weight {w} does not have length {rank}")
        return cls(rank, ws)

    @classmethod
    def with_multiplicities(cls, rank: int, pairs: Iterable[tuple[Sequence[int], int]]) -> "SymmetricRep":
        out = []
        for coeffs, mult in pairs:
            if mult < 0:
                raise DescriptorError(f"negative multiplicity for weight {coeffs}")
            out += [tuple(coeffs)] * mult
        return cls.make(rank, out)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def multiplicities(self) -> list[tuple[Weight, int]]:
        return sorted(Counter(self.weights).items())

    def __add__(self, other: "SymmetricRep") -> "SymmetricRep":
        return SymmetricRep.make(self.rank, self.weights + other.weights)


@dataclass(frozen=True)
class PairVG:
    rep: SymmetricRep
    group: GroupDescriptor

    def __post_init__(self):
        if self.rep.rank != self.group.rank:
            raise DescriptorError(
                f"representation rank {self.rep.rank} differs from group rank {self.group.rank}"
            )
        if _multiset_act_check(self.group.weyl, self.rep.weights) is False:
            raise DescriptorError("Weyl group does not permute the weights of the representation")

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def d(self) -> int:
        """dim V/G = dim V - dim G."""
        return self.rep.dim - self.group.dim

    def forms(self) -> list[Weight]:
        return list(self.rep.weights) + list(self.group.roots)

    def key(self) -> tuple:
        """Hashable description, used for memoisation."""
        return (
            self.rank,
            self.rep.weights,
            self.group.roots,
            self.group.dim,
            tuple(sorted(g.matrix for g in self.group.weyl)),
        )


def _multiset_act_check(weyl: FiniteGroup, forms: Sequence[Weight]) -> bool:
    forms = tuple(sorted(forms))
    return all(_multiset_act(w, forms) == forms for w in (weyl.generators or weyl.elements))


def is_symmetric(rep: SymmetricRep) -> bool:
    return _is_symmetric_multiset(rep.weights)


# -- standard families -----------------------------------------------------

def _perm_matrix(perm: Sequence[int]) -> GroupElement:
    n = len(perm)
    # sends e_i to e_perm[i]
    return GroupElement.of([[int(perm[j] == i) for j in range(n)] for i in range(n)])


def _symmetric_group_generators(n: int) -> list[GroupElement]:
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(_perm_matrix(perm))
    return gens


def torus(r: int) -> GroupDescriptor:
    return GroupDescriptor.make(r, [], generate([], rank=r), label=f"torus({r})")


def gl(n: int) -> GroupDescriptor:
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i] += 1
                v[j] -= 1
                roots.append(v)
    weyl = generate(_symmetric_group_generators(n), rank=n)
    return GroupDescriptor.make(n, roots, weyl, label=f"gl({n})")


def sl_coroot_coordinates(gl_weight: Sequence[int]) -> Weight:
    """Restrict a gl(n) weight to the coroot lattice of sl(n).

    The cocharacter lattice of sl(n) is taken with basis e_i - e_{i+1}.
    """
    n = len(gl_weight)
    return tuple(gl_weight[i] - gl_weight[i + 1] for i in range(n - 1))


def sl(n: int) -> GroupDescriptor:
    """sl(n) on its rank n-1 coroot lattice (basis e_i - e_{i+1})."""
    if n < 1:
        raise DescriptorError("sl(n) needs n >= 1")
    roots = [sl_coroot_coordinates(a) for a in gl(n).roots]
    gens = []
    for s in _symmetric_group_generators(n):
        # action of the permutation on e_k - e_{k+1}, rewritten in that basis
        cols = []
        for k in range(n - 1):
            v = [0] * n
            v[k], v[k + 1] = 1, -1
            img = s.act(v)
            # coordinates in the basis e_i - e_{i+1}: partial sums
            coords, acc = [], 0
            for i in range(n - 1):
                acc += img[i]
                coords.append(acc)
            cols.append(coords)
        gens.append(GroupElement.of([[cols[j][i] for j in range(n - 1)] for i in range(n - 1)]))
    weyl = generate(gens, rank=n - 1)
    return GroupDescriptor.make(n - 1, roots, weyl, label=f"sl({n})")


def product(*factors: GroupDescriptor) -> GroupDescriptor:
    rank = sum(f.rank for f in factors)
    roots = []
    gens = []
    offset = 0
    for f in factors:
        for a in f.roots:
            roots.append([0] * offset + list(a) + [0] * (rank - offset - f.rank))
        for g in f.weyl.generators or f.weyl.elements:
            m = [[int(i == j) for j in range(rank)] for i in range(rank)]
            for i in range(f.rank):
                for j in range(f.rank):
                    m[offset + i][offset + j] = g.matrix[i][j]
            gens.append(GroupElement.of(m))
        offset += f.rank
    weyl = generate(gens, rank=rank)
    label = " x ".join(f.label for f in factors)
    return GroupDescriptor.make(rank, roots, weyl, label=label, dim=sum(f.dim for f in factors))


def raw(rank: int, roots: Iterable[Sequence[int]], weyl_generators: Iterable[Sequence[Sequence]],
        label: str = "raw", dim: int | None = None) -> GroupDescriptor:
    weyl = generate([GroupElement.of(m) for m in weyl_generators], rank=rank)
    return GroupDescriptor.make(rank, roots, weyl, label=label, dim=dim)


def build_standard(family: str, *params) -> GroupDescriptor:
    builders = {"torus": torus, "gl": gl, "sl": sl, "product": product}
    if family not in builders:
        raise DescriptorError(f"unknown family {family!r}")
    return builders[family](*params)


def adjoint(group: GroupDescriptor) -> SymmetricRep:
    zero = (0,) * group.rank
    return SymmetricRep.make(group.rank, list(group.roots) + [zero] * (group.dim - len(group.roots)))


# -- Levi subgroups and fixed loci ------------------------------------------

def levi(group: GroupDescriptor, lam: Sequence[int]) -> GroupDescriptor:
    """Centraliser of a cocharacter: roots vanishing on it, Weyl group fixing it."""
    roots = [a for a in group.roots if pair(lam, a) == 0]
    line = RationalSubspace.span([lam], group.rank) if any(lam) else RationalSubspace.zero(group.rank)
    weyl = pointwise_stabilizer(group.weyl, line)
    return GroupDescriptor.make(group.rank, roots, weyl, label=f"levi({group.label})")


def fixed_and_attracting(rep: SymmetricRep, group: GroupDescriptor, lam: Sequence[int]) -> tuple[SymmetricRep, int, int]:
    """(V^lam, d_lam, r_lam).

    d_lam = dim V^lam - dim G^lam; r_lam is the number of weights of V
    positive on lam minus the number of roots positive on lam.
    """
    fixed = [b for b in rep.weights if pair(lam, b) == 0]
    levi_roots = [a for a in group.roots if pair(lam, a) == 0]
    dim_levi = group.dim - (len(group.roots) - len(levi_roots))
    d = len(fixed) - dim_levi
    r = sum(1 for b in rep.weights if pair(lam, b) > 0) - sum(1 for a in group.roots if pair(lam, a) > 0)
    return SymmetricRep.make(rep.rank, fixed), d, r


def sub_pair(pair_vg: PairVG, torus_space: RationalSubspace) -> PairVG:
    """The pair (V^lam, G^lam) attached to the class whose torus is `torus_space`."""
    weights = [b for b in pair_vg.rep.weights if torus_space.vanishes(b)]
    roots = [a for a in pair_vg.group.roots if torus_space.vanishes(a)]
    g = pair_vg.group
    dim = g.dim - (len(g.roots) - len(roots))
    weyl = pointwise_stabilizer(g.weyl, torus_space)
    levi_g = GroupDescriptor(g.rank, tuple(sorted(roots)), weyl, dim, f"levi({g.label})")
    return PairVG(SymmetricRep.make(pair_vg.rank, weights), levi_g)


# -- central quotient ---------------------------------------------------------

@dataclass(frozen=True)
class QuotientMap:
    """Coordinates on the quotient of Q^r by the central kernel g0.

    `complement` rows l_1..l_k span a complement of g0; a weight beta
    vanishing on g0 restricts to (<l_i, beta>)_i.
    """

    ambient: int
    g0: RationalSubspace
    complement: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.complement)

    def restrict_weight(self, beta: Sequence[int]) -> Weight:
        return tuple(pair(l, beta) for l in self.complement)

    def restrict_element(self, w: GroupElement) -> GroupElement:
        """Matrix of w on Q^r/g0 in the complement basis (w must preserve g0)."""
        k = self.rank
        basis = [list(l) for l in self.complement] + [list(b) for b in self.g0.basis]
        cols = []
        for l in self.complement:
            coeffs = lattice.solve(basis, w.act(l))
            if coeffs is None:
                raise DescriptorError("complement basis does not span the ambient space")
            cols.append(coeffs[:k])
        return GroupElement.of([[cols[j][i] for j in range(k)] for i in range(k)])


def quotient_map(pair_vg: PairVG) -> QuotientMap:
    g0 = common_kernel(pair_vg.forms(), pair_vg.rank)
    comp = common_kernel(g0.basis, pair_vg.rank) if g0.dim else RationalSubspace.full(pair_vg.rank)
    for w in pair_vg.group.weyl.generators or pair_vg.group.weyl.elements:
        if w.act_on_subspace(g0) != g0:
            raise DescriptorError("Weyl group does not preserve the central kernel")
    return QuotientMap(pair_vg.rank, g0, tuple(comp.integer_basis()))


def central_quotient(pair_vg: PairVG) -> tuple[PairVG, int]:
    """Divide out the central subgroup acting trivially on V (identity component only)."""
    q = quotient_map(pair_vg)
    k = q.rank
    weights = [q.restrict_weight(b) for b in pair_vg.rep.weights]
    roots = [q.restrict_weight(a) for a in pair_vg.group.roots]
    gens = []
    seen = set()
    for w in pair_vg.group.weyl:
        wb = q.restrict_element(w)
        if wb not in seen:
            seen.add(wb)
            gens.append(wb)
    weyl = generate(gens, rank=k)
    g = pair_vg.group
    group = GroupDescriptor.make(k, roots, weyl, label=f"{g.label}/G0", dim=g.dim - q.g0.dim)
    return PairVG(SymmetricRep.make(k, weights), group), q.g0.dim
