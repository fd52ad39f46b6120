"""Partition classes of cocharacters and their Weyl structure.

For a linear representation a class is determined by the flat of the
arrangement cut out by the weights of V and the roots of G: the class of a
cocharacter lam is the flat spanned by the common kernel of the forms
vanishing on lam.  The trivial class (lam = 0) is the smallest flat, g0.
"""
from __future__ import annotations

from collections import Counter, deque
from math import gcd
from dataclasses import dataclass
from typing import Sequence

from .group_rep import DescriptorError, PairVG, Weight, is_symmetric, sub_pair
from .lattice import RationalSubspace, common_kernel, generic_point, pair
from .weyl import (
    FiniteGroup,
    GroupElement,
    coset_representatives,
    orbits,
    pointwise_stabilizer,
    setwise_stabilizer,
)


class PosetError(RuntimeError):
    pass


@dataclass(frozen=True)
class PartitionClass:
    v_fixed_key: tuple[Weight, ...]
    root_key: tuple[Weight, ...]
    rep_cochar: tuple[int, ...]
    torus: RationalSubspace
    d: int
    r: int

    @property
    def key(self) -> tuple:
        return (self.v_fixed_key, self.root_key)

    @property
    def g_lambda_space(self) -> RationalSubspace:
        return self.torus

    @property
    def g_lambda_dim(self) -> int:
        return self.torus.dim

    def is_trivial_in(self, pair_vg: PairVG) -> bool:
        return len(self.v_fixed_key) == pair_vg.rep.dim and len(self.root_key) == len(pair_vg.group.roots)


def _hyperplanes(forms: Sequence[Weight]) -> list[Weight]:
    """Distinct hyperplanes of the nonzero forms, one normalised normal each."""
    out = []
    seen = set()
    for f in forms:
        if not any(f):
            continue
        lead = next(x for x in f if x != 0)
        g = 0
        for x in f:
            g = gcd(g, x)
        n = tuple((x // g) * (1 if lead > 0 else -1) for x in f)
        if n not in seen:
            seen.add(n)
            out.append(n)
    return sorted(out)


def flats(forms: Sequence[Weight], rank: int) -> list[RationalSubspace]:
    """All intersections of hyperplanes ker(beta), including the whole space.

    Obtained by closing {Q^r} under intersection with single hyperplanes.
    """
    hyps = _hyperplanes(forms)
    whole = RationalSubspace.full(rank)
    found = {whole: None}
    queue = deque([whole])
    while queue:
        f = queue.popleft()
        for h in hyps:
            if f.vanishes(h):
                continue
            g = f.intersect(common_kernel([h], rank))
            if g not in found:
                found[g] = None
                queue.append(g)
    return list(found)


def class_of_flat(pair_vg: PairVG, flat: RationalSubspace) -> PartitionClass:
    forms = pair_vg.forms()
    avoid = _hyperplanes([f for f in forms if not flat.vanishes(f)])
    lam = generic_point(flat, avoid)
    return class_of_cocharacter(pair_vg, lam)


def class_of_cocharacter(pair_vg: PairVG, lam: Sequence[int]) -> PartitionClass:
    lam = tuple(lam)
    v_fixed = tuple(sorted(b for b in pair_vg.rep.weights if pair(lam, b) == 0))
    roots = tuple(sorted(a for a in pair_vg.group.roots if pair(lam, a) == 0))
    torus = common_kernel(list(v_fixed) + list(roots), pair_vg.rank)
    g = pair_vg.group
    d = len(v_fixed) - (g.dim - (len(g.roots) - len(roots)))
    r = (sum(1 for b in pair_vg.rep.weights if pair(lam, b) > 0)
         - sum(1 for a in g.roots if pair(lam, a) > 0))
    return PartitionClass(v_fixed, roots, lam, torus, d, r)


def enumerate_classes(pair_vg: PairVG) -> list[PartitionClass]:
    """Every class of cocharacters, trivial class first, then by torus dimension."""
    if not is_symmetric(pair_vg.rep):
        raise DescriptorError("representation is not symmetric")
    out = []
    for flat in flats(pair_vg.forms(), pair_vg.rank):
        c = class_of_flat(pair_vg, flat)
        if c.torus != flat:
            raise PosetError(f"class torus {c.torus} differs from its flat {flat}")
        out.append(c)
    out.sort(key=lambda c: (c.torus.dim, c.torus.basis))
    return out


def leq(c1: PartitionClass, c2: PartitionClass) -> bool:
    """c1 <= c2 iff V^c1 in V^c2 and G^c1 in G^c2 (multiset inclusion)."""
    return _sub_multiset(c1.v_fixed_key, c2.v_fixed_key) and _sub_multiset(c1.root_key, c2.root_key)


def _sub_multiset(a: Sequence, b: Sequence) -> bool:
    cb = Counter(b)
    for x, m in Counter(a).items():
        if cb[x] < m:
            return False
    return True


def subclasses_of(c: PartitionClass, pair_vg: PairVG) -> list[PartitionClass]:
    """Classes of (V^lam, G^lam), realised as classes of (V, G) below c."""
    sub = sub_pair(pair_vg, c.torus)
    out = []
    for sc in enumerate_classes(sub):
        big = class_of_flat(pair_vg, sc.torus)
        if big.key != sc.key:
            raise PosetError("class of the Levi pair does not embed with identical keys")
        out.append(big)
    return out


@dataclass(frozen=True)
class ClassStabilizer:
    setwise: FiniteGroup          # W_lam
    pointwise: FiniteGroup        # W^lam
    coset_reps: tuple[GroupElement, ...]  # lifts of W_lam / W^lam

    @property
    def relative_order(self) -> int:
        return len(self.coset_reps)


@dataclass(frozen=True)
class PosetData:
    classes: tuple[PartitionClass, ...]
    orbits: tuple[tuple[int, ...], ...]
    stabilizers: tuple[ClassStabilizer, ...]
    hasse: tuple[tuple[int, int], ...]

    def orbit_of(self, i: int) -> tuple[int, ...]:
        return next(o for o in self.orbits if i in o)

    def index(self, c: PartitionClass) -> int:
        return next(i for i, x in enumerate(self.classes) if x.key == c.key)


def _act_on_torus(w: GroupElement, s: RationalSubspace) -> RationalSubspace:
    return w.act_on_subspace(s)


def weyl_structure(classes: Sequence[PartitionClass], weyl: FiniteGroup) -> PosetData:
    tori = [c.torus for c in classes]
    try:
        orbs = orbits(weyl, tori, _act_on_torus)
    except Exception as exc:
        raise PosetError(f"Weyl action does not permute the classes: {exc}") from exc
    stabs = []
    for c in classes:
        setw = setwise_stabilizer(weyl, c.torus, _act_on_torus)
        pointw = pointwise_stabilizer(weyl, c.torus)
        if not setw.is_normal(pointw):
            raise PosetError("pointwise stabilizer is not normal in the setwise stabilizer")
        reps = coset_representatives(setw, pointw)
        stabs.append(ClassStabilizer(setw, pointw, tuple(reps)))
    return PosetData(tuple(classes), tuple(tuple(o) for o in orbs), tuple(stabs), hasse_edges(classes))


def hasse_edges(classes: Sequence[PartitionClass]) -> tuple[tuple[int, int], ...]:
    """Covering pairs (i, j) with classes[i] < classes[j]."""
    n = len(classes)
    less = [[i != j and leq(classes[i], classes[j]) for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n)):
                edges.append((i, j))
    return tuple(edges)


def poset_data(pair_vg: PairVG) -> PosetData:
    return weyl_structure(enumerate_classes(pair_vg), pair_vg.group.weyl)


def to_dot(data: PosetData, name: str = "partitions") -> str:
    """Hasse diagram in DOT syntax; edges point from the smaller class to the larger."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, c in enumerate(data.classes):
        label = (f"#{i} dim V^l={len(c.v_fixed_key)} roots={len(c.root_key)} "
                 f"dim g_l={c.g_lambda_dim} |Wbar|={data.stabilizers[i].relative_order}")
        lines.append(f'  c{i} [label="{label}"];')
    for i, j in data.hasse:
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
