"""BPS characters and the cohomological integrality identity.

For a pair (V, G) the space P of the trivial class is a complement of the sum
of the images of proper inductions inside H*(Vbar/Gbar), where bar denotes the
quotient by the connected central subgroup acting trivially on V.  Only
characters are computed: ambient minus image, degree by degree.

All degrees are shifted degrees: cohomological degree minus d, where d is
dim V - dim G of the pair the space lives on.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coh import GradedCharacter, image_graded_character, invariant_basis, molien_dims, molien_trace, restrict_to_subspace, symmetric_power_traces
from .group_rep import DescriptorError, PairVG, central_quotient, is_symmetric, quotient_map, sub_pair
from .lattice import RationalSubspace
from .poset import PosetData, enumerate_classes, poset_data
from .sign import epsilon
from .weyl import GroupElement


class ComplementError(ArithmeticError):
    pass


@dataclass
class BpsRecord:
    class_key: tuple
    p_char: GradedCharacter
    g_lambda_dim: int
    lifts: tuple[GroupElement, ...] = ()

    @property
    def stable(self) -> bool:
        return bool(self.p_char.dims())


@dataclass
class Options:
    """Knobs that must not change any result (order) or that break it on purpose (drop)."""

    order: str = "lex"
    class_order_reversed: bool = False
    drop: int = 0


class Memo:
    """Memo table: concurrent reads, exclusive insertion, idempotent values."""

    def __init__(self):
        self._table: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            return self._table.setdefault(key, value)

    def __len__(self):
        return len(self._table)


_default_memo = Memo()


def bps_character(pair_vg: PairVG, cutoff: int, lifts: Sequence[GroupElement] | None = None,
                  memo: Memo | None = None, options: Options | None = None) -> BpsRecord:
    """Character of P for the trivial class of `pair_vg`, up to shifted degree `cutoff`.

    `lifts` are elements of the ambient lattice normalising the pair; their
    traces on P are recorded, in order.  The first lift must be the identity
    (it carries dimensions); by default it is the only one.
    """
    if not is_symmetric(pair_vg.rep):
        raise DescriptorError("representation is not symmetric")
    options = options or Options()
    memo = _default_memo if memo is None else memo
    if lifts is None:
        lifts = [GroupElement.identity(pair_vg.rank)]
    lifts = tuple(lifts)
    if not lifts or not lifts[0].is_identity():
        raise ValueError("the first lift must be the identity")
    key = (pair_vg.key(), tuple(w.matrix for w in lifts), cutoff, options.order,
           options.class_order_reversed, options.drop)
    hit = memo.get(key)
    if hit is not None:
        return hit

    qmap = quotient_map(pair_vg)
    qpair, g0_dim = central_quotient(pair_vg)
    qlifts = [qmap.restrict_element(w) for w in lifts]
    classes = [c for c in enumerate_classes(qpair) if not c.is_trivial_in(qpair)]
    if options.class_order_reversed:
        classes.reverse()

    # shifted degrees of the quotient differ from those of pair_vg by g0_dim
    qcut = cutoff - g0_dim
    image, img_char = image_graded_character(qpair, classes, qcut, qlifts, options.order, options.drop)
    entries = {}
    for k in itertools.count():
        qshift = 2 * k - qpair.d
        if qshift > qcut:
            break
        amb = invariant_basis(qpair.group.weyl, k, options.order)
        amb_tr = [amb.trace(w) if amb.dim else Fraction(0) for w in qlifts]
        traces = tuple(a - b for a, b in zip(amb_tr, img_char.entries[qshift]))
        if traces[0] < 0 or traces[0].denominator != 1:
            raise ComplementError(f"complement ill-defined in degree {qshift + g0_dim}: dim {traces[0]}")
        entries[qshift + g0_dim] = traces
    p_char = GradedCharacter(len(lifts), entries, cutoff)
    rec = BpsRecord((pair_vg.rep.weights, pair_vg.group.roots), p_char, g0_dim, lifts)
    bound = pair_vg.rep.dim + pair_vg.group.dim
    for deg in p_char.support():
        if abs(deg) > bound:
            raise ComplementError(f"P supported in degree {deg}, outside [-{bound}, {bound}]")
    return memo.put(key, rec)


def isotypic_dims(p: GradedCharacter, g_lambda_space: RationalSubspace, eps: dict, cutoff: int) -> dict[int, int]:
    """Graded dimensions of the eps-isotypic part of P (x) H*(pt/G_lam).

    `eps` maps each lift (coset representative, in the order used for p) to +-1.
    """
    lifts = list(eps)
    if len(lifts) != p.group_order:
        raise ValueError("eps must list one sign per lift of p")
    if not p.entries:
        return {}
    lo = min(p.entries)
    span = max(0, (cutoff - lo) // 2)
    sym = [symmetric_power_traces(restrict_to_subspace(w.inverse(), g_lambda_space), span) for w in lifts]
    out = {}
    for n in range(lo, cutoff + 1):
        total = Fraction(0)
        for i, w in enumerate(lifts):
            s = Fraction(0)
            for b in range(0, (n - lo) // 2 + 1):
                a = n - 2 * b
                s += p.trace(a, i) * sym[i][b]
            total += eps[w] * s
        v = total / len(lifts)
        if v.denominator != 1:
            raise ArithmeticError(f"isotypic dimension {v} in degree {n} is not an integer")
        if v:
            out[n] = int(v)
    return out


@dataclass
class OrbitContribution:
    orbit: tuple[int, ...]
    class_index: int
    relative_weyl_order: int
    eps: tuple[int, ...]
    p_dims: dict[int, int]
    dims: dict[int, int]


@dataclass
class IntegralityReport:
    target_series: dict[int, int]
    contributions: list[OrbitContribution]
    residual: dict[int, int]
    verified_to: int
    passed: bool
    n_classes: int = 0

    def to_json(self) -> dict:
        def keyed(m):
            return {str(k): v for k, v in sorted(m.items())}
        return {
            "verified_to": self.verified_to,
            "pass": self.passed,
            "n_classes": self.n_classes,
            "target_series": keyed(self.target_series),
            "contributions": [
                {
                    "orbit": list(c.orbit),
                    "class_index": c.class_index,
                    "relative_weyl_order": c.relative_weyl_order,
                    "epsilon": list(c.eps),
                    "p_dims": keyed(c.p_dims),
                    "dims": keyed(c.dims),
                }
                for c in self.contributions
            ],
            "residual": keyed(self.residual),
        }


def target_series(pair_vg: PairVG, cutoff: int) -> dict[int, int]:
    """Shifted Poincare series of H*(V/G) = H*(pt/G), by Molien averaging over W."""
    max_k = (cutoff + pair_vg.d) // 2
    if max_k < 0:
        return {}
    dims = molien_dims(pair_vg.group.weyl, max_k)
    return {2 * k - pair_vg.d: v for k, v in enumerate(dims) if v}


def verify_integrality(pair_vg: PairVG, cutoff: int, memo: Memo | None = None,
                       options: Options | None = None, poset: PosetData | None = None) -> IntegralityReport:
    if not is_symmetric(pair_vg.rep):
        raise DescriptorError("representation is not symmetric")
    poset = poset or poset_data(pair_vg)
    target = target_series(pair_vg, cutoff)
    contributions = []
    for orb in poset.orbits:
        i = orb[0]
        c = poset.classes[i]
        stab = poset.stabilizers[i]
        lifts = stab.coset_reps
        sub = sub_pair(pair_vg, c.torus)
        rec = bps_character(sub, cutoff, lifts, memo, options)
        eps = {w: epsilon(c, w, pair_vg) for w in lifts}
        dims = isotypic_dims(rec.p_char, c.torus, eps, cutoff)
        contributions.append(OrbitContribution(tuple(orb), i, len(lifts), tuple(eps.values()),
                                               rec.p_char.dims(), dims))
    degrees = set(target)
    for con in contributions:
        degrees.update(con.dims)
    residual = {}
    for n in sorted(degrees):
        if n > cutoff:
            continue
        v = target.get(n, 0) - sum(con.dims.get(n, 0) for con in contributions)
        if v:
            residual[n] = v
    return IntegralityReport(target, contributions, residual, cutoff, not residual, len(poset.classes))


@dataclass
class Rank1Report:
    engine: dict[int, int]
    closed_form: dict[int, int]
    mismatches: dict[int, tuple[int, int]]
    total_dim: int
    palindromic: bool

    @property
    def match(self) -> bool:
        return not self.mismatches


def rank1_closed_form(weights: Sequence[int]) -> dict[int, int]:
    """One dimension in each degree -(dim V - 1 - 2j), j < sum_{k>0} dim V_k."""
    dim_v = len(weights)
    m = sum(1 for k in weights if k > 0)
    return {-(dim_v - 1 - 2 * j): 1 for j in range(m)}


def rank1_conjecture_check(pair_vg: PairVG, cutoff: int, memo: Memo | None = None) -> Rank1Report:
    if pair_vg.rank != 1 or pair_vg.group.roots or pair_vg.group.dim != 1:
        raise DescriptorError("rank-1 check needs the rank-1 torus")
    ws = [b[0] for b in pair_vg.rep.weights]
    if not any(ws):
        raise DescriptorError("rank-1 check needs a nonzero weight")
    rec = bps_character(pair_vg, cutoff, memo=memo)
    engine = rec.p_char.dims()
    closed = {k: v for k, v in rank1_closed_form(ws).items() if k <= cutoff}
    mism = {}
    for deg in sorted(set(engine) | set(closed)):
        if engine.get(deg, 0) != closed.get(deg, 0):
            mism[deg] = (engine.get(deg, 0), closed.get(deg, 0))
    return Rank1Report(engine, closed, mism, sum(engine.values()), _palindromic(engine))


def _palindromic(dims: dict[int, int]) -> bool:
    """Dimension vector symmetric about the midpoint of its support."""
    if not dims:
        return True
    lo, hi = min(dims), max(dims)
    return all(dims.get(n, 0) == dims.get(lo + hi - n, 0) for n in range(lo, hi + 1))
