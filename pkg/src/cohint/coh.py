"""Graded linear algebra on polynomial rings of the torus Lie algebra.

H*(pt/T) is the polynomial ring on the torus Lie algebra, with polynomial
degree k sitting in cohomological degree 2k.  A group element with matrix M
on cocharacters acts on polynomials by (w.f)(x) = f(M^{-1} x), which is the
contragredient action on linear forms.

Induction from a class with representative cocharacter lam is

    Ind_lam(f) = sum over w in W / W^lam of  w . (f * e_lam),
    e_lam = prod(weights of V positive on lam) / prod(roots positive on lam),

computed with the W-invariant denominator prod(all roots) cleared first, so
every intermediate is a polynomial and the final division is exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .group_rep import PairVG
from .lattice import RationalSubspace, pair, rref, solve
from .poset import PartitionClass, class_of_cocharacter
from .weyl import FiniteGroup, GroupElement, coset_representatives, pointwise_stabilizer

Monomial = tuple  # exponent vector
Poly = dict  # Monomial -> Fraction, homogeneous


class InductionError(ArithmeticError):
    pass


# -- polynomial arithmetic ----------------------------------------------------

def monomials(nvars: int, degree: int, order: str = "lex") -> tuple[Monomial, ...]:
    """Exponent vectors of total degree `degree`.

    "lex" lists x_0^d first; "revlex" is the same list reversed.  Only the
    order of the basis changes, never the space.
    """
    return _monomials(nvars, degree, order)


@lru_cache(maxsize=None)
def _monomials(nvars: int, degree: int, order: str) -> tuple[Monomial, ...]:
    if degree < 0:
        return ()
    if nvars == 0:
        out = [()] if degree == 0 else []
    else:
        out = []
        for first in range(degree, -1, -1):
            for rest in _monomials(nvars - 1, degree - first, "lex"):
                out.append((first,) + rest)
    if order == "revlex":
        out.reverse()
    elif order != "lex":
        raise ValueError(f"unknown monomial order {order!r}")
    return tuple(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def poly_add(p: Poly, q: Poly, scale=1) -> Poly:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c != 0}


def linear_form(coeffs: Sequence) -> Poly:
    n = len(coeffs)
    out = {}
    for i, c in enumerate(coeffs):
        if c != 0:
            e = [0] * n
            e[i] = 1
            out[tuple(e)] = Fraction(c)
    return out


def constant(nvars: int, c=1) -> Poly:
    return {(0,) * nvars: Fraction(c)} if c != 0 else {}


def poly_prod(factors: Iterable[Poly], nvars: int) -> Poly:
    out = constant(nvars)
    for f in factors:
        out = poly_mul(out, f)
    return out


def divide_linear(p: Poly, coeffs: Sequence) -> Poly:
    """Exact quotient p / l for a nonzero linear form l; raises if inexact."""
    piv = next(i for i, c in enumerate(coeffs) if c != 0)
    lead = Fraction(coeffs[piv])
    rem = dict(p)
    quo: dict = {}
    # lex order with x_piv first: leading terms always carry x_piv if divisible
    def key(m):
        return (m[piv],) + m

    while rem:
        m = max(rem, key=key)
        c = rem[m]
        if m[piv] == 0:
            raise InductionError("denominator does not clear")
        qm = tuple(e - (1 if i == piv else 0) for i, e in enumerate(m))
        qc = c / lead
        quo[qm] = quo.get(qm, 0) + qc
        for i, a in enumerate(coeffs):
            if a == 0:
                continue
            t = tuple(e + (1 if j == i else 0) for j, e in enumerate(qm))
            v = rem.get(t, 0) - qc * a
            if v == 0:
                rem.pop(t, None)
            else:
                rem[t] = v
    return {m: c for m, c in quo.items() if c != 0}


def poly_degree(p: Poly) -> int | None:
    if not p:
        return None
    return sum(next(iter(p)))


# -- group action on polynomials ----------------------------------------------

class _Action:
    """Memoised action of one group element on monomials."""

    def __init__(self, w: GroupElement):
        inv = w.inverse().matrix
        self.nvars = w.rank
        self.lin = [linear_form(inv[i]) for i in range(self.nvars)]
        self.cache: dict = {(0,) * self.nvars: constant(self.nvars)}

    def monomial(self, m: Monomial) -> Poly:
        hit = self.cache.get(m)
        if hit is not None:
            return hit
        i = next(j for j, e in enumerate(m) if e > 0)
        lower = tuple(e - (1 if j == i else 0) for j, e in enumerate(m))
        img = poly_mul(self.monomial(lower), self.lin[i])
        self.cache[m] = img
        return img

    def __call__(self, p: Poly) -> Poly:
        out: dict = {}
        for m, c in p.items():
            for m2, c2 in self.monomial(m).items():
                out[m2] = out.get(m2, 0) + c * c2
        return {m: c for m, c in out.items() if c != 0}


@lru_cache(maxsize=4096)
def _action(w: GroupElement) -> _Action:
    return _Action(w)


def act(w: GroupElement, p: Poly) -> Poly:
    return _action(w)(p)


# -- subspaces of a fixed degree ----------------------------------------------

@dataclass(frozen=True)
class DegreeSubspace:
    """Subspace of the degree-d polynomials, as RREF rows in a monomial basis."""

    nvars: int
    degree: int
    order: str
    rows: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis_monomials(self) -> tuple[Monomial, ...]:
        return monomials(self.nvars, self.degree, self.order)

    @classmethod
    def spanned_by(cls, polys: Iterable[Poly], nvars: int, degree: int, order: str = "lex") -> "DegreeSubspace":
        monos = monomials(nvars, degree, order)
        vecs = [to_vector(p, monos) for p in polys]
        vecs = [v for v in vecs if any(v)]
        red, piv = rref(vecs, len(monos))
        return cls(nvars, degree, order, tuple(tuple(r) for r in red), tuple(piv))

    def polys(self) -> list[Poly]:
        monos = self.basis_monomials
        return [from_vector(r, monos) for r in self.rows]

    def coordinates(self, p: Poly) -> list[Fraction] | None:
        """Coordinates of p in the RREF basis, or None if p is not in the span."""
        v = to_vector(p, self.basis_monomials)
        coords = [v[j] for j in self.pivots]
        for k, x in enumerate(v):
            if sum(c * r[k] for c, r in zip(coords, self.rows)) != x:
                return None
        return coords

    def trace(self, w: GroupElement) -> Fraction:
        """Trace of w on this subspace; raises if w does not preserve it."""
        tr = Fraction(0)
        for i, p in enumerate(self.polys()):
            coords = self.coordinates(act(w, p))
            if coords is None:
                raise InductionError("group element does not preserve the subspace")
            tr += coords[i]
        return tr


def to_vector(p: Poly, monos: Sequence[Monomial]) -> list[Fraction]:
    return [Fraction(p.get(m, 0)) for m in monos]


def from_vector(v: Sequence, monos: Sequence[Monomial]) -> Poly:
    return {m: Fraction(c) for m, c in zip(monos, v) if c != 0}


# -- invariants and Molien traces ---------------------------------------------

def reynolds(group: FiniteGroup, p: Poly) -> Poly:
    out: dict = {}
    for w in group:
        out = poly_add(out, act(w, p))
    n = len(group)
    return {m: c / n for m, c in out.items()}


def invariant_basis(group: FiniteGroup, degree: int, order: str = "lex") -> DegreeSubspace:
    """Degree-d polynomials fixed by the group, via the Reynolds operator."""
    n = group.rank
    key = (group.elements, degree, order)
    hit = _invariant_cache.get(key)
    if hit is not None:
        return hit
    polys = (reynolds(group, {m: Fraction(1)}) for m in monomials(n, degree, order))
    out = DegreeSubspace.spanned_by(polys, n, degree, order)
    _invariant_cache[key] = out
    return out


_invariant_cache: dict = {}


def charpoly_reversed(matrix: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients of det(1 - t A), lowest degree first (Faddeev-LeVerrier)."""
    n = len(matrix)
    A = [[Fraction(x) for x in row] for row in matrix]
    # c_n t^n + ... of det(tI - A) = t^n + c_1 t^{n-1} + ... + c_n
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prev_c = coeffs[-1]
        M = [[sum(A[i][j] * M[j][l] for j in range(n)) + (prev_c if i == l else 0) for l in range(n)]
             for i in range(n)]
        AM = [[sum(A[i][j] * M[j][l] for j in range(n)) for l in range(n)] for i in range(n)]
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs.append(c)
    # det(1 - tA) = t^n det(1/t - A) = sum c_k t^k
    return coeffs


def restrict_to_subspace(w: GroupElement, subspace: RationalSubspace) -> list[list[Fraction]]:
    """Matrix of w on a w-stable subspace, in the subspace's RREF basis (columns = images)."""
    basis = [list(b) for b in subspace.basis]
    cols = []
    for b in basis:
        c = solve(basis, w.act(b))
        if c is None:
            raise ValueError("element does not preserve the subspace")
        cols.append(c)
    k = len(basis)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def symmetric_power_traces(matrix: Sequence[Sequence], max_degree: int) -> list[Fraction]:
    """Traces of A on Sym^0 .. Sym^max_degree: coefficients of 1/det(1 - tA)."""
    den = charpoly_reversed(matrix)
    out = []
    for d in range(max_degree + 1):
        s = Fraction(1) if d == 0 else Fraction(0)
        for k in range(1, min(d, len(den) - 1) + 1):
            s -= den[k] * out[d - k]
        out.append(s)
    return out


def molien_trace(w: GroupElement, poly_degree: int, subspace: RationalSubspace | None = None) -> Fraction:
    """Trace of w on degree-d polynomial functions on `subspace` (default: everything)."""
    if poly_degree < 0:
        return Fraction(0)
    if subspace is None:
        mat = w.inverse().matrix
    else:
        mat = restrict_to_subspace(w.inverse(), subspace)
    return symmetric_power_traces(mat, poly_degree)[poly_degree]


def molien_dims(group: FiniteGroup, max_degree: int, subspace: RationalSubspace | None = None) -> list[int]:
    """Dimensions of invariant polynomials in degrees 0..max_degree by averaging traces."""
    tot = [Fraction(0)] * (max_degree + 1)
    for w in group:
        mat = w.inverse().matrix if subspace is None else restrict_to_subspace(w.inverse(), subspace)
        for d, t in enumerate(symmetric_power_traces(mat, max_degree)):
            tot[d] += t
    out = []
    for t in tot:
        v = t / len(group)
        if v.denominator != 1:
            raise ArithmeticError("Molien average is not an integer")
        out.append(int(v))
    return out


# -- induction ----------------------------------------------------------------

@dataclass(frozen=True)
class InductionKernel:
    """Everything needed to apply Ind_lam on a pair."""

    lam: tuple
    numerator: tuple            # V-weights positive on lam (after any dropped factors)
    low_roots: tuple            # roots non-positive on lam
    all_roots: tuple
    cosets: tuple[GroupElement, ...]
    source_group: FiniteGroup   # W^lam
    shift: int                  # polynomial degree raised by the map

    @property
    def nvars(self) -> int:
        return len(self.lam)


def induction_kernel(pair_vg: PairVG, lam: Sequence[int], drop: int = 0) -> InductionKernel:
    """Kernel data for the class of `lam`; `drop` removes numerator factors (negative control)."""
    lam = tuple(lam)
    c = class_of_cocharacter(pair_vg, lam)
    weyl = pair_vg.group.weyl
    levi_w = pointwise_stabilizer(weyl, c.torus)
    cosets = tuple(coset_representatives(weyl, levi_w))
    num = tuple(b for b in pair_vg.rep.weights if pair(lam, b) > 0)[drop:]
    low = tuple(a for a in pair_vg.group.roots if pair(lam, a) <= 0)
    return InductionKernel(lam, num, low, pair_vg.group.roots, cosets, levi_w, c.r - drop)


def induce(kernel: InductionKernel, f: Poly) -> Poly:
    n = kernel.nvars
    g = poly_mul(f, poly_prod((linear_form(b) for b in kernel.numerator + kernel.low_roots), n))
    total: dict = {}
    for w in kernel.cosets:
        total = poly_add(total, act(w, g))
    for a in kernel.all_roots:
        total = divide_linear(total, a)
    return total


def induction_matrix(pair_vg: PairVG, lam: Sequence[int], poly_degree: int, order: str = "lex",
                     drop: int = 0) -> tuple[list[list[Fraction]], DegreeSubspace, DegreeSubspace]:
    """Matrix of Ind_lam from W^lam-invariants of degree d to W-invariants of degree d + r.

    Returns (matrix, source, target); matrix[i][j] is the i-th target
    coordinate of the image of the j-th source basis vector.
    """
    k = induction_kernel(pair_vg, lam, drop)
    source = invariant_basis(k.source_group, poly_degree, order)
    target = invariant_basis(pair_vg.group.weyl, poly_degree + k.shift, order)
    cols = []
    for p in source.polys():
        img = induce(k, p)
        coords = target.coordinates(img)
        if coords is None:
            raise InductionError("induced polynomial is not W-invariant")
        cols.append(coords)
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(target.dim)]
    return matrix, source, target


def induction_image(pair_vg: PairVG, classes: Sequence[PartitionClass], poly_degree: int,
                    order: str = "lex", drop: int = 0) -> DegreeSubspace:
    """Span of the images of Ind over `classes` landing in polynomial degree `poly_degree`."""
    n = pair_vg.rank
    images = []
    for c in classes:
        k = induction_kernel(pair_vg, c.rep_cochar, drop)
        src_deg = poly_degree - k.shift
        if src_deg < 0:
            continue
        for p in invariant_basis(k.source_group, src_deg, order).polys():
            images.append(induce(k, p))
    return DegreeSubspace.spanned_by(images, n, poly_degree, order)


@dataclass
class GradedCharacter:
    """Degree -> traces of a fixed list of group elements (the first is the identity)."""

    group_order: int
    entries: dict = field(default_factory=dict)
    cutoff: int = 0

    def dim(self, degree: int) -> int:
        e = self.entries.get(degree)
        return 0 if e is None else int(e[0])

    def dims(self) -> dict[int, int]:
        return {d: int(e[0]) for d, e in sorted(self.entries.items()) if e[0] != 0}

    def support(self) -> list[int]:
        return [d for d, e in sorted(self.entries.items()) if any(x != 0 for x in e)]

    def trace(self, degree: int, i: int) -> Fraction:
        e = self.entries.get(degree)
        return Fraction(0) if e is None else e[i]


def image_graded_character(pair_vg: PairVG, classes: Sequence[PartitionClass], cutoff: int,
                           lifts: Sequence[GroupElement], order: str = "lex",
                           drop: int = 0) -> tuple[dict[int, DegreeSubspace], GradedCharacter]:
    """Induction image per shifted degree (<= cutoff) and the traces of `lifts` on it."""
    d = pair_vg.d
    image: dict[int, DegreeSubspace] = {}
    char = GradedCharacter(len(lifts), {}, cutoff)
    for k in itertools.count():
        shifted = 2 * k - d
        if shifted > cutoff:
            break
        sub = induction_image(pair_vg, classes, k, order, drop)
        image[shifted] = sub
        char.entries[shifted] = tuple(sub.trace(w) if sub.dim else Fraction(0) for w in lifts)
    return image, char
