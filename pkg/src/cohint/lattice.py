"""Exact arithmetic on the cocharacter lattice and its dual.

Cocharacters and weights are plain tuples of ints.  Subspaces of Q^r are
stored by their reduced row-echelon basis, which makes them hashable and
canonical.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple of int or Fraction


class LatticeError(ValueError):
    pass


def pair(lam: Sequence[int], beta: Sequence[int]) -> int:
    """Standard pairing <lam, beta> between a cocharacter and a weight."""
    if len(lam) != len(beta):
        raise LatticeError(
            f"rank mismatch: cocharacter has rank {len(lam)}, weight has rank {len(beta)}"
        )
    return sum(a * b for a, b in zip(lam, beta))


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form over Q.

    Returns the nonzero rows and the list of pivot columns.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    if ncols is None:
        ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        row_r = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : row . v = 0 for every row}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i == target, or None if no solution.

    `basis` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in target) else None
    n = len(target)
    # augmented system: columns are basis vectors
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coeffs[p] = row[k]
    return coeffs


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace of Q^ambient, stored by its canonical RREF basis."""

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "RationalSubspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise LatticeError(f"vector {v} does not live in Q^{ambient}")
        red, _ = rref(vecs, ambient)
        return cls(ambient, tuple(tuple(row) for row in red))

    @classmethod
    def full(cls, ambient: int) -> "RationalSubspace":
        return cls.span(
            [[1 if i == j else 0 for j in range(ambient)] for i in range(ambient)], ambient
        )

    @classmethod
    def zero(cls, ambient: int) -> "RationalSubspace":
        return cls(ambient, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return rank(list(self.basis) + [list(v)]) == self.dim

    def contains_subspace(self, other: "RationalSubspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def intersect(self, other: "RationalSubspace") -> "RationalSubspace":
        # kernel of the combined annihilators
        ann = self.annihilator() + other.annihilator()
        return RationalSubspace.span(nullspace(ann, self.ambient), self.ambient)

    def annihilator(self) -> list[list[Fraction]]:
        """Basis of the linear forms vanishing on this subspace."""
        return nullspace(self.basis, self.ambient)

    def integer_basis(self) -> list[tuple[int, ...]]:
        return [primitive(b) for b in self.basis]

    def vanishes(self, form: Sequence) -> bool:
        return all(dot(b, form) == 0 for b in self.basis)

    def transform(self, matrix: Sequence[Sequence]) -> "RationalSubspace":
        """Image of the subspace under v -> matrix @ v."""
        return RationalSubspace.span((matvec(matrix, b) for b in self.basis), self.ambient)


def matvec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def common_kernel(forms: Iterable[Sequence[int]], ambient_rank: int) -> RationalSubspace:
    """The subspace {v in Q^r : <v, beta> = 0 for all beta in forms}."""
    forms = [list(f) for f in forms]
    for f in forms:
        if len(f) != ambient_rank:
            raise LatticeError(f"form {f} has length {len(f)}, expected {ambient_rank}")
    return RationalSubspace.span(nullspace(forms, ambient_rank), ambient_rank)


def _coefficient_order(h: int) -> list[int]:
    # 0, 1, -1, 2, -2, ..., h, -h
    out = [0]
    for k in range(1, h + 1):
        out += [k, -k]
    return out


def generic_point(subspace: RationalSubspace, avoid: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Deterministic integer point of `subspace` on which no form in `avoid` vanishes.

    Search order: heights h = 1, 2, ...; at height h, integer coefficient
    vectors c over the primitive-integer RREF basis with max|c_i| == h, in
    lexicographic order where each coordinate runs through 0, 1, -1, 2, -2, ...
    The first hit is returned, scaled to a primitive vector.
    """
    avoid = [tuple(a) for a in avoid]
    for a in avoid:
        if subspace.vanishes(a):
            raise LatticeError(f"form not avoidable: {a} vanishes on the whole subspace")
    basis = subspace.integer_basis()
    if not basis:
        return tuple([0] * subspace.ambient)
    # height bound: each form kills a hyperplane of coefficient space, so the
    # union of len(avoid) hyperplanes misses some point with height <= len(avoid)
    for h in range(1, len(avoid) + 2):
        order = _coefficient_order(h)
        for coeffs in itertools.product(order, repeat=len(basis)):
            if max(abs(c) for c in coeffs) != h:
                continue
            v = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(subspace.ambient))
            if all(pair(v, a) != 0 for a in avoid):
                return primitive(v)
    raise LatticeError("generic point search exhausted")  # unreachable
