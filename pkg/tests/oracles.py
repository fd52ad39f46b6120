"""Independent oracles and whole-fixture checks shared by the test modules."""
from __future__ import annotations

import itertools
from fractions import Fraction

from cohint.coh import act, induce, induction_kernel, invariant_basis, monomials, to_vector
from cohint.group_rep import PairVG, sub_pair
from cohint.lattice import pair, rank
from cohint.poset import enumerate_classes, leq


def brute_invariant_dim(group, degree: int) -> int:
    """Dimension of the common fixed space of the generators on degree-d monomials.

    Stacks the matrices of (w - 1) and takes the nullity; no Reynolds
    operator and no Molien series involved.
    """
    monos = monomials(group.rank, degree)
    rows = []
    for w in group.generators or group.elements:
        cols = []
        for m in monos:
            img = to_vector(act(w, {m: Fraction(1)}), monos)
            img[monos.index(m)] -= 1
            cols.append(img)
        rows += [[cols[j][i] for j in range(len(monos))] for i in range(len(monos))]
    return len(monos) - rank(rows)


def series_coefficients(gen_degrees, max_degree: int, numerator_shift: int = 0) -> list[int]:
    """Coefficients of t^shift / prod(1 - t^d) by counting solutions of sum a_i d_i = n."""
    out = []
    for n in range(max_degree + 1):
        m = n - numerator_shift
        if m < 0:
            out.append(0)
            continue
        count = 0
        for combo in itertools.product(*(range(m // d + 1) for d in gen_degrees)):
            if sum(a * d for a, d in zip(combo, gen_degrees)) == m:
                count += 1
        out.append(count)
    return out


def composite(lam_outer, lam_inner, forms):
    """N * lam_outer + lam_inner with N large enough that lam_outer dominates every form."""
    n = 1 + max([abs(pair(lam_inner, f)) for f in forms] + [0])
    return tuple(n * a + b for a, b in zip(lam_outer, lam_inner))


def chains(p: PairVG):
    cs = enumerate_classes(p)
    for c1, c2, c3 in itertools.product(cs, cs, cs):
        if leq(c1, c2) and leq(c2, c3):
            yield c1, c2, c3


def check_associativity(p: PairVG, max_degree: int) -> int:
    """Ind(c2->c3) o Ind(c1->c2) == Ind(c1->c3) on every chain; returns the number of chains checked."""
    n = 0
    for c1, c2, c3 in chains(p):
        p2 = sub_pair(p, c2.torus)
        p3 = sub_pair(p, c3.torus)
        inner = induction_kernel(p2, c1.rep_cochar)
        outer = induction_kernel(p3, c2.rep_cochar)
        direct = induction_kernel(p3, composite(c2.rep_cochar, c1.rep_cochar, p.forms()))
        assert direct.shift == inner.shift + outer.shift
        for k in range(max_degree + 1):
            for f in invariant_basis(inner.source_group, k).polys():
                assert induce(outer, induce(inner, f)) == induce(direct, f), (c1.key, c2.key, c3.key, k)
        n += 1
    return n
