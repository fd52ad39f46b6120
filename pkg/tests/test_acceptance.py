"""Acceptance criteria 1-6, each reported as one pass/fail line in the terminal summary."""
from __future__ import annotations

import itertools
import random
import time

from cohint import coh
from cohint.bps import Memo, Options, bps_character, rank1_conjecture_check, verify_integrality
from cohint.coh import invariant_basis, molien_dims
from cohint.lattice import common_kernel
from cohint.poset import enumerate_classes, poset_data
from cohint.sign import epsilon

from oracles import brute_invariant_dim, check_associativity, series_coefficients
from pairs import gl2_adjoint, random_rank1_weights, rank1, sl2_std_dual, t_star_c, t_star_c2, torus2_example

SEED = 20240611


def cold_start() -> Memo:
    """Drop every engine cache so timings are not flattered by earlier tests."""
    coh._invariant_cache.clear()
    coh._action.cache_clear()
    return Memo()


def battery() -> list[list[int]]:
    rng = random.Random(SEED)
    return [random_rank1_weights(rng) for _ in range(20)]


def suite_fixtures():
    out = {"B1": t_star_c(), "B2": t_star_c2(), "gl2_adjoint": gl2_adjoint(),
           "sl2_std_dual": sl2_std_dual(), "torus2": torus2_example()}
    for i, ws in enumerate(battery()):
        out[f"rank1_{i}"] = rank1(ws)
    return out


def test_criterion_1_b1_golden(record_criterion):
    memo = cold_start()
    t0 = time.perf_counter()
    p = t_star_c()
    n_classes = len(enumerate_classes(p))
    dims = bps_character(p, 21, memo=memo).p_char.dims()
    report = verify_integrality(p, 21, memo=memo)
    elapsed = time.perf_counter() - t0
    ok = n_classes == 2 and dims == {-1: 1} and report.passed and not report.residual and elapsed < 1
    record_criterion(1, ok, f"T*C: {n_classes} classes, P {dims}, residual {report.residual}, {elapsed:.3f}s")
    assert n_classes == 2
    assert dims == {-1: 1}
    assert report.passed and report.verified_to == 21
    assert elapsed < 1


def test_criterion_2_b2_golden(record_criterion):
    memo = cold_start()
    t0 = time.perf_counter()
    p = t_star_c2()
    dims = bps_character(p, 21, memo=memo).p_char.dims()
    report = verify_integrality(p, 21, memo=memo)
    elapsed = time.perf_counter() - t0
    ok = dims == {-3: 1, -1: 1} and report.passed and elapsed < 1
    record_criterion(2, ok, f"T*C^2: P {dims}, residual {report.residual}, {elapsed:.3f}s")
    assert dims == {-3: 1, -1: 1}
    assert report.passed
    assert elapsed < 1


def test_criterion_3_rank1_battery(record_criterion):
    memo = cold_start()
    cases = battery()
    assert all(len(ws) <= 12 and max(abs(k) for k in ws) <= 5 for ws in cases)
    t0 = time.perf_counter()
    failures = []
    for ws in cases:
        p = rank1(ws)
        cmp = rank1_conjecture_check(p, 21, memo=memo)
        report = verify_integrality(p, 21, memo=memo)
        expected_total = sum(1 for k in ws if k > 0)
        if not (cmp.match and cmp.total_dim == expected_total and report.passed):
            failures.append((ws, cmp.mismatches, report.residual))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 10
    record_criterion(3, ok, f"{len(cases)} random rank-1 cases, {len(failures)} failures, {elapsed:.3f}s")
    assert not failures, failures
    assert elapsed < 10


def test_criterion_4_gl2_adjoint(record_criterion):
    memo = cold_start()
    t0 = time.perf_counter()
    p = gl2_adjoint()
    report = verify_integrality(p, 20, memo=memo)
    elapsed = time.perf_counter() - t0
    expected = {2 * k: v for k, v in enumerate(series_coefficients([1, 2], 10)) if v}
    triv, reg = report.contributions
    ok = (triv.p_dims == {} and triv.dims == {} and reg.dims == expected
          and report.passed and elapsed < 2)
    record_criterion(4, ok, f"gl2 adjoint: P_triv {triv.p_dims}, regular class matches 1/((1-t^2)(1-t^4)) "
                            f"to degree 20: {reg.dims == expected}, {elapsed:.3f}s")
    assert triv.p_dims == {}
    assert reg.dims == expected
    assert report.passed
    assert elapsed < 2


def _property_checks(name, p) -> list[str]:
    problems = []
    data = poset_data(p)
    # (a) d_lam + 2 r_lam = d
    for c in data.classes:
        if c.d + 2 * c.r != p.d:
            problems.append(f"{name}: dimension count fails on {c.key}")
    # (b) epsilon is a character, trivial on the pointwise stabilizer
    for c, s in zip(data.classes, data.stabilizers):
        for w1, w2 in itertools.product(s.setwise, s.setwise):
            if epsilon(c, w1 * w2, p) != epsilon(c, w1, p) * epsilon(c, w2, p):
                problems.append(f"{name}: epsilon not multiplicative")
        if any(epsilon(c, w, p) != 1 for w in s.pointwise):
            problems.append(f"{name}: epsilon nontrivial on W^lam")
    # (c) associativity of induction on all chains
    check_associativity(p, 10)
    # (d) normality and (e) preferred-torus fixed point
    for c, s in zip(data.classes, data.stabilizers):
        if not s.setwise.is_normal(s.pointwise):
            problems.append(f"{name}: W^lam not normal")
        if common_kernel(list(c.v_fixed_key) + list(c.root_key), p.rank) != c.torus:
            problems.append(f"{name}: torus is not its own preferred torus")
    # (f) Molien against brute force
    weyl = p.group.weyl
    dims = molien_dims(weyl, 10)
    for d in range(11):
        if not dims[d] == invariant_basis(weyl, d).dim == brute_invariant_dim(weyl, d):
            problems.append(f"{name}: Molien mismatch in degree {d}")
    # (g) determinism under permuted basis and class order, (h) finite support
    a = verify_integrality(p, 12, memo=Memo())
    b = verify_integrality(p, 12, memo=Memo(), options=Options(order="revlex", class_order_reversed=True))
    if a.to_json() != b.to_json():
        problems.append(f"{name}: result depends on basis order")
    bound = p.rep.dim + p.group.dim
    for con in a.contributions:
        if any(abs(n) > bound for n in con.p_dims):
            problems.append(f"{name}: P supported outside [-{bound}, {bound}]")
    return problems


def test_criterion_5_property_suite(record_criterion):
    cold_start()
    t0 = time.perf_counter()
    problems = []
    fixtures = suite_fixtures()
    for name, p in fixtures.items():
        try:
            problems += _property_checks(name, p)
        except AssertionError as exc:
            problems.append(f"{name}: {exc}")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 60
    record_criterion(5, ok, f"properties (a)-(h) on {len(fixtures)} fixtures, {len(problems)} problems, {elapsed:.3f}s")
    assert not problems, problems
    assert elapsed < 60


def test_criterion_6_negative_control(record_criterion):
    report = verify_integrality(t_star_c(), 21, memo=Memo(), options=Options(drop=1))
    ok = not report.passed and bool(report.residual)
    record_criterion(6, ok, f"corrupted kernel on T*C: pass={report.passed}, residual {report.residual}")
    assert not report.passed
    assert report.residual
