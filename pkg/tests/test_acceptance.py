"""Acceptance gate: one test per shipped criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines live;
without ``-s`` the verdicts still appear as the per-test PASSED/FAILED
markers.  Monte Carlo criteria use fixed seeds and windows wide enough to
be deterministic in practice, so a red line here means a real regression,
with one deliberate exception:

* criterion 10 freezes three stated target integers for the exact-integer
  refutation.  Exact arithmetic on the defining 2x2 blocks reproduces the
  second and third bit-for-bit but yields 886,801,750 where the stated
  target reads 889,801,750 (a digit slip in the target: Newton power sums
  on the block [[-33,-31],[-31,-82]] give p4 = 88,680,175 exactly, and ten
  diagonal copies multiply that by ten).  The library reports the true
  value, so this criterion fails honestly rather than echoing the slip.
  The refutation itself — the middle quantity exceeding both ends — holds
  either way.
"""

from __future__ import annotations

import math
import time
import warnings
from fractions import Fraction

import numpy as np
import pytest

from disco_rmt import (
    DiscoPlan,
    EnsembleKind,
    EnsembleSpec,
    EntryDistribution,
    SymmetricMatrix,
    bound_suite,
    canonical_class_contribution,
    class_contribution_via_trees,
    class_table,
    conjecture_counterexample,
    conjecture_moment_scan,
    eigenvalues,
    empirical_moments,
    exact_moment,
    gaussian_moment,
    holder_sweep,
    kronecker,
    moment_variance_scan,
    monte_carlo_moments,
    pairings,
    sandwich_bound_check,
    semicircle_moment,
    word_class_moment,
)
from disco_rmt.cli import main as cli_main

F = Fraction


def _say(line: str) -> None:
    print(f"\nACCEPTANCE {line}")


def _spec(kind, dim, seed=0, **kw):
    return EnsembleSpec(
        kind=kind, dim=dim, dist=EntryDistribution.STANDARD_NORMAL, seed=seed, **kw
    )


def _disco_plan(a_kind, b_kind, n, b_period=None):
    b_kw = {"period": b_period} if b_period else {}
    return DiscoPlan(
        depth=1,
        a_spec=_spec(a_kind, n),
        b_specs=(_spec(b_kind, n, **b_kw),),
    )


def test_criterion_01_exact_low_moments():
    t0 = time.perf_counter()
    values = [exact_moment(k) for k in (2, 4, 6)]
    elapsed = time.perf_counter() - t0
    ok = values == [F(1), F(9, 4), F(7)] and elapsed < 1.0
    _say(
        f"criterion 01 {'PASS' if ok else 'FAIL'}: exact M_2,M_4,M_6 = "
        f"{values[0]}, {values[1]}, {values[2]} in {elapsed:.3f}s (budget 1s)"
    )
    assert values == [F(1), F(9, 4), F(7)]
    assert elapsed < 1.0


def test_criterion_02_order_eight_adjudication():
    t0 = time.perf_counter()
    oracle = exact_moment(8)
    identity = (
        F(gaussian_moment(8), 16)
        + F(semicircle_moment(8), 16)
        + F(7, 2)
        + F(7)
        + F(9)
    )
    elapsed = time.perf_counter() - t0
    stated = F(55, 2)  # the 27.5 printed alongside the source table
    ok = oracle == identity and elapsed < 10.0
    _say(
        f"criterion 02 {'PASS' if ok else 'FAIL'}: word oracle M_8 = {oracle}, "
        f"classwise identity = {identity}; recorded: oracle "
        f"{'matches' if oracle == stated else 'differs from'} the printed 27.5 "
        f"by {abs(oracle - stated)}; {elapsed:.3f}s (budget 10s)"
    )
    assert oracle == identity  # the gate: oracle vs the classwise identity, not vs 27.5
    assert elapsed < 10.0


def test_criterion_03_engine_triangulation():
    t0 = time.perf_counter()
    mismatches = []
    for total in range(2, 13, 2):
        for num_a in range(0, total + 1, 2):
            num_b = total - num_a
            tree = class_contribution_via_trees(num_a, num_b)
            word = word_class_moment(num_a, num_b)
            closed = canonical_class_contribution(num_a, num_b)
            single = pairings.legal_pairing_count("a" * num_a + "b" * num_b)
            if tree != word or closed != single:
                mismatches.append((num_a, num_b))
            if (num_a == 0 or num_b == 0) and word != closed / 2 ** (total // 2):
                mismatches.append((num_a, num_b, "single-word class"))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 300.0
    _say(
        f"criterion 03 {'PASS' if ok else 'FAIL'}: tree == word sum and closed "
        f"form == canonical count for all even (I,J) with I+J <= 12; "
        f"{elapsed:.2f}s (budget 300s)"
    )
    assert not mismatches, mismatches
    assert elapsed < 300.0


def test_criterion_04_mixed_class_table():
    rows = [
        (r.order, r.num_a, r.num_b, r.weighted_p, r.contribution)
        for r in class_table(8)
    ]
    expected = [
        (4, 2, 2, F(4), F(1)),
        (6, 2, 4, F(15), F(15, 8)),
        (6, 4, 2, F(21), F(21, 8)),
        (8, 2, 6, F(56), F(7, 2)),
        (8, 4, 4, F(112), F(7)),
        (8, 6, 2, F(144), F(9)),
    ]
    ok = rows == expected
    _say(
        f"criterion 04 {'PASS' if ok else 'FAIL'}: six mixed-class rows through "
        f"order 8 reproduced exactly"
    )
    assert rows == expected


def test_criterion_05_bound_suite():
    checks = [bound_suite(2 * k) for k in range(1, 7)]
    ratios = [c.ratio for c in checks]
    all_ok = all(c.all_ok for c in checks)
    decreasing = all(a > b for a, b in zip(ratios, ratios[1:]))
    ok = all_ok and decreasing
    _say(
        f"criterion 05 {'PASS' if ok else 'FAIL'}: semicircle <= M <= truncated "
        f"gaussian and root bound for 2k <= 12; M/G strictly decreasing "
        f"({', '.join(str(r) for r in ratios)})"
    )
    assert all_ok
    assert decreasing


def test_criterion_06_monte_carlo_windows():
    t0 = time.perf_counter()
    seed, n, trials = 12345, 512, 100
    windows = {
        "pst": ((2.85, 3.15), _spec(EnsembleKind.PST, n)),
        "rs": ((1.90, 2.10), _spec(EnsembleKind.RS, n)),
        "disco(pst,rs)": ((2.14, 2.36), _disco_plan(EnsembleKind.PST, EnsembleKind.RS, n)),
    }
    failures = []
    details = []
    for name, (window, target) in windows.items():
        rep = monte_carlo_moments(target, (3, 4), trials=trials, seed=seed, threads=0)
        m3, m4 = rep.values
        se3 = rep.stderrs[0]
        details.append(f"{name} M_4={m4:.3f}")
        if not window[0] <= m4 <= window[1]:
            failures.append(f"{name} M_4={m4:.4f} outside {window}")
        if abs(m3) > 3 * se3:
            failures.append(f"{name} M_3={m3:.2e} beyond 3*stderr={3 * se3:.2e}")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300.0
    _say(
        f"criterion 06 {'PASS' if ok else 'FAIL'}: N=512, 100 trials, seed {seed}: "
        f"{'; '.join(details)}; odd M_3 within 3*stderr; {elapsed:.1f}s (budget 300s)"
    )
    assert not failures, failures
    assert elapsed < 300.0


def test_criterion_07_variance_decay():
    targets = (
        _disco_plan(EnsembleKind.PST, EnsembleKind.RS, 64),
        _disco_plan(EnsembleKind.PST, EnsembleKind.RS, 512),
    )
    pts = moment_variance_scan(targets, order=4, trials=200, seed=777, threads=0)
    ok = pts[1].variance < pts[0].variance
    _say(
        f"criterion 07 {'PASS' if ok else 'FAIL'}: Var[M_4(D_1)] "
        f"{pts[0].variance:.3e} at N=64 -> {pts[1].variance:.3e} at N=512 "
        f"(200 trials each)"
    )
    assert ok


def test_criterion_08_depth_convergence():
    # a non-semicircle base flattened toward the semicircle, one halving per level
    seed, n = 999, 64
    gaps = []
    for depth, trials in ((1, 600), (2, 400), (3, 250)):
        plan = DiscoPlan(
            depth=depth,
            a_spec=_spec(EnsembleKind.PST, n),
            b_specs=tuple(
                _spec(EnsembleKind.RS, 2 ** (i - 1) * n) for i in range(1, depth + 1)
            ),
        )
        rep = monte_carlo_moments(plan, (4,), trials=trials, seed=seed, threads=0)
        gaps.append(abs(rep.values[0] - 2.0))
    ok = gaps[0] > gaps[1] > gaps[2]
    _say(
        f"criterion 08 {'PASS' if ok else 'FAIL'}: |M_4(D_d) - 2| with PST base "
        f"at N=64 over d=1,2,3: {gaps[0]:.3f} > {gaps[1]:.3f} > {gaps[2]:.3f}"
    )
    assert ok


def test_criterion_09_same_distribution_disco():
    n, trials = 256, 80
    plan = DiscoPlan(
        depth=1,
        a_spec=_spec(EnsembleKind.RS, n),
        b_specs=(_spec(EnsembleKind.RS, n),),
    )
    disco_rep = monte_carlo_moments(plan, (2, 4, 6), trials=trials, seed=4242, threads=0)
    rs_rep = monte_carlo_moments(
        _spec(EnsembleKind.RS, 2 * n), (2, 4, 6), trials=trials, seed=4243, threads=0
    )
    failures = []
    sigmas = []
    for order, dv, dse, rv, rse in zip(
        (2, 4, 6), disco_rep.values, disco_rep.stderrs, rs_rep.values, rs_rep.stderrs
    ):
        combined = math.hypot(dse, rse)
        pull = abs(dv - rv) / combined
        sigmas.append(f"M_{order}: {pull:.2f}sigma")
        if pull > 3.0:
            failures.append(f"M_{order} differs by {pull:.2f} sigma")
    ok = not failures
    _say(
        f"criterion 09 {'PASS' if ok else 'FAIL'}: D_1(RS,RS) vs RS at 2N — "
        f"{', '.join(sigmas)} (gate 3 sigma)"
    )
    assert not failures, failures


def test_criterion_10_exact_integer_refutation():
    rep = conjecture_counterexample()
    stated = (889_801_750, 869_734_090, 1_336_343_790)
    got = (rep.tr_a4, rep.tr_b4, int(rep.disco_quarter_trace))
    middle_exceeds = rep.exceeds_both
    ok = got == stated and middle_exceeds
    _say(
        f"criterion 10 {'PASS' if ok else 'FAIL'}: computed "
        f"{got[0]:,}; {got[1]:,}; {got[2]:,} vs stated targets "
        f"{stated[0]:,}; {stated[1]:,}; {stated[2]:,}; middle exceeds both ends: "
        f"{middle_exceeds}. The first target is unreachable: exact integer "
        f"arithmetic on the defining blocks gives 886,801,750 (Newton power "
        f"sums: p4 = 88,680,175 per block, ten copies), a digit slip in the "
        f"stated value. The other two integers match bit-exactly and the "
        f"refutation holds."
    )
    # the honest sub-checks
    assert rep.tr_b4 == stated[1]
    assert int(rep.disco_quarter_trace) == stated[2]
    assert middle_exceeds
    # the stated first integer cannot be reproduced without faking arithmetic
    assert got == stated, (
        "computed Tr(A^4) = 886,801,750 by exact arithmetic; the stated "
        "889,801,750 is a digit slip (the same construction reproduces the "
        "other two integers bit-exactly, and the refutation is unaffected)"
    )


def test_criterion_11_holder_sweep():
    rep = holder_sweep(trials=1000, seed=99)
    ok = rep.tuples == 1000 and rep.violations == 0
    _say(
        f"criterion 11 {'PASS' if ok else 'FAIL'}: 1000 random tuples, factor "
        f"counts 2-4, {rep.violations} violations, max lhs/rhs = {rep.max_ratio:.4f}"
    )
    assert rep.tuples == 1000
    assert rep.violations == 0


def test_criterion_12_sandwich_bound():
    chk = sandwich_bound_check(
        _spec(EnsembleKind.PST, 256),
        _spec(EnsembleKind.RS, 256),
        order=4,
        trials=100,
        seed=2024,
    )
    ok = chk.ok
    _say(
        f"criterion 12 {'PASS' if ok else 'FAIL'}: k=4, N=256, 100 trials: "
        f"{chk.lower:.3f} <= M_4(D_1) = {chk.m_disco:.3f} <= {chk.upper:.3f}"
    )
    assert chk.ok


def test_criterion_13_kronecker_identities():
    rng = np.random.default_rng(31)
    worst_moment, worst_spectrum = 0.0, 0.0
    for _ in range(5):
        x, y = rng.standard_normal((6, 6)), rng.standard_normal((6, 6))
        a, b = SymmetricMatrix(x + x.T), SymmetricMatrix(y + y.T)
        prod = kronecker(a, b)
        sa, sb, sp = eigenvalues(a), eigenvalues(b), eigenvalues(prod)
        for order in (2, 4):
            lhs = empirical_moments(sp, (order,))[0]
            rhs = empirical_moments(sa, (order,))[0] * empirical_moments(sb, (order,))[0]
            worst_moment = max(worst_moment, abs(lhs - rhs) / max(1.0, abs(rhs)))
        expected = np.sort(np.multiply.outer(sa.raw, sb.raw).ravel())
        scale = max(1.0, float(np.abs(expected).max()))
        worst_spectrum = max(
            worst_spectrum, float(np.max(np.abs(np.sort(sp.raw) - expected))) / scale
        )
    ok = worst_moment <= 1e-10 and worst_spectrum <= 1e-8
    _say(
        f"criterion 13 {'PASS' if ok else 'FAIL'}: moment multiplicativity rel "
        f"err {worst_moment:.2e} (gate 1e-10); spectrum multiset rel err "
        f"{worst_spectrum:.2e} (gate 1e-8) over five random 6x6 pairs"
    )
    assert worst_moment <= 1e-10
    assert worst_spectrum <= 1e-8


def test_criterion_14_conjecture_scan_advisory():
    # advisory: the 3-periodic block-circulant convention is not pinned down
    # by the construction being tested, so deviations warn instead of failing
    n, trials, seed = 1200, 8, 555
    reference = {
        "rs": (2.000, 2.071, 2.183),
        "pst": (2.948, 2.544, 2.330),
    }
    bc = _spec(EnsembleKind.BLOCK_CIRCULANT, n, period=3)
    deviations = []
    for name, a_kind in (("rs", EnsembleKind.RS), ("pst", EnsembleKind.PST)):
        rows = conjecture_moment_scan(
            _spec(a_kind, n), bc, orders=(4,), trials=trials, seed=seed, threads=0
        )
        row = rows[0]
        got = (row.m_a, row.m_disco, row.m_b)
        for label, g, want in zip(("A", "D_1", "B"), got, reference[name]):
            deviations.append((name, label, abs(g - want) / want))
    worst = max(d for _, _, d in deviations)
    ok = worst <= 0.10
    detail = ", ".join(f"{n_}/{l}: {d * 100:.1f}%" for n_, l, d in deviations)
    _say(
        f"criterion 14 {'PASS' if ok else 'WARN'} (advisory): k=4 columns at "
        f"N=1200 vs reference tables — {detail} (gate 10%)"
    )
    if not ok:
        warnings.warn(
            f"conjecture-scan columns deviate beyond 10% from the reference "
            f"tables: {detail}",
            stacklevel=1,
        )


def test_criterion_15_byte_determinism(tmp_path, capsys):
    argv = [
        "moments", "--ensemble", "rs", "--dim", "64", "--orders", "2,4",
        "--trials", "10", "--seed", "12345",
    ]
    outs = []
    for sub in ("r1", "r2"):
        d = tmp_path / sub
        d.mkdir()
        assert cli_main(argv + ["-o", str(d / "m.csv")]) == 0
        outs.append(
            (
                (d / "m.csv").read_bytes(),
                (d / "m.csv.manifest.json").read_text().replace(str(d), ""),
            )
        )
    capsys.readouterr()  # swallow the CLI chatter; verdict line follows
    ok = outs[0] == outs[1]
    _say(
        f"criterion 15 {'PASS' if ok else 'FAIL'}: repeated runs with seed 12345 "
        f"produce byte-identical CSV and manifest"
    )
    assert outs[0] == outs[1]
