"""Eigenvalue extraction, Monte Carlo moments, histograms, spacings."""

from __future__ import annotations

import math

import numpy as np
import pytest

from disco_rmt import (
    DiscoPlan,
    EnsembleKind,
    EnsembleSpec,
    EntryDistribution,
    SymmetricMatrix,
    draw_target,
    eigenvalues,
    empirical_moments,
    gap_spacings,
    histogram,
    moment_variance_scan,
    monte_carlo_moments,
    odd_moment_decay,
    pooled_normalized,
)


def _rs(dim, seed=0):
    return EnsembleSpec(
        kind=EnsembleKind.RS, dim=dim, dist=EntryDistribution.STANDARD_NORMAL, seed=seed
    )


def _plan(n=8, seed=0):
    return DiscoPlan(
        depth=1,
        a_spec=EnsembleSpec(
            kind=EnsembleKind.PST, dim=n, dist=EntryDistribution.STANDARD_NORMAL, seed=seed
        ),
        b_specs=(_rs(n, seed),),
    )


def test_eigenvalues_sorted_and_scaled():
    m = SymmetricMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
    s = eigenvalues(m)
    assert np.array_equal(s.raw, np.array([-1.0, 1.0]))
    assert s.scale == math.sqrt(2)
    assert np.allclose(s.normalized, s.raw / math.sqrt(2))


def test_eigenvalues_rejects_nonfinite():
    bad = np.array([[np.nan, 0.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        eigenvalues(SymmetricMatrix(bad))


def test_empirical_moments_hand_case():
    # eigenvalues +-1 at dim 2: M_m = mean((1/sqrt(2))^m) for even m, 0 odd
    s = eigenvalues(SymmetricMatrix(np.array([[0.0, 1.0], [1.0, 0.0]])))
    m2, m3, m4 = empirical_moments(s, (2, 3, 4))
    assert m2 == pytest.approx(0.5)
    assert m3 == pytest.approx(0.0, abs=1e-15)
    assert m4 == pytest.approx(0.25)


def test_monte_carlo_is_deterministic_and_thread_invariant():
    r1 = monte_carlo_moments(_rs(32), (2, 4), trials=8, seed=5, threads=1)
    r2 = monte_carlo_moments(_rs(32), (2, 4), trials=8, seed=5, threads=4)
    assert r1.values == r2.values
    assert r1.stderrs == r2.stderrs


def test_monte_carlo_seed_matters():
    r1 = monte_carlo_moments(_rs(32), (2,), trials=4, seed=5)
    r2 = monte_carlo_moments(_rs(32), (2,), trials=4, seed=6)
    assert r1.values != r2.values


def test_monte_carlo_rs_second_moment_near_one():
    rep = monte_carlo_moments(_rs(128), (2,), trials=30, seed=1)
    assert rep.values[0] == pytest.approx(1.0, abs=0.05)
    assert rep.dim == 128
    assert rep.trials == 30


def test_monte_carlo_accepts_disco_plan():
    rep = monte_carlo_moments(_plan(8), (2, 4), trials=6, seed=2)
    assert rep.dim == 16  # full constructed dimension
    assert len(rep.values) == 2


def test_single_trial_has_no_stderr():
    rep = monte_carlo_moments(_rs(16), (2,), trials=1, seed=0)
    assert math.isnan(rep.stderrs[0])


def test_draw_target_matches_monte_carlo_stream():
    m = draw_target(_rs(16), seed=9, trial=0)
    again = draw_target(_rs(16), seed=9, trial=0)
    other = draw_target(_rs(16), seed=9, trial=1)
    assert np.array_equal(m.array, again.array)
    assert not np.array_equal(m.array, other.array)


def test_variance_scan_decreases_with_dim():
    pts = moment_variance_scan((_plan(16), _plan(64)), order=4, trials=40, seed=3)
    assert [p.dim for p in pts] == [32, 128]
    assert pts[1].variance < pts[0].variance


def test_odd_moment_decay_rows():
    rows = odd_moment_decay((_rs(24), _rs(48)), orders=(3, 5), trials=10, seed=4)
    assert [(r.dim, r.order) for r in rows] == [(24, 3), (24, 5), (48, 3), (48, 5)]
    for r in rows:
        assert r.abs_mean >= 0.0 and r.stderr >= 0.0


# --- histograms and spacings -----------------------------------------------

def _samples(n_draws=6, dim=48):
    return [
        eigenvalues(draw_target(_rs(dim), seed=8, trial=t)) for t in range(n_draws)
    ]


def test_pooled_normalized_size():
    samples = _samples()
    assert pooled_normalized(samples).size == 6 * 48


def test_histogram_counts_everything():
    samples = _samples()
    h = histogram(samples, bins=20)
    assert len(h.counts) == 20
    assert len(h.edges) == 21
    assert h.total == 6 * 48
    assert len(h.centers) == 20


def test_histogram_bin_width_override():
    h = histogram(_samples(), bin_width=0.25)
    widths = np.diff(h.edges)
    assert np.allclose(widths, 0.25)


def test_histogram_reference_curves():
    h = histogram(_samples(), bins=30)
    # semicircle density vanishes outside [-2, 2], peaks at 1/pi
    outside = np.abs(h.centers) > 2.0
    assert np.all(h.semicircle_pdf[outside] == 0.0)
    assert h.semicircle_pdf.max() <= 1 / math.pi + 1e-12
    # gaussian curve is the standard normal pdf at the centers
    expect = np.exp(-h.centers**2 / 2) / math.sqrt(2 * math.pi)
    assert np.allclose(h.gauss_pdf, expect)


def test_gap_spacings_basic():
    s = eigenvalues(draw_target(_rs(32), seed=5))
    gaps = gap_spacings(s)
    assert gaps.size == 31
    assert np.all(gaps >= 0.0)
    # default divisor is sqrt(dim); doubling it halves the spacings
    wide = gap_spacings(s, divisor=2 * s.scale)
    assert np.allclose(wide, gaps / 2)
