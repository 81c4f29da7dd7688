"""Empirical spectra: eigenvalues, normalized moments, Monte Carlo sweeps.

The m-th normalized moment of a k x k symmetric matrix M is

    M_m = k^(-(m/2 + 1)) * sum_i lambda_i^m,

equivalently the average of (lambda_i / sqrt(k))^m.  With variance-one
entries this normalization gives M_2 -> 1 for every ensemble here, which
is what makes moments comparable across constructions and dimensions.

Monte Carlo trials are reproducible by construction: trial t of a run
with master seed s draws component c from the key (s, t, c), so results
do not depend on thread count or scheduling, only on the seed.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .disco import DiscoPlan, assemble_disco
from .ensembles import EnsembleSpec, SymmetricMatrix, draw

Target = EnsembleSpec | DiscoPlan


@dataclass(frozen=True)
class SpectralSample:
    """Raw (unnormalized) eigenvalues in ascending order, plus the scale
    sqrt(dim) used to normalize them."""

    raw: np.ndarray
    scale: float

    @property
    def dim(self) -> int:
        return self.raw.shape[0]

    @property
    def normalized(self) -> np.ndarray:
        return self.raw / self.scale


@dataclass(frozen=True)
class MomentReport:
    orders: tuple[int, ...]
    values: tuple[float, ...]
    stderrs: tuple[float, ...]
    trials: int
    dim: int


@dataclass(frozen=True)
class Histogram:
    """Pooled normalized-eigenvalue histogram with reference densities
    (standard normal and unit-variance semicircle) at the bin centers."""

    edges: np.ndarray
    counts: np.ndarray
    gauss_pdf: np.ndarray
    semicircle_pdf: np.ndarray

    @property
    def centers(self) -> np.ndarray:
        return (self.edges[:-1] + self.edges[1:]) / 2.0

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def eigenvalues(m: SymmetricMatrix) -> SpectralSample:
    if not np.isfinite(m.array).all():
        raise ValueError("matrix has non-finite entries")
    w = np.linalg.eigvalsh(m.array)
    # eigvalsh returns ascending order; check the solve against the trace.
    tol = 1e-8 * m.dim * max(1.0, float(np.abs(m.array).max()))
    if abs(float(w.sum()) - float(np.trace(m.array))) > tol:
        raise AssertionError("eigenvalue sum disagrees with trace")
    return SpectralSample(raw=w, scale=math.sqrt(m.dim))


def empirical_moments(sample: SpectralSample, orders) -> np.ndarray:
    x = sample.normalized
    return np.array([float(np.mean(x**m)) for m in orders])


def _materialize(target: Target, prefix: tuple[int, ...], trial: int) -> SymmetricMatrix:
    """Draw the trial's matrix; component c is keyed by prefix + (trial, c)."""
    if isinstance(target, EnsembleSpec):
        return draw(target.with_seed(prefix + (trial, 0)))
    a = draw(target.a_spec.with_seed(prefix + (trial, 0)))
    bs = [
        draw(spec.with_seed(prefix + (trial, i)))
        for i, spec in enumerate(target.b_specs, start=1)
    ]
    return assemble_disco(a, bs)


def draw_target(target: Target, seed, trial: int = 0) -> SymmetricMatrix:
    """Public entry to the per-trial drawing scheme used by Monte Carlo."""
    prefix = (seed,) if isinstance(seed, int) else tuple(seed)
    return _materialize(target, prefix, trial)


def _target_dim(target: Target) -> int:
    return target.dim


def _trial_rows(
    target: Target, orders, trials: int, prefix: tuple[int, ...], threads: int
) -> np.ndarray:
    if trials < 1:
        raise ValueError("need at least one trial")
    orders = tuple(int(m) for m in orders)

    def one(t: int) -> np.ndarray:
        return empirical_moments(eigenvalues(_materialize(target, prefix, t)), orders)

    rows = np.empty((trials, len(orders)))
    if threads == 0:
        threads = os.cpu_count() or 1
    if threads == 1:
        for t in range(trials):
            rows[t] = one(t)
    else:
        # Results land in trial order regardless of scheduling, so the
        # reduction below is deterministic for any thread count.
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for t, row in enumerate(pool.map(one, range(trials))):
                rows[t] = row
    return rows


def monte_carlo_moments(
    target: Target, orders, trials: int, seed, threads: int = 1
) -> MomentReport:
    """Mean and standard error of each M_m over independent draws."""
    prefix = (seed,) if isinstance(seed, int) else tuple(seed)
    orders = tuple(int(m) for m in orders)
    rows = _trial_rows(target, orders, trials, prefix, threads)
    values = rows.mean(axis=0)
    if trials >= 2:
        stderrs = rows.std(axis=0, ddof=1) / math.sqrt(trials)
    else:
        stderrs = np.full(len(orders), math.nan)
    return MomentReport(
        orders=orders,
        values=tuple(float(v) for v in values),
        stderrs=tuple(float(s) for s in stderrs),
        trials=trials,
        dim=_target_dim(target),
    )


@dataclass(frozen=True)
class VariancePoint:
    dim: int
    variance: float


def moment_variance_scan(
    targets, order: int, trials: int, seed, threads: int = 1
) -> list[VariancePoint]:
    """Sample variance of M_order per target; detects the 1/dim^2 decay."""
    if trials < 2:
        raise ValueError("variance needs at least two trials")
    out = []
    for idx, target in enumerate(targets):
        rows = _trial_rows(target, (order,), trials, (seed, idx), threads)
        out.append(
            VariancePoint(dim=_target_dim(target), variance=float(rows[:, 0].var(ddof=1)))
        )
    return out


@dataclass(frozen=True)
class OddMomentRow:
    dim: int
    order: int
    abs_mean: float
    stderr: float


def odd_moment_decay(targets, orders, trials: int, seed, threads: int = 1) -> list[OddMomentRow]:
    """|M_m| estimates for odd m across growing dimensions."""
    rows = []
    for idx, target in enumerate(targets):
        report = monte_carlo_moments(target, orders, trials, (seed, idx), threads)
        for m, v, s in zip(report.orders, report.values, report.stderrs):
            rows.append(OddMomentRow(dim=report.dim, order=m, abs_mean=abs(v), stderr=s))
    return rows


def pooled_normalized(samples) -> np.ndarray:
    if isinstance(samples, SpectralSample):
        samples = [samples]
    parts = [s.normalized for s in samples]
    if not parts:
        raise ValueError("no samples to pool")
    return np.concatenate(parts)


def histogram(samples, bins="auto", bin_width: float | None = None) -> Histogram:
    """Histogram of pooled normalized eigenvalues.

    ``bins="auto"`` uses the Freedman-Diaconis rule; an integer gives
    that many equal-width bins; ``bin_width`` overrides both.
    """
    pooled = pooled_normalized(samples)
    if bin_width is not None:
        if bin_width <= 0:
            raise ValueError("bin width must be positive")
        lo = float(pooled.min())
        hi = float(pooled.max())
        nbins = max(1, math.ceil((hi - lo) / bin_width))
        edges = lo + bin_width * np.arange(nbins + 1)
    elif bins == "auto":
        edges = np.histogram_bin_edges(pooled, bins="fd")
    else:
        edges = np.histogram_bin_edges(pooled, bins=int(bins))
    counts, edges = np.histogram(pooled, bins=edges)
    centers = (edges[:-1] + edges[1:]) / 2.0
    gauss = np.exp(-(centers**2) / 2.0) / math.sqrt(2.0 * math.pi)
    semi = np.sqrt(np.maximum(4.0 - centers**2, 0.0)) / (2.0 * math.pi)
    return Histogram(edges=edges, counts=counts, gauss_pdf=gauss, semicircle_pdf=semi)


def gap_spacings(sample: SpectralSample, divisor: float | None = None) -> np.ndarray:
    """Consecutive eigenvalue spacings, divided by ``divisor``.

    Default divisor is the sample's own scale sqrt(dim); pass
    sqrt(base_dim) to reproduce the convention that normalizes a depth-d
    construction by its base dimension instead.
    """
    if divisor is None:
        divisor = sample.scale
    if divisor <= 0:
        raise ValueError("divisor must be positive")
    return np.diff(np.sort(sample.raw)) / divisor
