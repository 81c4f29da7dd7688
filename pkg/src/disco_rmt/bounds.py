"""Trace and norm inequalities: Schatten norms, a generalized Hölder
check for products of symmetric matrices, Monte Carlo checks of two
proved expectation bounds, and the exact integer counterexample showing
that the naive matrix-level version of the moment-interlacing claim is
false.

Conventions: for a real symmetric matrix the singular values are the
absolute eigenvalues, and ||X||_p = (sum_i sigma_i^p)^(1/p) with the
p = infinity limit being the spectral radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .disco import DiscoPlan, assemble_disco
from .ensembles import EnsembleKind, EnsembleSpec, EntryDistribution, SymmetricMatrix, draw
from .spectra import eigenvalues, empirical_moments, monte_carlo_moments

_HOLDER_SLACK = 1e-10
_EXPONENT_TOL = 1e-12


@dataclass(frozen=True)
class SingularSpectrum:
    """Singular values in descending order."""

    values: np.ndarray

    @classmethod
    def from_matrix(cls, m: SymmetricMatrix) -> "SingularSpectrum":
        w = np.abs(np.linalg.eigvalsh(m.array))
        return cls(values=np.sort(w)[::-1])


def schatten_norm(m, p: float) -> float:
    """Schatten p-norm of a SymmetricMatrix or SingularSpectrum."""
    if p < 1:
        raise ValueError("Schatten norms need p >= 1")
    spectrum = m if isinstance(m, SingularSpectrum) else SingularSpectrum.from_matrix(m)
    sigma = spectrum.values
    if math.isinf(p):
        return float(sigma[0]) if sigma.size else 0.0
    return float(np.sum(sigma**p) ** (1.0 / p))


@dataclass(frozen=True)
class ExponentVector:
    """Hölder exponents: each p_i >= 1 (inf allowed), sum of 1/p_i == 1."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 2:
            raise ValueError("need at least two exponents")
        for p in self.values:
            if not (p >= 1):
                raise ValueError(f"exponent {p} is below 1")
        total = sum(0.0 if math.isinf(p) else 1.0 / p for p in self.values)
        if abs(total - 1.0) > _EXPONENT_TOL:
            raise ValueError(f"reciprocals sum to {total}, need 1")


@dataclass(frozen=True)
class HolderCheck:
    lhs: float  # |Tr(X_1 ... X_n)|
    rhs: float  # prod ||X_i||_{p_i}
    ok: bool


def holder_trace_check(mats, exponents: ExponentVector) -> HolderCheck:
    """|Tr(X_1 ... X_n)| <= prod_i ||X_i||_{p_i} for sum 1/p_i = 1."""
    mats = list(mats)
    if len(mats) != len(exponents.values):
        raise ValueError("one exponent per matrix")
    dim = mats[0].dim
    if any(m.dim != dim for m in mats):
        raise ValueError("matrices must share a dimension")
    prod = mats[0].array
    for m in mats[1:]:
        prod = prod @ m.array
    lhs = abs(float(np.trace(prod)))
    rhs = 1.0
    for m, p in zip(mats, exponents.values):
        rhs *= schatten_norm(m, p)
    return HolderCheck(lhs=lhs, rhs=rhs, ok=lhs <= rhs * (1.0 + _HOLDER_SLACK))


@dataclass(frozen=True)
class HolderSweepReport:
    tuples: int
    violations: int
    max_ratio: float  # max over tuples of lhs/rhs (1.0 means tight)


def holder_sweep(trials: int, seed: int, dims=(4, 5, 6, 7, 8)) -> HolderSweepReport:
    """Random product tuples (2 to 4 factors, matched exponent vectors)
    against the trace bound; returns the violation count, which the
    theorem says must be zero."""
    vectors = {
        2: ExponentVector((2.0, 2.0)),
        3: ExponentVector((3.0, 3.0, 3.0)),
        4: ExponentVector((4.0, 4.0, 4.0, 4.0)),
    }
    violations = 0
    max_ratio = 0.0
    for t in range(trials):
        count = 2 + t % 3
        dim = dims[t % len(dims)]
        dist = (
            EntryDistribution.STANDARD_NORMAL
            if (t // 3) % 2 == 0
            else EntryDistribution.RADEMACHER
        )
        mats = [
            draw(EnsembleSpec(EnsembleKind.RS, dim, dist, seed=(seed, t, i)))
            for i in range(count)
        ]
        check = holder_trace_check(mats, vectors[count])
        if not check.ok:
            violations += 1
        if check.rhs > 0:
            max_ratio = max(max_ratio, check.lhs / check.rhs)
    return HolderSweepReport(tuples=trials, violations=violations, max_ratio=max_ratio)


@dataclass(frozen=True)
class MixedTraceCheck:
    lhs_mean: float
    lhs_stderr: float
    rhs: float
    rhs_stderr: float
    ok: bool


def mixed_trace_bound_check(
    a_spec: EnsembleSpec, b_spec: EnsembleSpec, pattern, trials: int, seed: int
) -> MixedTraceCheck:
    """E[Tr prod_t A^{i_t} B^{j_t}] <= E[Tr A^K]^(I/K) E[Tr B^K]^(J/K)
    with K the total exponent; all exponents must be even."""
    pattern = [(int(i), int(j)) for i, j in pattern]
    if not pattern:
        raise ValueError("pattern must be nonempty")
    for i, j in pattern:
        if i < 0 or j < 0 or i % 2 or j % 2:
            raise ValueError("pattern exponents must be even and nonnegative")
    total_i = sum(i for i, _ in pattern)
    total_j = sum(j for _, j in pattern)
    big_k = total_i + total_j
    if big_k == 0:
        raise ValueError("pattern must use at least one factor")
    if a_spec.dim != b_spec.dim:
        raise ValueError("specs must share a dimension")
    if trials < 2:
        raise ValueError("need at least two trials")

    lhs_vals = np.empty(trials)
    a_pow = np.empty(trials)
    b_pow = np.empty(trials)
    for t in range(trials):
        a = draw(a_spec.with_seed((seed, t, 0))).array
        b = draw(b_spec.with_seed((seed, t, 1))).array
        prod = np.eye(a_spec.dim)
        for i, j in pattern:
            if i:
                prod = prod @ np.linalg.matrix_power(a, i)
            if j:
                prod = prod @ np.linalg.matrix_power(b, j)
        lhs_vals[t] = np.trace(prod)
        a_pow[t] = np.trace(np.linalg.matrix_power(a, big_k))
        b_pow[t] = np.trace(np.linalg.matrix_power(b, big_k))

    lhs_mean = float(lhs_vals.mean())
    lhs_se = float(lhs_vals.std(ddof=1) / math.sqrt(trials))
    ma, mb = float(a_pow.mean()), float(b_pow.mean())
    se_a = float(a_pow.std(ddof=1) / math.sqrt(trials))
    se_b = float(b_pow.std(ddof=1) / math.sqrt(trials))
    rhs = 1.0
    if total_i:
        rhs *= ma ** (total_i / big_k)
    if total_j:
        rhs *= mb ** (total_j / big_k)
    # Delta-method error bar for the right side.
    rhs_se = 0.0
    if rhs > 0:
        if total_i and ma > 0:
            rhs_se += (total_i / big_k * rhs / ma * se_a) ** 2
        if total_j and mb > 0:
            rhs_se += (total_j / big_k * rhs / mb * se_b) ** 2
        rhs_se = math.sqrt(rhs_se)
    ok = lhs_mean <= rhs * (1.0 + 1e-9) + 3.0 * (lhs_se + rhs_se)
    return MixedTraceCheck(
        lhs_mean=lhs_mean, lhs_stderr=lhs_se, rhs=rhs, rhs_stderr=rhs_se, ok=ok
    )


@dataclass(frozen=True)
class SandwichCheck:
    order: int
    m_a: float
    m_b: float
    m_disco: float
    stderr_disco: float
    lower: float
    upper: float
    ok: bool


def sandwich_bound_check(
    a_spec: EnsembleSpec, b0_spec: EnsembleSpec, order: int, trials: int, seed: int
) -> SandwichCheck:
    """2^(1-k/2) min(M_k(A), M_k(B0)) <= M_k(D_1) <= 2^(k/2-1) max(...)
    for even k, using shared draws of A and B0 per trial."""
    if order < 2 or order % 2:
        raise ValueError("order must be a positive even integer")
    if a_spec.dim != b0_spec.dim:
        raise ValueError("specs must share a dimension")
    if trials < 2:
        raise ValueError("need at least two trials")
    vals = np.empty((trials, 3))
    for t in range(trials):
        a = draw(a_spec.with_seed((seed, t, 0)))
        b0 = draw(b0_spec.with_seed((seed, t, 1)))
        d1 = assemble_disco(a, [b0])
        vals[t, 0] = empirical_moments(eigenvalues(a), (order,))[0]
        vals[t, 1] = empirical_moments(eigenvalues(b0), (order,))[0]
        vals[t, 2] = empirical_moments(eigenvalues(d1), (order,))[0]
    means = vals.mean(axis=0)
    ses = vals.std(axis=0, ddof=1) / math.sqrt(trials)
    k = order
    lower = 2.0 ** (1 - k / 2) * min(means[0], means[1])
    upper = 2.0 ** (k / 2 - 1) * max(means[0], means[1])
    slack = 3.0 * (ses.max() * max(2.0 ** (k / 2 - 1), 1.0) + ses[2])
    ok = (lower - slack <= means[2]) and (means[2] <= upper + slack)
    return SandwichCheck(
        order=order,
        m_a=float(means[0]),
        m_b=float(means[1]),
        m_disco=float(means[2]),
        stderr_disco=float(ses[2]),
        lower=float(lower),
        upper=float(upper),
        ok=ok,
    )


# Fixed 2x2 integer blocks whose 10-fold diagonal tilings refute the
# matrix-level claim M_4(D_1) <= max(M_4(A), M_4(B)).
COUNTEREXAMPLE_A_BLOCK = ((-33, -31), (-31, -82))
COUNTEREXAMPLE_B_BLOCK = ((26, 78), (78, -15))
_COUNTEREXAMPLE_COPIES = 10


def _int_block_diag(block, copies: int) -> list[list[int]]:
    k = len(block)
    n = k * copies
    out = [[0] * n for _ in range(n)]
    for r in range(copies):
        for i in range(k):
            for j in range(k):
                out[r * k + i][r * k + j] = block[i][j]
    return out


def _int_matmul(x, y):
    n = len(x)
    cols = list(zip(*y))
    return [[sum(xi * yj for xi, yj in zip(row, col)) for col in cols] for row in x]


def _int_trace_power(m, power: int) -> int:
    acc = m
    for _ in range(power - 1):
        acc = _int_matmul(acc, m)
    return sum(acc[i][i] for i in range(len(acc)))


@dataclass(frozen=True)
class CounterexampleReport:
    dim: int
    tr_a4: int
    tr_b4: int
    disco_quarter_trace: Fraction  # Tr(D_1^4) / 8, same scale as Tr(A^4)
    exceeds_both: bool


def conjecture_counterexample() -> CounterexampleReport:
    """Exact integer evaluation on the fixed 20-dimensional pair.

    Tr(D_1^4) is computed two ways - directly on the assembled 40 x 40
    matrix and through the eigenvalue split Tr((A+B)^4) + Tr((A-B)^4) -
    and the results must agree.  The scaled value exceeds both Tr(A^4)
    and Tr(B^4), so no pointwise matrix inequality can explain the
    moment interlacing seen in distribution.
    """
    a = _int_block_diag(COUNTEREXAMPLE_A_BLOCK, _COUNTEREXAMPLE_COPIES)
    b = _int_block_diag(COUNTEREXAMPLE_B_BLOCK, _COUNTEREXAMPLE_COPIES)
    n = len(a)
    tr_a4 = _int_trace_power(a, 4)
    tr_b4 = _int_trace_power(b, 4)

    plus = [[a[i][j] + b[i][j] for j in range(n)] for i in range(n)]
    minus = [[a[i][j] - b[i][j] for j in range(n)] for i in range(n)]
    split = _int_trace_power(plus, 4) + _int_trace_power(minus, 4)

    d1 = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            d1[i][j] = a[i][j]
            d1[n + i][n + j] = a[i][j]
            d1[i][n + j] = b[i][j]
            d1[n + i][j] = b[i][j]
    direct = _int_trace_power(d1, 4)
    if direct != split:
        raise AssertionError("block trace identity failed in exact arithmetic")

    scaled = Fraction(direct, 8)
    return CounterexampleReport(
        dim=n,
        tr_a4=tr_a4,
        tr_b4=tr_b4,
        disco_quarter_trace=scaled,
        exceeds_both=scaled > max(tr_a4, tr_b4),
    )


@dataclass(frozen=True)
class ScanRow:
    order: int
    m_a: float
    se_a: float
    m_disco: float
    se_disco: float
    m_b: float
    se_b: float


def conjecture_moment_scan(
    a_spec: EnsembleSpec,
    b_spec: EnsembleSpec,
    orders,
    trials: int,
    seed: int,
    threads: int = 1,
) -> list[ScanRow]:
    """Moment table for A, D_1(A, B), B.  Reporting only: the moment
    interlacing here is conjectural, so this never raises."""
    if a_spec.dim != b_spec.dim:
        raise ValueError("specs must share a dimension")
    orders = tuple(int(m) for m in orders)
    plan = DiscoPlan(depth=1, a_spec=a_spec, b_specs=(b_spec,))
    rep_a = monte_carlo_moments(a_spec, orders, trials, (seed, 0), threads)
    rep_b = monte_carlo_moments(b_spec, orders, trials, (seed, 1), threads)
    rep_d = monte_carlo_moments(plan, orders, trials, (seed, 2), threads)
    rows = []
    for idx, order in enumerate(orders):
        rows.append(
            ScanRow(
                order=order,
                m_a=rep_a.values[idx],
                se_a=rep_a.stderrs[idx],
                m_disco=rep_d.values[idx],
                se_disco=rep_d.stderrs[idx],
                m_b=rep_b.values[idx],
                se_b=rep_b.stderrs[idx],
            )
        )
    return rows
