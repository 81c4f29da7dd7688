"""Random symmetric matrix ensembles.

Four generators, all producing exactly (bitwise) symmetric real matrices
with mean-zero, variance-one entries where randomness is involved:

* ``PST``: symmetric Toeplitz with palindromic first row, ceil(N/2) free
  scalars.
* ``RS``: fully independent upper triangle, N(N+1)/2 free scalars.
* ``BLOCK_CIRCULANT``: period-m block circulant; entry (i, j) depends
  only on ((j - i) mod N, i mod m), with symmetry imposed by tying each
  block to the transpose of its opposite block.
* ``REPEATED_BLOCK``: a fixed block tiled along the diagonal; no free
  scalars, used as a deterministic reference ensemble.

Draws are pure functions of the spec (including its seed), backed by the
counter-based Philox generator, so a spec can be shipped to a worker and
reproduced exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

import numpy as np

Seed = int | tuple[int, ...]


class EntryDistribution(enum.Enum):
    STANDARD_NORMAL = "standard_normal"
    RADEMACHER = "rademacher"

    def sample(self, rng: np.random.Generator, shape) -> np.ndarray:
        if self is EntryDistribution.STANDARD_NORMAL:
            return rng.standard_normal(shape)
        # Rademacher: +-1 with equal probability, already variance 1.
        return rng.integers(0, 2, size=shape).astype(np.float64) * 2.0 - 1.0


class SymmetricMatrix:
    """Immutable real symmetric matrix; symmetry is enforced entrywise."""

    __slots__ = ("_array",)

    def __init__(self, array) -> None:
        arr = np.array(array, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ValueError("matrix dimension must be at least 1")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix is not exactly symmetric")
        arr.setflags(write=False)
        self._array = arr

    @property
    def array(self) -> np.ndarray:
        return self._array

    @property
    def dim(self) -> int:
        return self._array.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Flat row-major view of the entries."""
        return self._array.reshape(-1)

    def __repr__(self) -> str:
        return f"SymmetricMatrix(dim={self.dim})"


class EnsembleKind(enum.Enum):
    PST = "pst"
    RS = "rs"
    BLOCK_CIRCULANT = "block_circulant"
    REPEATED_BLOCK = "repeated_block"


@dataclass(frozen=True)
class EnsembleSpec:
    """Everything needed to reproduce one draw: kind, dim, entry law, seed.

    ``period`` applies only to BLOCK_CIRCULANT, ``block`` only to
    REPEATED_BLOCK.
    """

    kind: EnsembleKind
    dim: int
    dist: EntryDistribution = EntryDistribution.STANDARD_NORMAL
    seed: Seed = 0
    period: int | None = None
    block: SymmetricMatrix | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.kind is EnsembleKind.BLOCK_CIRCULANT:
            if self.period is None or self.period < 1:
                raise ValueError("block circulant requires period >= 1")
            if self.dim % self.period != 0:
                raise ValueError("period must divide dim")
        elif self.period is not None:
            raise ValueError(f"period is not meaningful for {self.kind.value}")
        if self.kind is EnsembleKind.REPEATED_BLOCK:
            if self.block is None:
                raise ValueError("repeated block requires a block")
            if self.dim % self.block.dim != 0:
                raise ValueError("block dimension must divide dim")
        elif self.block is not None:
            raise ValueError(f"block is not meaningful for {self.kind.value}")

    def with_seed(self, seed: Seed) -> "EnsembleSpec":
        return replace(self, seed=seed)


def _rng_from_seed(seed: Seed) -> np.random.Generator:
    # Philox is counter-based: the stream is a pure function of the key,
    # so any (master, trial, component) tuple keys an independent stream.
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def _draw_pst(n: int, dist: EntryDistribution, rng: np.random.Generator) -> np.ndarray:
    b = dist.sample(rng, (n + 1) // 2)
    off = np.abs(np.subtract.outer(np.arange(n), np.arange(n)))
    return b[np.minimum(off, n - 1 - off)]


def _draw_rs(n: int, dist: EntryDistribution, rng: np.random.Generator) -> np.ndarray:
    x = dist.sample(rng, (n, n))
    # Copy the upper triangle below the diagonal; no arithmetic, so the
    # result is bitwise symmetric.
    return np.triu(x) + np.triu(x, 1).T


def _symmetrize_upper(x: np.ndarray) -> np.ndarray:
    return np.triu(x) + np.triu(x, 1).T


def _draw_block_circulant(
    n: int, period: int, dist: EntryDistribution, rng: np.random.Generator
) -> np.ndarray:
    """Blocks C_0 .. C_{T-1} of size m, laid out so block (r, s) is
    C_{(s-r) mod T}; symmetry of the whole matrix forces C_{T-t} = C_t^T
    (and C_0, and C_{T/2} for even T, to be symmetric themselves).

    Entry (i, j) then depends only on ((j - i) mod n, i mod m), the
    m-periodic circulant structure.
    """
    m = period
    t_count = n // m
    blocks = np.empty((t_count, m, m))
    blocks[0] = _symmetrize_upper(dist.sample(rng, (m, m)))
    for t in range(1, t_count // 2 + 1):
        ct = dist.sample(rng, (m, m))
        if 2 * t == t_count:
            blocks[t] = _symmetrize_upper(ct)
        else:
            blocks[t] = ct
            blocks[t_count - t] = ct.T
    rows = [
        np.hstack([blocks[(s - r) % t_count] for s in range(t_count)])
        for r in range(t_count)
    ]
    return np.vstack(rows)


def _draw_repeated_block(n: int, block: SymmetricMatrix) -> np.ndarray:
    t = n // block.dim
    out = np.zeros((n, n))
    for r in range(t):
        lo, hi = r * block.dim, (r + 1) * block.dim
        out[lo:hi, lo:hi] = block.array
    return out


def draw(spec: EnsembleSpec) -> SymmetricMatrix:
    """Materialize one matrix from the spec. Same spec, same bits."""
    if spec.kind is EnsembleKind.REPEATED_BLOCK:
        return SymmetricMatrix(_draw_repeated_block(spec.dim, spec.block))
    rng = _rng_from_seed(spec.seed)
    if spec.kind is EnsembleKind.PST:
        arr = _draw_pst(spec.dim, spec.dist, rng)
    elif spec.kind is EnsembleKind.RS:
        arr = _draw_rs(spec.dim, spec.dist, rng)
    elif spec.kind is EnsembleKind.BLOCK_CIRCULANT:
        arr = _draw_block_circulant(spec.dim, spec.period, spec.dist, rng)
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown ensemble kind {spec.kind}")
    return SymmetricMatrix(arr)


def free_parameter_count(spec: EnsembleSpec) -> int:
    """Number of independent scalars behind one draw."""
    n = spec.dim
    if spec.kind is EnsembleKind.PST:
        return (n + 1) // 2
    if spec.kind is EnsembleKind.RS:
        return n * (n + 1) // 2
    if spec.kind is EnsembleKind.BLOCK_CIRCULANT:
        m = spec.period
        t_count = n // m
        sym = m * (m + 1) // 2  # independent entries of a symmetric block
        if t_count % 2 == 0:
            return 2 * sym + (t_count // 2 - 1) * m * m
        return sym + (t_count // 2) * m * m
    return 0
