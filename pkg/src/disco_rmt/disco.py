"""Recursive two-by-two block constructions and their decompositions.

The depth-d construction D_d places the previous level on the diagonal
and a fresh symmetric matrix B_d on the off-diagonal:

    D_0 = A,    D_i = [[D_{i-1}, B_i], [B_i, D_{i-1}]]

so D_d is square of dimension 2^d * N when A is N x N and B_i is
2^(i-1) N x 2^(i-1) N.

Two decompositions of a realized D_d are provided: the diagonal/
off-diagonal split at depth 1 (``hat_decompose``) and the split of D_d
into a block-diagonal part built from A - B0 plus a remainder whose
diagonal blocks are all B0 (``decompose``).  Both are exact identities;
``decompose`` asserts exactness in the subtraction direction
(D_d - b_part == c_part) because IEEE addition does not invert a rounded
subtraction bitwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensembles import EnsembleSpec, SymmetricMatrix, draw


@dataclass(frozen=True)
class DiscoPlan:
    """Specs for A and each off-diagonal level; dims must double per level.

    ``b0_spec`` (same dim as A) is drawn only by decomposition flows.
    """

    depth: int
    a_spec: EnsembleSpec
    b_specs: tuple[EnsembleSpec, ...]
    b0_spec: EnsembleSpec | None = None

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if len(self.b_specs) != self.depth:
            raise ValueError(
                f"need exactly {self.depth} off-diagonal specs, got {len(self.b_specs)}"
            )
        n = self.a_spec.dim
        for i, spec in enumerate(self.b_specs, start=1):
            want = 2 ** (i - 1) * n
            if spec.dim != want:
                raise ValueError(f"level {i} spec has dim {spec.dim}, want {want}")
        if self.b0_spec is not None and self.b0_spec.dim != n:
            raise ValueError("b0 spec must match the base dimension")

    @property
    def base_dim(self) -> int:
        return self.a_spec.dim

    @property
    def dim(self) -> int:
        return 2**self.depth * self.base_dim


def assemble_disco(a: SymmetricMatrix, bs) -> SymmetricMatrix:
    """Assemble D_d from realized components (no drawing)."""
    d = a.array
    for i, b in enumerate(bs, start=1):
        if b.dim != d.shape[0]:
            raise ValueError(f"level {i} block has dim {b.dim}, want {d.shape[0]}")
        d = np.block([[d, b.array], [b.array, d]])
    return SymmetricMatrix(d)


def draw_components(plan: DiscoPlan) -> tuple[SymmetricMatrix, list[SymmetricMatrix]]:
    return draw(plan.a_spec), [draw(s) for s in plan.b_specs]


def build_disco(plan: DiscoPlan) -> SymmetricMatrix:
    """Draw every component from its spec and assemble D_d."""
    a, bs = draw_components(plan)
    return assemble_disco(a, bs)


@dataclass(frozen=True)
class DiscoDecomposition:
    disco: SymmetricMatrix
    b_part: SymmetricMatrix
    c_part: SymmetricMatrix


def decompose(a: SymmetricMatrix, b0: SymmetricMatrix, bs) -> DiscoDecomposition:
    """Split D_d into c_part + b_part.

    c_part is block-diagonal with 2^d copies of (a - b0); b_part is D_d
    with every N x N diagonal block replaced by b0 (bitwise).  Exactness
    is asserted as D_d - b_part == c_part, which holds entrywise in IEEE
    arithmetic.
    """
    if b0.dim != a.dim:
        raise ValueError("b0 must match a's dimension")
    d = assemble_disco(a, bs)
    n = a.dim
    copies = d.dim // n

    b_arr = d.array.copy()
    c_arr = np.zeros_like(b_arr)
    diff = a.array - b0.array
    for r in range(copies):
        lo, hi = r * n, (r + 1) * n
        b_arr[lo:hi, lo:hi] = b0.array
        c_arr[lo:hi, lo:hi] = diff

    if not np.array_equal(d.array - b_arr, c_arr):
        raise AssertionError("decomposition failed to reconstruct exactly")
    return DiscoDecomposition(disco=d, b_part=SymmetricMatrix(b_arr), c_part=SymmetricMatrix(c_arr))


def hat_decompose(a: SymmetricMatrix, b0: SymmetricMatrix) -> tuple[SymmetricMatrix, SymmetricMatrix]:
    """Depth-1 split: diag(a, a) plus the pure off-diagonal lift of b0.

    The two parts have disjoint supports, so a_hat + b_hat reproduces
    D_1(a, b0) entrywise exactly.
    """
    if b0.dim != a.dim:
        raise ValueError("b0 must match a's dimension")
    n = a.dim
    a_hat = np.zeros((2 * n, 2 * n))
    a_hat[:n, :n] = a.array
    a_hat[n:, n:] = a.array
    b_hat = np.zeros((2 * n, 2 * n))
    b_hat[:n, n:] = b0.array
    b_hat[n:, :n] = b0.array
    return SymmetricMatrix(a_hat), SymmetricMatrix(b_hat)


def kronecker(x: SymmetricMatrix, y: SymmetricMatrix) -> SymmetricMatrix:
    """Kronecker product; symmetric since both factors are."""
    return SymmetricMatrix(np.kron(x.array, y.array))
