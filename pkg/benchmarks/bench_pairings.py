#!/usr/bin/env python3
"""Time the compiled pairing kernel against the pure-Python fallback.

The hot loop is word_class_sum: for a word length 2k it walks all
C(2k, j) letter masks per b-count j, canonicalizes each under rotation,
and counts legal chord pairings once per class.  Run as

    python benchmarks/bench_pairings.py [--max-order 16]

Both implementations share the noncrossing-matching tables, so the gap
below is the per-word counting cost only.
"""

from __future__ import annotations

import argparse
import time

from disco_rmt import _pairings_py
from disco_rmt import pairings


def _clear_caches() -> None:
    _pairings_py.legal_pairing_count.cache_clear()
    _pairings_py.word_class_sum.cache_clear()


def _moment_via(word_class_sum, order: int) -> int:
    return sum(word_class_sum(order, j) for j in range(0, order + 1, 2))


def _time(fn, order: int, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        _clear_caches()
        t0 = time.perf_counter()
        fn(order)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=16)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    if not pairings.COMPILED_AVAILABLE:
        raise SystemExit("compiled kernel not built; nothing to compare")

    import disco_rmt._pairings_cy as cy

    print(f"{'order':>5}  {'python (s)':>12}  {'cython (s)':>12}  {'speedup':>8}")
    for order in range(8, args.max_order + 1, 2):
        t_py = _time(lambda m: _moment_via(_pairings_py.word_class_sum, m), order, args.repeats)
        t_cy = _time(lambda m: _moment_via(cy.word_class_sum, m), order, args.repeats)
        num_py = _moment_via(_pairings_py.word_class_sum, order)
        num_cy = _moment_via(cy.word_class_sum, order)
        assert num_py == num_cy, f"kernels disagree at order {order}"
        print(f"{order:>5}  {t_py:>12.4f}  {t_cy:>12.4f}  {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
