"""Pairing-count kernel selection.

The compiled kernel (``_pairings_cy``) and the pure-Python one
(``_pairings_py``) implement the same two functions with identical
semantics; the compiled one is picked when it imported cleanly.  Set
``DISCO_RMT_PURE_PY=1`` to force the fallback, e.g. for benchmarking.

The compiled kernel counts in 64-bit integers, which is safe for words
up to length 28; longer words are routed to the pure kernel, which uses
Python's arbitrary-precision integers.
"""

from __future__ import annotations

import os

from . import _pairings_py as _py

_CY_MAX_LEN = 28

_cy = None
if os.environ.get("DISCO_RMT_PURE_PY", "") in ("", "0"):
    try:
        from . import _pairings_cy as _cy  # type: ignore[no-redef]
    except ImportError:
        _cy = None

COMPILED_AVAILABLE = _cy is not None
IMPLEMENTATION = _cy.IMPLEMENTATION if _cy is not None else _py.IMPLEMENTATION

double_factorial = _py.double_factorial
noncrossing_matchings = _py.noncrossing_matchings


def legal_pairing_count(word: str) -> int:
    """T(word): number of legal same-letter pairings of the word."""
    if _cy is not None and len(word) <= _CY_MAX_LEN:
        return _cy.legal_pairing_count(word)
    return _py.legal_pairing_count(word)


def word_class_sum(length: int, num_b: int) -> int:
    """Sum of T over all words of this length with num_b b's."""
    if _cy is not None and length <= _CY_MAX_LEN:
        return _cy.word_class_sum(length, num_b)
    return _py.word_class_sum(length, num_b)
