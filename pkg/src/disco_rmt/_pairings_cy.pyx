# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pairing-count kernel.

Same algorithm and contracts as ``_pairings_py`` (see that module for
the mathematics); this version runs the word loop, rotation
canonicalization, and the face-count product in C.  Counts are held in
64-bit integers, safe for words up to length 28 (enforced here); the
selecting wrapper routes longer words to the pure-Python kernel.
"""

import array as _pyarray

from cpython cimport array as _carray
from libc.stdint cimport int64_t, uint64_t

from . import _pairings_py as _py

IMPLEMENTATION = "cython"

cdef enum:
    MAX_LEN = 28
    DF_LEN = 15        # MAX_LEN / 2 + 1
    SIG_SPACE = 16384  # 2 ** (MAX_LEN / 2)

# DF[m] = (2m - 1)!!, the pairing count of 2m points; DF[0] = 1.
cdef int64_t DF[DF_LEN]
DF[0] = 1
cdef int _m
for _m in range(1, DF_LEN):
    DF[_m] = DF[_m - 1] * (2 * _m - 1)

# Face-count scratch, reset lazily via stamps (one bump per matching).
cdef int64_t _cnt[SIG_SPACE]
cdef int64_t _stamp[SIG_SPACE]
cdef int64_t _now = 0

_matchings_cache = {}


cdef tuple _get_matchings(int j):
    """Flattened noncrossing matchings of j points: (count, array of index
    pairs).  Reuses the pure-Python enumerator; cached per j."""
    cached = _matchings_cache.get(j)
    if cached is None:
        ms = _py.noncrossing_matchings(j)
        flat = _pyarray.array("i", [x for m in ms for pair in m for x in pair])
        cached = (len(ms), flat)
        _matchings_cache[j] = cached
    return cached


cdef int64_t _count_from_mask(int n, uint64_t mask, int n_match, int* flat):
    global _now
    cdef int a_pos[MAX_LEN]
    cdef int b_pos[MAX_LEN]
    cdef int touched[MAX_LEN]
    cdef int na = 0, nb = 0
    cdef int i, mi, t, x, u, v, sig, nch, base, ntouched
    cdef int64_t total = 0, prod, c

    for i in range(n):
        if (mask >> i) & 1:
            b_pos[nb] = i
            nb += 1
        else:
            a_pos[na] = i
            na += 1
    if (na & 1) or (nb & 1):
        return 0

    nch = nb >> 1
    for mi in range(n_match):
        base = mi * nb
        _now += 1
        ntouched = 0
        for i in range(na):
            x = a_pos[i]
            sig = 0
            for t in range(nch):
                u = b_pos[flat[base + 2 * t]]
                v = b_pos[flat[base + 2 * t + 1]]
                if u < x < v:
                    sig |= 1 << t
            if _stamp[sig] != _now:
                _stamp[sig] = _now
                _cnt[sig] = 0
                touched[ntouched] = sig
                ntouched += 1
            _cnt[sig] += 1
        prod = 1
        for i in range(ntouched):
            c = _cnt[touched[i]]
            if c & 1:
                prod = 0
                break
            prod *= DF[c >> 1]
        total += prod
    return total


cdef uint64_t _canonical_rotation(uint64_t mask, int n):
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t best = mask, m = mask
    cdef int r
    for r in range(n - 1):
        m = ((m >> 1) | (m << (n - 1))) & full
        if m < best:
            best = m
    return best


cdef int64_t _count_word(int n, uint64_t mask):
    cdef int nb = 0
    cdef int i
    for i in range(n):
        if (mask >> i) & 1:
            nb += 1
    cdef int n_match
    cdef _carray.array flat
    n_match, flat = _get_matchings(nb if nb % 2 == 0 else 0)
    cdef int* flat_ptr = flat.data.as_ints if len(flat) else NULL
    return _count_from_mask(n, mask, n_match, flat_ptr)


def legal_pairing_count(word):
    """T(word) for a word over {a, b}; word length at most 28."""
    cdef int n = len(word)
    if n > MAX_LEN:
        raise ValueError(f"compiled kernel handles words up to length {MAX_LEN}")
    cdef uint64_t mask = 0
    cdef int i
    for i, ch in enumerate(word):
        if ch == "b":
            mask |= <uint64_t>1 << i
        elif ch != "a":
            raise ValueError(f"word may contain only 'a' and 'b', got {ch!r}")
    return int(_count_word(n, mask))


def word_class_sum(length, num_b):
    """Sum of T over all words of the given length with num_b b's."""
    cdef int n = length
    cdef int j = num_b
    if not 0 <= j <= n:
        raise ValueError("num_b out of range")
    if n > MAX_LEN:
        raise ValueError(f"compiled kernel handles words up to length {MAX_LEN}")
    if j % 2 or (n - j) % 2:
        return 0
    if n == 0:
        return 1

    # Group words by cyclic class; evaluate T once per class.
    classes = {}
    cdef uint64_t mask, canon, c, r
    cdef uint64_t limit = <uint64_t>1 << n
    if j == 0:
        classes[_canonical_rotation(0, n)] = 1
    else:
        mask = (<uint64_t>1 << j) - 1
        while mask < limit:
            canon = _canonical_rotation(mask, n)
            classes[canon] = classes.get(canon, 0) + 1
            # Gosper's hack: next mask with the same popcount.
            c = mask & (~mask + 1)
            r = mask + c
            mask = (((r ^ mask) >> 2) // c) | r

    cdef int n_match
    cdef _carray.array flat
    n_match, flat = _get_matchings(j)
    cdef int* flat_ptr = flat.data.as_ints if len(flat) else NULL

    total = 0
    for canon_key, mult in classes.items():
        total += mult * int(_count_from_mask(n, <uint64_t>canon_key, n_match, flat_ptr))
    return total
