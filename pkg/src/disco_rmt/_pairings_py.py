"""Pure-Python kernel for chord-pairing counts over two-letter words.

A word w in {a, b}^n labels n points on a circle, read clockwise from a
fixed cut.  A legal pairing matches the a-positions among themselves and
the b-positions among themselves so that no chord of either letter
crosses a b-b chord; a-a chords may cross each other freely.  T(w) is
the number of legal pairings (zero when either letter count is odd).

Counting trick: the b-chords must form a noncrossing matching, and once
it is fixed the b-chords cut the disc into faces.  An a-a chord is legal
iff its endpoints lie in the same face, and two a-positions share a face
iff every b-chord has both or neither of them strictly inside.  Within a
face of 2m a-points all (2m-1)!! pairings are legal (a-a crossings are
free), so

    T(w) = sum over noncrossing b-matchings of
           prod over faces (count_a_in_face - 1)!!   (0 if any count odd)

Two chords (i, j) and (p, q) cross iff exactly one of p, q lies strictly
between i and j in linear position; for points on a circle read from a
cut this linear test and the circular one agree.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

IMPLEMENTATION = "python"


def double_factorial(n: int) -> int:
    """(n)!! for odd n >= -1; (-1)!! == 1 by convention."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@lru_cache(maxsize=None)
def noncrossing_matchings(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All noncrossing perfect matchings of points 0..n-1, as sorted pairs.

    Point 0 must pair with an odd point m (else one side has odd size),
    splitting the rest into an inside run and an outside run.
    """
    if n % 2:
        return ()
    if n == 0:
        return ((),)
    out = []
    for m in range(1, n, 2):
        inner = noncrossing_matchings(m - 1)
        outer = noncrossing_matchings(n - m - 1)
        for left in inner:
            shifted_left = tuple((u + 1, v + 1) for u, v in left)
            for right in outer:
                shifted_right = tuple((u + m + 1, v + m + 1) for u, v in right)
                out.append(((0, m),) + shifted_left + shifted_right)
    return tuple(out)


def _count_for_positions(a_pos, b_pos) -> int:
    total = 0
    for matching in noncrossing_matchings(len(b_pos)):
        chords = [(b_pos[i], b_pos[j]) for i, j in matching]
        counts: dict[int, int] = {}
        for x in a_pos:
            sig = 0
            for t, (u, v) in enumerate(chords):
                if u < x < v:
                    sig |= 1 << t
            counts[sig] = counts.get(sig, 0) + 1
        prod = 1
        for c in counts.values():
            if c % 2:
                prod = 0
                break
            prod *= double_factorial(c - 1)
        total += prod
    return total


@lru_cache(maxsize=None)
def legal_pairing_count(word: str) -> int:
    """T(word) for a word over {a, b}, evaluated on the given linear cut."""
    a_pos = []
    b_pos = []
    for i, ch in enumerate(word):
        if ch == "a":
            a_pos.append(i)
        elif ch == "b":
            b_pos.append(i)
        else:
            raise ValueError(f"word may contain only 'a' and 'b', got {ch!r}")
    if len(a_pos) % 2 or len(b_pos) % 2:
        return 0
    return _count_for_positions(a_pos, b_pos)


def _canonical_rotation(mask: int, n: int) -> int:
    full = (1 << n) - 1
    best = mask
    m = mask
    for _ in range(n - 1):
        m = ((m >> 1) | (m << (n - 1))) & full
        if m < best:
            best = m
    return best


def _mask_word(mask: int, n: int) -> str:
    return "".join("b" if (mask >> i) & 1 else "a" for i in range(n))


@lru_cache(maxsize=None)
def word_class_sum(length: int, num_b: int) -> int:
    """Sum of T(w) over all words of the given length with num_b b's.

    Words are grouped by their cyclic class first: T is rotation
    invariant, so each class is evaluated once at a canonical rotation
    and weighted by the class size.
    """
    if not 0 <= num_b <= length:
        raise ValueError("num_b out of range")
    if num_b % 2 or (length - num_b) % 2:
        return 0
    if length == 0:
        return 1
    classes: dict[int, int] = {}
    for positions in combinations(range(length), num_b):
        mask = 0
        for p in positions:
            mask |= 1 << p
        canon = _canonical_rotation(mask, length)
        classes[canon] = classes.get(canon, 0) + 1
    return sum(
        mult * legal_pairing_count(_mask_word(mask, length))
        for mask, mult in classes.items()
    )
