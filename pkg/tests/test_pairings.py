"""Pairing-count kernel vs an independent brute-force oracle.

The oracle below shares no code with the package: it enumerates every
perfect matching of the letter positions recursively and rejects a
matching if any crossing chord pair involves a b-chord.  The package
kernel instead sums over noncrossing b-matchings and multiplies face
factorials, so agreement between the two is a real check, not an echo.
"""

from __future__ import annotations

import itertools
import random

import pytest

from disco_rmt import pairings
from disco_rmt import _pairings_py


# --- independent oracle -------------------------------------------------

def _chords_cross(p, q):
    (a1, a2), (b1, b2) = sorted(p), sorted(q)
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def _matchings(positions):
    if not positions:
        yield ()
        return
    first, rest = positions[0], positions[1:]
    for i in range(len(rest)):
        pair = (first, rest[i])
        for sub in _matchings(rest[:i] + rest[i + 1 :]):
            yield (pair,) + sub


def oracle_count(word: str) -> int:
    """Number of same-letter matchings where no b-chord is crossed."""
    total = 0
    for matching in _matchings(tuple(range(len(word)))):
        if any(word[i] != word[j] for i, j in matching):
            continue
        legal = True
        for x, y in itertools.combinations(matching, 2):
            if _chords_cross(x, y) and ("b" in (word[x[0]], word[y[0]])):
                legal = False
                break
        if legal:
            total += 1
    return total


def all_words(length):
    return ("".join(w) for w in itertools.product("ab", repeat=length))


# --- frozen values ------------------------------------------------------

@pytest.mark.parametrize(
    "word,expected",
    [
        ("", 1),
        ("aa", 1),
        ("bb", 1),
        ("ab", 0),
        ("aaaa", 3),
        ("bbbb", 2),
        ("aabb", 1),
        ("abab", 0),
        ("abba", 1),
        ("aaaaaa", 15),
        ("bbbbbb", 5),
        ("aabbbb", 2),
        ("ababbb", 0),
        ("abbabb", 1),
    ],
)
def test_known_counts(word, expected):
    assert pairings.legal_pairing_count(word) == expected


def test_matches_oracle_exhaustively_through_length_8():
    for length in (2, 4, 6, 8):
        for word in all_words(length):
            assert pairings.legal_pairing_count(word) == oracle_count(word), word


def test_matches_oracle_length_10():
    for word in all_words(10):
        assert pairings.legal_pairing_count(word) == oracle_count(word), word


def test_odd_letter_count_gives_zero():
    assert pairings.legal_pairing_count("aab") == 0
    assert pairings.legal_pairing_count("abb") == 0
    assert pairings.legal_pairing_count("aaabbb") == 0


def test_rejects_other_letters():
    with pytest.raises(ValueError):
        pairings.legal_pairing_count("axb")


# --- invariance properties ----------------------------------------------

def test_rotation_invariance():
    # counts live on a circle, so any rotation of the word is the same diagram
    rng = random.Random(20240817)
    for _ in range(60):
        length = rng.choice((8, 10, 12))
        word = "".join(rng.choice("ab") for _ in range(length))
        base = pairings.legal_pairing_count(word)
        for r in range(1, length):
            assert pairings.legal_pairing_count(word[r:] + word[:r]) == base


def test_reflection_invariance():
    # reversal maps crossings to crossings and letters to themselves
    rng = random.Random(11)
    for _ in range(40):
        word = "".join(rng.choice("ab") for _ in range(12))
        assert pairings.legal_pairing_count(word[::-1]) == pairings.legal_pairing_count(word)


def test_all_a_and_all_b_closed_forms():
    # a^{2k} pairs freely: (2k-1)!!.  b^{2k} must be noncrossing: Catalan(k).
    for k in range(1, 6):
        assert pairings.legal_pairing_count("a" * (2 * k)) == pairings.double_factorial(2 * k - 1)
        assert pairings.legal_pairing_count("b" * (2 * k)) == len(
            pairings.noncrossing_matchings(2 * k)
        )


# --- class sums ---------------------------------------------------------

def test_word_class_sum_equals_brute_force_sum():
    for length in (2, 4, 6, 8, 10):
        for num_b in range(0, length + 1):
            brute = sum(
                pairings.legal_pairing_count(w)
                for w in all_words(length)
                if w.count("b") == num_b
            )
            assert pairings.word_class_sum(length, num_b) == brute


def test_word_class_sum_empty_word():
    assert pairings.word_class_sum(0, 0) == 1


def test_odd_b_count_class_sum_is_zero():
    assert pairings.word_class_sum(6, 3) == 0
    assert pairings.word_class_sum(8, 1) == 0


# --- helper tables ------------------------------------------------------

def test_double_factorial_values():
    assert [pairings.double_factorial(n) for n in (-1, 0, 1, 2, 3, 4, 5, 7, 9)] == [
        1, 1, 1, 2, 3, 8, 15, 105, 945,
    ]


def test_noncrossing_matchings_are_catalan_counted():
    catalan = [1, 1, 2, 5, 14, 42]
    for k, expected in enumerate(catalan):
        assert len(pairings.noncrossing_matchings(2 * k)) == expected


def test_noncrossing_matchings_are_noncrossing_and_perfect():
    for k in (1, 2, 3, 4):
        for matching in pairings.noncrossing_matchings(2 * k):
            seen = sorted(p for pair in matching for p in pair)
            assert seen == list(range(2 * k))
            for x, y in itertools.combinations(matching, 2):
                assert not _chords_cross(x, y)


# --- compiled kernel vs pure python ------------------------------------

@pytest.mark.skipif(not pairings.COMPILED_AVAILABLE, reason="extension not built")
def test_compiled_kernel_matches_pure_python():
    import disco_rmt._pairings_cy as cy

    rng = random.Random(7)
    for _ in range(30):
        word = "".join(rng.choice("ab") for _ in range(rng.choice((8, 10, 12, 14))))
        assert cy.legal_pairing_count(word) == _pairings_py.legal_pairing_count(word)
    for length in (8, 10, 12):
        for num_b in range(0, length + 1, 2):
            assert cy.word_class_sum(length, num_b) == _pairings_py.word_class_sum(
                length, num_b
            )


def test_long_words_fall_back_to_python():
    # beyond the compiled kernel's length cap the wrapper must still answer
    assert pairings.legal_pairing_count("a" * 30) == pairings.double_factorial(29)
