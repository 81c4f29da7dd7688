"""Exact limiting spectral moments of the depth-1 block construction
with a palindromic-Toeplitz diagonal and an independent-entry
off-diagonal, by combinatorial enumeration.

Even moments come from a sum over two-letter words: expanding the
trace of (D_1)^(2k) block-wise and keeping only the terms that survive
the large-dimension limit leaves

    M_2k = 2^(-k) * sum over words w in {a, b}^(2k) of T(w),

where T(w) counts the legal same-letter chord pairings of w (see
``pairings``).  Words with an odd count of either letter contribute
zero.  Odd moments vanish.

A second, independent route evaluates each word class [A^I B^J] through
its noncrossing b-matchings read as plane trees: P(alpha, beta) below
sums, over rotation classes of noncrossing matchings of 2 beta points,
a product of double factorials and binomials per face.  The two routes
and the closed form for the canonical word a^I b^J must agree exactly;
the test suite enforces this.

Everything here is exact rational arithmetic (``fractions.Fraction``);
floats never enter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pairings import (
    double_factorial,
    legal_pairing_count,
    noncrossing_matchings,
    word_class_sum,
)

DEFAULT_MAX_ORDER = 16

PairingWord = str


@dataclass(frozen=True)
class ChordDiagram:
    """One legal pairing of a word: chords as position pairs per letter."""

    word: PairingWord
    a_chords: tuple[tuple[int, int], ...]
    b_chords: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PlaneTreeDual:
    """A rotation class of noncrossing matchings of 2*beta circle points.

    ``face_degrees`` lists, per face of the chord diagram, the number of
    bounding chords (equivalently the degree of the dual tree vertex);
    ``sigma_r`` is the number of rotations fixing the matching and
    ``class_size`` the orbit size, with sigma_r * class_size = 2*beta.
    """

    sigma_r: int
    face_degrees: tuple[int, ...]
    class_size: int


@dataclass(frozen=True)
class ExactMoment:
    order: int
    value: Fraction


def _crossing(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    i, j = c1
    p, q = c2
    return (i < p < j < q) or (p < i < q < j)


def _matchings_of(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for idx in range(len(rest)):
        partner = rest[idx]
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in _matchings_of(remaining):
            yield ((first, partner),) + tail


def legal_pairings(word: PairingWord):
    """Yield every legal pairing as a ChordDiagram (small words only).

    This is the transparent quadratic-check enumeration; counting goes
    through ``legal_pairing_count``, which the tests verify against it.
    """
    a_pos = tuple(i for i, ch in enumerate(word) if ch == "a")
    b_pos = tuple(i for i, ch in enumerate(word) if ch == "b")
    if len(a_pos) + len(b_pos) != len(word):
        raise ValueError("word may contain only 'a' and 'b'")
    if len(a_pos) % 2 or len(b_pos) % 2:
        return
    for b_match in _matchings_of(b_pos):
        if any(_crossing(c1, c2) for c1 in b_match for c2 in b_match if c1 < c2):
            continue
        for a_match in _matchings_of(a_pos):
            if any(_crossing(ac, bc) for ac in a_match for bc in b_match):
                continue
            yield ChordDiagram(word=word, a_chords=a_match, b_chords=b_match)


@lru_cache(maxsize=None)
def exact_moment(order: int, max_order: int = DEFAULT_MAX_ORDER) -> Fraction:
    """M_order as an exact rational, via the word sum."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > max_order:
        raise ValueError(
            f"order {order} above cap {max_order}; pass max_order to override"
        )
    if order % 2:
        return Fraction(0)
    k = order // 2
    total = sum(word_class_sum(order, j) for j in range(0, order + 1, 2))
    return Fraction(total, 2**k)


def word_class_moment(num_a: int, num_b: int) -> Fraction:
    """Contribution of the class [A^num_a B^num_b] to M_(num_a+num_b),
    via the word sum: 2^(-k) * sum of T over the class's words."""
    if num_a < 0 or num_b < 0:
        raise ValueError("letter counts must be nonnegative")
    k = (num_a + num_b) // 2
    return Fraction(word_class_sum(num_a + num_b, num_b), 2**k)


def canonical_class_contribution(num_a: int, num_b: int) -> Fraction:
    """Closed form for T(a^I b^J): (I-1)!! * (2/(J+2)) * C(J, J/2).

    The b-factor is the number of noncrossing matchings of J points
    (Catalan(J/2)); the a-factor counts pairings of a block of I points.
    """
    if num_a < 0 or num_b < 0 or num_a % 2 or num_b % 2:
        raise ValueError("letter counts must be even and nonnegative")
    return (
        Fraction(double_factorial(num_a - 1))
        * Fraction(2, num_b + 2)
        * math.comb(num_b, num_b // 2)
    )


def _rotate_matching(chords, n: int):
    moved = []
    for u, v in chords:
        u2, v2 = (u + 1) % n, (v + 1) % n
        moved.append((u2, v2) if u2 < v2 else (v2, u2))
    return tuple(sorted(moved))


@lru_cache(maxsize=None)
def blue_matching_duals(beta: int) -> tuple[PlaneTreeDual, ...]:
    """Rotation classes of noncrossing matchings of 2*beta points, with
    face degrees; the duals are the plane trees on beta + 1 vertices."""
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    if beta == 0:
        return (PlaneTreeDual(sigma_r=1, face_degrees=(0,), class_size=1),)
    n = 2 * beta
    seen: set[tuple[tuple[int, int], ...]] = set()
    duals = []
    for matching in noncrossing_matchings(n):
        key = tuple(sorted(matching))
        if key in seen:
            continue
        orbit = {key}
        rot = key
        for _ in range(n - 1):
            rot = _rotate_matching(rot, n)
            orbit.add(rot)
        seen |= orbit
        sigma_r = n // len(orbit)
        # Face of each boundary arc (t, t+1): the set of chords strictly
        # containing its midpoint; equal signature means same face.
        groups: dict[int, int] = {}
        for t in range(n):
            sig = 0
            for ci, (u, v) in enumerate(key):
                if u <= t < v:
                    sig |= 1 << ci
            groups[sig] = groups.get(sig, 0) + 1
        degrees = tuple(sorted(groups.values()))
        if len(degrees) != beta + 1:
            raise AssertionError("chord diagram face count is off")
        duals.append(
            PlaneTreeDual(sigma_r=sigma_r, face_degrees=degrees, class_size=len(orbit))
        )
    return tuple(duals)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


@lru_cache(maxsize=None)
def p_alpha_beta(alpha: int, beta: int) -> Fraction:
    """Average over rotation classes of blue matchings of the number of
    ways to attach 2*alpha red points, pairing within faces.

    P(alpha, 0) is defined as (2*alpha - 1)!! so the pure-red class fits
    the same bookkeeping.
    """
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be nonnegative")
    if beta == 0:
        return Fraction(double_factorial(2 * alpha - 1))
    total = Fraction(0)
    for dual in blue_matching_duals(beta):
        s = 0
        for gammas in _compositions(alpha, beta + 1):
            term = 1
            for g, d in zip(gammas, dual.face_degrees):
                term *= double_factorial(2 * g - 1) * math.comb(2 * g + d - 1, d - 1)
            s += term
        total += Fraction(s, dual.sigma_r)
    return total


def class_contribution_via_trees(num_a: int, num_b: int) -> Fraction:
    """Contribution of [A^num_a B^num_b] to M_(num_a+num_b), via the
    plane-tree formula.

    Mixed classes carry multiplicity (I + J): summing 1/sigma over all
    rotated word placements is what the blue-rotation average encodes.
    The pure-A class is a single word, so its multiplicity is 1.
    """
    if num_a < 0 or num_b < 0 or num_a % 2 or num_b % 2:
        raise ValueError("letter counts must be even and nonnegative")
    k = (num_a + num_b) // 2
    p = p_alpha_beta(num_a // 2, num_b // 2)
    if num_b == 0:
        return Fraction(p, 2**k)
    return Fraction(num_a + num_b, 2**k) * p


def exact_moment_via_trees(order: int) -> Fraction:
    """M_order summed class-by-class through the tree formula."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order % 2:
        return Fraction(0)
    return sum(
        (class_contribution_via_trees(order - j, j) for j in range(0, order + 1, 2)),
        Fraction(0),
    )


def gaussian_moment(order: int) -> int:
    """Standard normal moments: (order - 1)!! for even order, else 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order % 2:
        return 0
    return double_factorial(order - 1)


def semicircle_moment(order: int) -> int:
    """Unit-variance semicircle moments: Catalan(order/2) for even order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order % 2:
        return 0
    k = order // 2
    return math.comb(order, k) // (k + 1)


@dataclass(frozen=True)
class BoundCheck:
    """Exact bracketing of one even moment.

    lower:      semicircle moment (Catalan number)
    upper:      (2k-1)!! * (1 + 1/(k+1)! - 2^-k), strictly below Gaussian
    ratio:      M_2k / (2k-1)!!, strictly decreasing in k
    root_bound: M_2k^(1/2k) > sqrt(k)/2, the unbounded-support bound,
                checked exactly as M_2k * 4^k > k^k
    """

    order: int
    value: Fraction
    lower: Fraction
    upper: Fraction
    gaussian: int
    ratio: Fraction
    lower_ok: bool
    upper_ok: bool
    gaussian_ok: bool
    root_bound_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.gaussian_ok and self.root_bound_ok


def bound_suite(order: int, max_order: int = DEFAULT_MAX_ORDER) -> BoundCheck:
    if order <= 0 or order % 2:
        raise ValueError("order must be a positive even integer")
    k = order // 2
    value = exact_moment(order, max_order)
    lower = Fraction(semicircle_moment(order))
    gaussian = gaussian_moment(order)
    upper = gaussian * (1 + Fraction(1, math.factorial(k + 1)) - Fraction(1, 2**k))
    return BoundCheck(
        order=order,
        value=value,
        lower=lower,
        upper=upper,
        gaussian=gaussian,
        ratio=value / gaussian,
        lower_ok=lower <= value,
        upper_ok=value <= upper,
        gaussian_ok=upper <= gaussian,
        root_bound_ok=value * 4**k > k**k,
    )


@dataclass(frozen=True)
class ClassTableRow:
    order: int
    num_a: int
    num_b: int
    weighted_p: Fraction  # (I + J) * P(I/2, J/2)
    contribution: Fraction


def class_table(max_order: int) -> list[ClassTableRow]:
    """Mixed-class contributions (both letters present), order by order."""
    rows = []
    for order in range(4, max_order + 1, 2):
        for num_a in range(2, order - 1, 2):
            num_b = order - num_a
            p = p_alpha_beta(num_a // 2, num_b // 2)
            rows.append(
                ClassTableRow(
                    order=order,
                    num_a=num_a,
                    num_b=num_b,
                    weighted_p=(num_a + num_b) * p,
                    contribution=class_contribution_via_trees(num_a, num_b),
                )
            )
    return rows


def exact_moment_report(orders, max_order: int = DEFAULT_MAX_ORDER) -> list[ExactMoment]:
    return [ExactMoment(order=m, value=exact_moment(m, max_order)) for m in orders]
