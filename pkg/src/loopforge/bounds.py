"""Certified lower bounds on loop crossings, and closed-form family bounds.

Windings are alternating two-letter segments circling one obstacle; matching
orientations of the bordering arcs force crossings, which add up across the
windings of a single obstacle.  Snails are the basepoint-adjacent analogue
at the ends of a based word.  The closed-form evaluators collect the
explicit numeric bounds on the extremal family sizes f(n,k) and g(n,k).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .words import (
    NORTH,
    SOUTH,
    GapAlphabet,
    PreconditionError,
    Span,
    V,
    Word,
    flip,
    hemisphere_after,
    is_pattern_free,
    maximal_two_letter_words,
    orientation,
)


def obstacle_gap_pairs(alphabet: GapAlphabet) -> dict[int, tuple[int, int]]:
    """Gap pair incident to each obstacle; obstacle 0 is the point at
    infinity, obstacle i >= 1 the i-th puncture (1 = the basepoint)."""
    n = alphabet.n
    return {i: ((i - 1) % (n + 1), i % (n + 1)) for i in range(n + 1)}


@dataclass(frozen=True)
class Winding:
    """An alternating segment around one obstacle: `span` is the maximal
    two-letter subword, `depth` the number of full turns it forces."""

    obstacle: int
    depth: int
    span: Span
    form: str  # "aba"-style odd form or "abab" even form

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise PreconditionError("a winding needs depth at least 1")


@dataclass(frozen=True)
class Snail:
    """A basepoint-adjacent alternating segment at an end of a based word.

    `depth` is signed: positive when the alternation starts 0 1, negative
    when it starts 1 0; `terminal` is the first letter after the alternating
    block (the basepoint when the block spans the whole inner word).
    """

    depth: int
    terminal: int
    polarity: str
    span: Span


def _span_windings(
    letters: tuple[int, ...],
    alphabet: GapAlphabet,
    basepoint_at_ends: bool,
) -> list[Winding]:
    n = alphabet.n
    out: list[Winding] = []
    for obstacle, (a, b) in obstacle_gap_pairs(alphabet).items():
        if a == b:
            continue
        for span in maximal_two_letter_words(letters, a, b):
            if span.depth < 1:
                continue
            left_is_end = span.start == 0
            right_is_end = span.end == len(letters) - 1
            if obstacle == 1:
                # borders of basepoint windings must be real crossings away
                # from the basepoint; end-touching blocks are snail material
                if left_is_end or right_is_end:
                    continue
            elif not basepoint_at_ends and (left_is_end or right_is_end):
                # an off-equator based word has no crossing bordering its ends
                continue
            form = "aba" if span.length % 2 == 1 else "abab"
            out.append(Winding(obstacle, span.depth, span, form))
    return out


def find_windings(word: Word, alphabet: GapAlphabet) -> list[Winding]:
    """All windings of a word; for based words the ends border on the
    basepoint, which is a valid border for every obstacle except the
    basepoint itself."""
    letters = word.inner()
    if not is_pattern_free(letters, "aa"):
        raise PreconditionError("windings are defined on words without adjacent repeats")
    return _span_windings(letters, alphabet, basepoint_at_ends=(word.kind == "v"))


def winding_self_lower_bound(word: Word, alphabet: GapAlphabet) -> int:
    """Lower bound on the self-intersection number from windings.

    Around one obstacle, windings of depths s_1..s_m force
    sum_i s_i + 2 sum_{i<j} min(s_i, s_j) crossings.  Distinct obstacles do
    NOT contribute additively: their winding segments share border arcs, and
    the forced crossings can coincide (the word 202120212 carries two
    depth-1 windings around each of two obstacles, per-obstacle bounds 4 and
    4, yet admits a drawing with only 6 self-crossings).  The bound is
    therefore the maximum over obstacles, oracle-checked exhaustively in the
    tests.
    """
    windings = find_windings(word, alphabet)
    return _aggregate_depths(windings)


def depth_family_bound(depths: list[int]) -> int:
    """Forced crossings of windings of the given depths around one obstacle:
    sum_i s_i + 2 sum_{i<j} min(s_i, s_j)."""
    return sum(depths) + 2 * sum(
        min(depths[i], depths[j])
        for i in range(len(depths))
        for j in range(i + 1, len(depths))
    )


def _aggregate_depths(windings: list[Winding]) -> int:
    by_obstacle: dict[int, list[int]] = {}
    for w in windings:
        by_obstacle.setdefault(w.obstacle, []).append(w.depth)
    return max(
        (depth_family_bound(depths) for depths in by_obstacle.values()), default=0
    )


def _leading_snail(word: Word, first_arc_hemisphere: str, reverse: bool) -> Snail | None:
    inner = word.inner()
    if reverse:
        inner = tuple(reversed(inner))
        polarity = hemisphere_after(first_arc_hemisphere, len(word.inner()))
    else:
        polarity = first_arc_hemisphere
    if not inner or inner[0] not in (0, 1):
        return None
    end = 0
    while end < len(inner) and inner[end] in (0, 1):
        end += 1
    block_len = end
    sign = 1 if inner[0] == 0 else -1
    depth = sign * ((block_len - 1) // 2)
    terminal = inner[end] if end < len(inner) else V
    span = Span(0, 1, 0, end - 1) if block_len >= 2 else Span(0, 1, 0, 0)
    return Snail(depth, terminal, polarity, span)


def find_snails(
    word: Word, alphabet: GapAlphabet, first_arc_hemisphere: str
) -> list[Snail]:
    """The snails of a based word: the basepoint-adjacent alternating block
    at the start, and the one at the end seen by the reversed traversal.
    The end snail's span indexes into the reversed inner word."""
    if word.kind != "v":
        raise PreconditionError("snails live at the ends of based words")
    if not is_pattern_free(word, "aa"):
        raise PreconditionError("snails are defined on words without adjacent repeats")
    out = []
    for reverse in (False, True):
        snail = _leading_snail(word, first_arc_hemisphere, reverse)
        if snail is not None:
            out.append(snail)
    return out


def snail_pair_lower_bound(s1: Snail, s2: Snail) -> int:
    """Forced crossings between two snails of the same polarity.

    Opposite turning directions force min(|s|, |t|) crossings; equal
    directions with both terminals away from the basepoint force
    |s - t| - 1.  No bound is claimed otherwise.
    """
    if s1.polarity != s2.polarity:
        raise PreconditionError("snail bound needs equal polarities")
    s, t = s1.depth, s2.depth
    if s * t < 0:
        return min(abs(s), abs(t))
    if s * t > 0 and s1.terminal != V and s2.terminal != V:
        return max(0, abs(s - t) - 1)
    return 0


def forced_arc_intersection(
    word_a: tuple[int, ...],
    word_b: tuple[int, ...],
    alphabet: GapAlphabet,
    same_polarity: bool = True,
) -> bool:
    """Orientation test forcing an arc crossing between two same-polarity
    segments that agree on all middle letters and differ at both ends.

    With k middle letters, a crossing is forced when the end triple
    orientations are opposite for even k and equal for odd k.  Returns False
    when an end triple is degenerate (the test does not apply).
    """
    if not same_polarity:
        raise PreconditionError("the forced-crossing test assumes equal polarities")
    a, b = tuple(word_a), tuple(word_b)
    if len(a) != len(b) or len(a) < 2:
        raise PreconditionError("segments must share their length (at least 2)")
    k = len(a) - 2
    if a[1:-1] != b[1:-1]:
        raise PreconditionError("middle letters must agree")
    if a[0] == b[0] or a[-1] == b[-1]:
        raise PreconditionError("end letters must differ")
    for w in (a, b):
        if not is_pattern_free(w, "aa"):
            raise PreconditionError("segments must be free of adjacent repeats")
    first = (a[0], b[0], a[1])
    last = (a[-2], b[-1], a[-1])
    if len(set(first)) < 3 or len(set(last)) < 3:
        return False  # orientations undefined; no crossing claimed
    o1 = orientation(*first, alphabet)
    o2 = orientation(*last, alphabet)
    return (o1 != o2) if k % 2 == 0 else (o1 == o2)


def family_bound_snails(k: int) -> int:
    """Size threshold 4(2k+1)^2: any larger same-polarity family of based
    loops with two-sided alternating prefixes has a pair (possibly equal)
    with at least k crossings."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    return 4 * (2 * k + 1) ** 2


# -- closed-form bound evaluators ---------------------------------------------


def _format_big(value: int, digit_cap: int = 20000) -> str | None:
    """Decimal string of `value`, or None when it would exceed `digit_cap`."""
    digits = int(value.bit_length() * 0.30103) + 1
    if digits > digit_cap:
        return None
    if hasattr(sys, "get_int_max_str_digits") and sys.get_int_max_str_digits() < digits + 10:
        sys.set_int_max_str_digits(digits + 10)
    text = str(value)
    return text if len(text) <= digit_cap else None


@dataclass(frozen=True)
class BoundsReport:
    """Closed-form bounds on the extremal family sizes for given n and k.

    All values are exact; powers too large to expand keep their exponent.
    """

    n: int
    k: int
    f_upper_single_puncture: int | None
    f_upper_double_exp_exponent: int
    f_upper_double_exp_value: str | None
    f_lower_sqrt_exponent_sqrt_arg: int | None
    f_lower_sqrt_exponent: Fraction | None
    f_lower_ratio_power: Fraction | None
    f_from_g_coefficient: int
    f_from_g_argument: int
    snail_family_threshold: int
    chain: str

    def to_json(self) -> dict:
        def frac(x: Fraction | None):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        exp_json = None
        if self.f_lower_sqrt_exponent_sqrt_arg is not None:
            exp_json = {
                "base": "2",
                "exponentSqrtArg": str(self.f_lower_sqrt_exponent_sqrt_arg),
                "exponentDivisor": "3",
                "exponentExact": frac(self.f_lower_sqrt_exponent),
                "approx": f"{2 ** (math.sqrt(self.f_lower_sqrt_exponent_sqrt_arg) / 3):.6g}",
            }
        return {
            "n": self.n,
            "k": self.k,
            "exact": True,
            "fUpperSinglePuncture": (
                None
                if self.f_upper_single_puncture is None
                else str(self.f_upper_single_puncture)
            ),
            "fUpperDoubleExp": {
                "base": "2",
                "exponent": str(self.f_upper_double_exp_exponent),
                "value": self.f_upper_double_exp_value,
            },
            "fLowerSqrtExp": exp_json,
            "fLowerRatioPower": frac(self.f_lower_ratio_power),
            "fFromG": {
                "coefficient": str(self.f_from_g_coefficient),
                "argument": str(self.f_from_g_argument),
            },
            "snailFamilyThreshold": str(self.snail_family_threshold),
            "chain": self.chain,
        }


def analytic_bounds(n: int, k: int) -> BoundsReport:
    """Evaluate every closed-form bound available at the given n and k."""
    if n < 1 or k < 1:
        raise PreconditionError("need n >= 1 and k >= 1")
    exponent = (2 * k) ** (2 * n)
    sqrt_arg = None
    sqrt_exp = None
    if n <= 2 * k:
        sqrt_arg = n * k
        root = math.isqrt(sqrt_arg)
        if root * root == sqrt_arg:
            sqrt_exp = Fraction(root, 3)
    ratio_power = None
    if n >= 2 * k:
        ratio_power = Fraction(n, k) ** (k - 1)
    return BoundsReport(
        n=n,
        k=k,
        f_upper_single_puncture=2 * k + 1 if n == 1 else None,
        f_upper_double_exp_exponent=exponent,
        f_upper_double_exp_value=_format_big(2**exponent) if exponent <= 80000 else None,
        f_lower_sqrt_exponent_sqrt_arg=sqrt_arg,
        f_lower_sqrt_exponent=sqrt_exp,
        f_lower_ratio_power=ratio_power,
        f_from_g_coefficient=484 * k * k,
        f_from_g_argument=5 * k,
        snail_family_threshold=family_bound_snails(k),
        chain="g(n,k) <= f(n,k) <= g(n+1,k)",
    )
