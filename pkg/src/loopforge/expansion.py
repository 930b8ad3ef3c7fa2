"""Two-letter expansions: decomposition, counting, and multinomial caps.

Repeatedly deleting a length-4 period-2 subword (abab -> ab) shrinks every
maximal two-letter subword to two or three letters without changing the
pattern of maximal subwords.  A word is therefore the image of its fully
shrunk core under one expansion per letter pair, described by a vector of
nonnegative repeat counts, one per maximal subword of that pair.

The expansion vectors with a bounded forced-crossing count are counted two
ways: exactly, by dynamic programming over tail multiplicities, and through
an explicit product cap built from a majorizing multiplicity vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .words import (
    PreconditionError,
    Span,
    is_pattern_free,
    maximal_two_letter_words,
)


@dataclass(frozen=True)
class ExpansionDecomposition:
    """A word as expansions of its period-2-free core: one repeat vector per
    letter pair, ordered like the core's maximal subwords of that pair."""

    core: tuple[int, ...]
    vectors: dict[tuple[int, int], tuple[int, ...]]

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.vectors)


def _pairs_present(letters: tuple[int, ...]) -> list[tuple[int, int]]:
    present = sorted(set(letters))
    return [
        (a, b)
        for i, a in enumerate(present)
        for b in present[i + 1 :]
    ]


def shrink_core(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Delete abab-subwords (distinct a, b) until none remain."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 3):
            if word[i] != word[i + 1] and word[i] == word[i + 2] and word[i + 1] == word[i + 3]:
                del word[i : i + 2]
                changed = True
                break
    return tuple(word)


def decompose(letters: tuple[int, ...]) -> ExpansionDecomposition:
    """Split a word without adjacent repeats into its core and repeat vectors."""
    letters = tuple(letters)
    if not is_pattern_free(letters, "aa"):
        raise PreconditionError("decomposition needs a word without adjacent repeats")
    core = shrink_core(letters)
    vectors: dict[tuple[int, int], tuple[int, ...]] = {}
    for a, b in _pairs_present(letters):
        spans_full = maximal_two_letter_words(letters, a, b)
        spans_core = maximal_two_letter_words(core, a, b)
        if len(spans_full) != len(spans_core):
            raise AssertionError("shrinking must preserve the maximal-subword pattern")
        if spans_full:
            vectors[(a, b)] = tuple(
                (sf.length - sc.length) // 2 for sf, sc in zip(spans_full, spans_core)
            )
    return ExpansionDecomposition(core, vectors)


def apply_expansion(
    core: tuple[int, ...], pair: tuple[int, int], repeats: tuple[int, ...]
) -> tuple[int, ...]:
    """Expand each maximal {a, b}-subword of `core` by its repeat count:
    the leading two letters xy become (xy)^(s+1)."""
    a, b = pair
    spans = maximal_two_letter_words(tuple(core), a, b)
    if len(spans) != len(repeats):
        raise PreconditionError(
            f"{len(repeats)} repeat counts for {len(spans)} maximal subwords"
        )
    if any(s < 0 for s in repeats):
        raise PreconditionError("repeat counts must be nonnegative")
    insert_at = {span.start: (span, s) for span, s in zip(spans, repeats)}
    out: list[int] = []
    for pos, letter in enumerate(core):
        if pos in insert_at:
            span, s = insert_at[pos]
            x, y = core[span.start], core[span.start + 1]
            out.extend([x, y] * s)
        out.append(letter)
    return tuple(out)


def reassemble(dec: ExpansionDecomposition) -> tuple[int, ...]:
    """Apply every pair expansion of a decomposition to its core."""
    word = dec.core
    for pair in dec.pairs():
        word = apply_expansion(word, pair, dec.vectors[pair])
    return word


def expansion_lower_bound(repeats: tuple[int, ...]) -> int:
    """Forced self-crossings of an expansion vector:
    sum_i s_i + 2 sum_{i<j} min(s_i, s_j), equal to the sum over thresholds
    t >= 1 of (number of entries >= t) squared."""
    if any(s < 0 for s in repeats):
        raise PreconditionError("repeat counts must be nonnegative")
    total = sum(repeats)
    total += 2 * sum(
        min(repeats[i], repeats[j])
        for i in range(len(repeats))
        for j in range(i + 1, len(repeats))
    )
    return total


def tail_multiplicities(repeats: tuple[int, ...], k: int) -> tuple[int, ...]:
    """(m_{>=1}, ..., m_{>=k}): how many entries reach each threshold."""
    return tuple(sum(1 for s in repeats if s >= t) for t in range(1, k + 1))


def multiplicity_profile(repeats: tuple[int, ...], k: int) -> tuple[int, ...]:
    """(m_0, ..., m_k): multiplicity of each value in the vector."""
    return tuple(sum(1 for s in repeats if s == i) for i in range(k + 1))


def count_vectors_exact(length: int, k: int) -> int:
    """Number of vectors s in Z_{>=0}^length with expansion_lower_bound(s) < k.

    Counts by the non-increasing chain of tail multiplicities T_t (entries
    >= t): the bound equals sum_t T_t^2, and a chain is placed into
    positions in prod C(T_t, T_{t+1}) ways starting from C(length, T_1).
    """
    if length < 0 or k < 1:
        raise PreconditionError("need length >= 0 and k >= 1")

    @lru_cache(maxsize=None)
    def chains(prev: int, cost: int) -> int:
        total = 1  # stop the chain: all further tails zero
        t = 1
        while cost + t * t < k and t <= prev:
            total += math.comb(prev, t) * chains(t, cost + t * t)
            t += 1
        return total

    result = chains(length, 0)
    chains.cache_clear()
    return result


def z_vector(length: int, k: int) -> tuple[int, ...]:
    """The majorizing multiplicity vector (z_0, ..., z_k).

    Requires length >= 2*floor(sqrt(k)) - floor(sqrt(k/2)) so that z_0 >= z_1;
    the entries sum to `length`.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    floor_sqrt = math.isqrt(k)
    if length < 2 * floor_sqrt - math.isqrt(k // 2):
        raise PreconditionError(
            f"length {length} below the feasibility threshold "
            f"{2 * floor_sqrt - math.isqrt(k // 2)} for k={k}"
        )
    z = [length - floor_sqrt]
    for i in range(1, k + 1):
        z.append(math.isqrt(k // i) - math.isqrt(k // (i + 1)))
    return tuple(z)


def multinomial(length: int, parts: tuple[int, ...]) -> int:
    """length! / prod(parts_i!), exact; parts must sum to length."""
    if any(p < 0 for p in parts):
        raise PreconditionError("parts must be nonnegative")
    if sum(parts) != length:
        raise PreconditionError(f"parts sum to {sum(parts)}, expected {length}")
    result = 1
    remaining = length
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result


def profile_feasible(profile: tuple[int, ...], length: int, k: int) -> bool:
    """Whether a multiplicity vector (m_0..m_k) sums to `length` with every
    tail m_{>=t} at most sqrt(k/t)."""
    if len(profile) != k + 1 or any(m < 0 for m in profile):
        return False
    if sum(profile) != length:
        return False
    tail = 0
    for t in range(k, 0, -1):
        tail += profile[t]
        if tail * tail * t > k:
            return False
    return True


def z_majorizes(profile: tuple[int, ...], length: int, k: int) -> bool:
    """Whether the multinomial of a feasible profile is at most the
    multinomial of the majorizing vector (expected to always hold)."""
    if not profile_feasible(profile, length, k):
        raise PreconditionError("profile violates the feasibility constraints")
    z = z_vector(length, k)
    return multinomial(length, profile) <= multinomial(length, z)


def m_vector_count(length: int, k: int) -> tuple[int, int]:
    """(exact, cap): the number of feasible multiplicity vectors
    (m_0..m_k), and the explicit product cap k^beta * (length+1)^beta with
    beta = ceil(k^(1/3)).  The exact count never exceeds the cap."""
    if length < 0 or k < 1:
        raise PreconditionError("need length >= 0 and k >= 1")
    caps = [0] + [math.isqrt(k // t) for t in range(1, k + 1)]

    @lru_cache(maxsize=None)
    def count(t: int, prev: int) -> int:
        if t > k:
            return 1
        return sum(count(t + 1, m) for m in range(0, min(prev, caps[t]) + 1))

    exact = count(1, length)
    count.cache_clear()
    beta = 1
    while beta**3 < k:
        beta += 1
    cap = (k**beta) * ((length + 1) ** beta)
    return exact, cap


def sweep_rows(
    lengths: range | list[int], ks: range | list[int]
) -> list[dict[str, object]]:
    """Rows (length, k, exactCount, mVectorCap, multinomialZ) for reporting;
    the multinomial column is empty below the feasibility threshold."""
    rows = []
    for length in lengths:
        for k in ks:
            exact = count_vectors_exact(length, k)
            m_exact, m_cap = m_vector_count(length, k)
            try:
                mz = multinomial(length, z_vector(length, k))
            except PreconditionError:
                mz = None
            rows.append(
                {
                    "length": length,
                    "k": k,
                    "exactCount": exact,
                    "mVectorCount": m_exact,
                    "mVectorCap": m_cap,
                    "multinomialZ": mz,
                }
            )
    return rows
