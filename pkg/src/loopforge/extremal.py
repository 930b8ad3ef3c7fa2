"""Exhaustive catalogs of loop classes with bounded self-crossing number.

For one puncture the reduced words are the alternating two-letter words, so
the catalog enumerates winding depths directly.  For two punctures the
catalog walks all reduced core words (ends in letter 2) depth-first,
pruning by the winding lower bound of the prefix and by a thresholded
oracle run on the basepoint-anchored prefix segment; both prunes are sound,
so the walk is exhaustive up to the provable length cap.

Pairwise-compatibility graphs and clique sizes probe the extremal family
sizes.  A clique upper bound is honest in one direction only: any valid
family induces a clique, so the family size is at most the clique number;
the found clique is not claimed to be realizable as a joint drawing.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import depth_family_bound, obstacle_gap_pairs
from .canon import LoopClass, VLoopClass, XLoopClass
from .oracle import (
    CrossingCount,
    Drawing,
    OracleConfig,
    pair_intersection_number,
    segment_self_at_least,
    self_intersection_number,
)
from .words import (
    NORTH,
    SOUTH,
    GapAlphabet,
    PreconditionError,
    V,
    Word,
    format_letters,
    maximal_two_letter_words,
)


class EnumerationIncompleteError(RuntimeError):
    """The oracle budget ran out on a candidate; no count is reported."""


def expansion_letter_budget(k: int) -> int:
    """Letters one pair's expansions can add to a core word staying below k
    forced crossings: twice the total repeat count, which is bounded both by
    k-1 and by the sum of the tail caps floor(sqrt(k/t))."""
    return 2 * min(k - 1, sum(math.isqrt(k // t) for t in range(1, k + 1)))


def length_cap(k: int, n: int) -> int:
    """Provable cap on the length of a reduced word with self-crossing
    number below k.

    n=1: reduced words alternate in the two gaps, so classes are winding
    depths; depth d needs d-1 crossings, and the single-puncture family
    bound 2k+1 pins the catalog to depths |d| <= k, i.e. 2k letters.  The
    cap 2(k+1) includes the first excluded depth.

    n=2: a word below k has at most floor(4*sqrt(k)) maximal two-letter
    subwords per pair (more would force k crossings via windings or
    opposite-polarity arc pairs); a period-2-free core with at most
    3*floor(4*sqrt(k)) maximal subwords has at most 6*floor(4*sqrt(k)) + 1
    letters (three for the first subword, two more for each of the rest),
    and each pair's expansions add at most expansion_letter_budget(k).
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if n == 1:
        return 2 * (k + 1)
    if n == 2:
        per_pair = math.isqrt(16 * k)  # floor(4 sqrt k)
        core = 6 * per_pair + 1
        return core + 3 * expansion_letter_budget(k)
    raise PreconditionError("catalogs support n in {1, 2}")


@dataclass(frozen=True)
class CatalogEntry:
    loop_class: LoopClass
    selfint: int
    exact: bool
    witness: Drawing | None

    def to_json(self) -> dict:
        return {
            "class": self.loop_class.to_json(),
            "selfint": self.selfint,
            "exact": self.exact,
            "witness": self.witness.to_json() if self.witness else None,
        }


@dataclass(frozen=True)
class ClassCatalog:
    n: int
    k: int
    length_cap: int
    entries: tuple[CatalogEntry, ...]
    count_uncertainty: int

    @property
    def count(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lengthCap": self.length_cap,
            "count": self.count,
            "countUncertainty": self.count_uncertainty,
            "exact": all(e.exact for e in self.entries),
            "entries": [e.to_json() for e in self.entries],
        }


def prefix_winding_lb(prefix: tuple[int, ...], alphabet: GapAlphabet) -> int:
    """Winding lower bound every completed core word of `prefix` inherits.

    Core words start and end in a letter outside {0, 1}, so every maximal
    two-letter block of the prefix ends up bordered validly in any
    completion, with at least its current depth.  As in
    :func:`loopforge.bounds.winding_self_lower_bound`, obstacles do not
    combine additively; the bound is the best single obstacle's.
    """
    best = 0
    for obstacle, (a, b) in obstacle_gap_pairs(alphabet).items():
        depths = [
            span.depth
            for span in maximal_two_letter_words(prefix, a, b)
            if span.depth >= 1
        ]
        if depths:
            best = max(best, depth_family_bound(depths))
    return best


def _selfint_word(args) -> dict:
    letters, kind, n, budget, cache_dir, use_cache = args
    word = Word(tuple(letters), kind)
    config = OracleConfig(budget=budget, cache_dir=cache_dir, use_cache=use_cache)
    result = self_intersection_number(word, GapAlphabet(n), config)
    return {
        "value": result.value,
        "exact": result.exact,
        "witness": result.witness.to_json() if result.witness else None,
    }


def _evaluate_words(
    words: list[Word], alphabet: GapAlphabet, config: OracleConfig, jobs: int
) -> list[CrossingCount]:
    if jobs <= 1 or len(words) <= 1:
        return [self_intersection_number(w, alphabet, config) for w in words]
    args = [
        (w.letters, w.kind, alphabet.n, config.budget, config.cache_dir, config.use_cache)
        for w in words
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        raw = list(pool.map(_selfint_word, args))
    return [
        CrossingCount(
            r["value"], r["exact"], Drawing.from_json(r["witness"]) if r["witness"] else None
        )
        for r in raw
    ]


def _enumerate_x_words(cap: int) -> list[Word]:
    words = [Word.x_word(())]
    for depth in range(1, cap // 2 + 1):
        words.append(Word.x_word((0, 1) * depth))
        words.append(Word.x_word((1, 0) * depth))
    return words


def _collect_core_candidates(
    k: int, cap: int, alphabet: GapAlphabet, config: OracleConfig
) -> list[tuple[int, ...]]:
    """Depth-first walk over reduced core words (start and end letter 2)."""
    candidates: list[tuple[int, ...]] = []

    def walk(prefix: tuple[int, ...]) -> None:
        if prefix_winding_lb(prefix, alphabet) >= k:
            return
        if len(prefix) >= 4:
            anchored = (V,) + prefix
            if segment_self_at_least(anchored, k, alphabet, config):
                return
        if prefix[-1] == 2:
            candidates.append(prefix)
        if len(prefix) >= cap:
            return
        for letter in (0, 1, 2):
            if letter != prefix[-1]:
                walk(prefix + (letter,))

    walk((2,))
    return candidates


def enumerate_classes(
    n: int,
    k: int,
    config: OracleConfig = OracleConfig(),
    length_cap_override: int | None = None,
    jobs: int = 1,
) -> ClassCatalog:
    """All loop classes with exact oracle self-crossing number below k, up
    to the length cap: x-classes for n=1, both-polarity v-classes for n=2.

    Raises :class:`EnumerationIncompleteError` if any candidate exhausts the
    oracle budget; a truncated count is never reported.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    cap = length_cap_override if length_cap_override is not None else length_cap(k, n)
    if cap < 2:
        raise PreconditionError("length cap below 2")
    alphabet = GapAlphabet(n)
    entries: list[CatalogEntry] = []

    if n == 1:
        words = [w for w in _enumerate_x_words(cap) if len(w.letters) <= cap]
        results = _evaluate_words(words, alphabet, config, jobs)
        for word, res in zip(words, results):
            if not res.exact:
                raise EnumerationIncompleteError(f"budget exhausted on {word}")
            if res.value < k:
                entries.append(
                    CatalogEntry(XLoopClass(word.letters), res.value, True, res.witness)
                )
        entries.sort(key=lambda e: (len(e.loop_class.reduced), e.loop_class.reduced))
        return ClassCatalog(n, k, cap, tuple(entries), 0)

    if n != 2:
        raise PreconditionError("catalogs support n in {1, 2}")

    cores = _collect_core_candidates(k, cap, alphabet, config)
    words = [Word.v_word(core) for core in cores]
    results = _evaluate_words(words, alphabet, config, jobs)
    kept: list[tuple[tuple[int, ...], CrossingCount]] = [((), None)]
    for core, res in zip(cores, results):
        if not res.exact:
            raise EnumerationIncompleteError(f"budget exhausted on core {core}")
        if res.value < k:
            kept.append((core, res))
    for core, res in kept:
        for hemisphere in (NORTH, SOUTH):
            entries.append(
                CatalogEntry(
                    VLoopClass(core, hemisphere),
                    0 if res is None else res.value,
                    True,
                    None if res is None else res.witness,
                )
            )
    entries.sort(
        key=lambda e: (
            len(e.loop_class.core),
            e.loop_class.core,
            e.loop_class.start_hemisphere,
        )
    )
    # the two polarity tags of the empty core may name one class
    return ClassCatalog(n, k, cap, tuple(entries), 1)


# -- pairwise compatibility ----------------------------------------------------


@dataclass(frozen=True)
class GraphEdge:
    value: int
    exact: bool
    present: bool


@dataclass(frozen=True)
class CompatibilityGraph:
    """Classes as vertices; an edge when the pair oracle stays below k.

    An edge whose oracle call exhausted the budget with a value >= k is kept
    present (pessimistically, so clique numbers stay valid upper bounds for
    family sizes) and the graph is flagged incomplete.
    """

    catalog: ClassCatalog
    edges: dict[tuple[int, int], GraphEdge]

    @property
    def complete(self) -> bool:
        return all(e.exact for e in self.edges.values())

    def neighbors(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {i: set() for i in range(self.catalog.count)}
        for (i, j), edge in self.edges.items():
            if edge.present:
                out[i].add(j)
                out[j].add(i)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.catalog.n,
            "k": self.catalog.k,
            "vertices": [e.loop_class.to_json() for e in self.catalog.entries],
            "exact": self.complete,
            "edges": [
                {"i": i, "j": j, "value": e.value, "exact": e.exact, "present": e.present}
                for (i, j), e in sorted(self.edges.items())
            ],
        }


def _pair_worker(args) -> dict:
    cls1_json, cls2_json, n, budget, cache_dir, use_cache = args
    config = OracleConfig(budget=budget, cache_dir=cache_dir, use_cache=use_cache)
    cls1 = _class_from_json(cls1_json)
    cls2 = _class_from_json(cls2_json)
    res = pair_intersection_number(cls1, cls2, GapAlphabet(n), config)
    return {"value": res.value, "exact": res.exact}


def _class_from_json(obj: dict) -> LoopClass:
    if obj["kind"] == "x":
        return XLoopClass(tuple(int(t) for t in obj["reduced"]))
    return VLoopClass(tuple(int(t) for t in obj["core"]), obj["startHemisphere"])


def compatibility_graph(
    catalog: ClassCatalog,
    config: OracleConfig = OracleConfig(),
    jobs: int = 1,
) -> CompatibilityGraph:
    alphabet = GapAlphabet(catalog.n)
    pairs = [
        (i, j)
        for i in range(catalog.count)
        for j in range(i + 1, catalog.count)
    ]
    results: list[dict]
    if jobs <= 1 or len(pairs) <= 1:
        results = []
        for i, j in pairs:
            res = pair_intersection_number(
                catalog.entries[i].loop_class,
                catalog.entries[j].loop_class,
                alphabet,
                config,
            )
            results.append({"value": res.value, "exact": res.exact})
    else:
        args = [
            (
                catalog.entries[i].loop_class.to_json(),
                catalog.entries[j].loop_class.to_json(),
                catalog.n,
                config.budget,
                config.cache_dir,
                config.use_cache,
            )
            for i, j in pairs
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_pair_worker, args))
    edges = {}
    for (i, j), res in zip(pairs, results):
        present = res["value"] < catalog.k or not res["exact"]
        edges[(i, j)] = GraphEdge(res["value"], res["exact"], present)
    return CompatibilityGraph(catalog, edges)


# -- clique bounds --------------------------------------------------------------


@dataclass(frozen=True)
class FamilyBounds:
    clique_found: int
    clique_upper: int | None
    exact: bool

    def to_json(self) -> dict:
        return {
            "cliqueFound": self.clique_found,
            "cliqueUpper": self.clique_upper,
            "exact": self.exact,
        }


def _greedy_clique(neigh: dict[int, set[int]]) -> list[int]:
    order = sorted(neigh, key=lambda v: (-len(neigh[v]), v))
    clique: list[int] = []
    for v in order:
        if all(v in neigh[u] for u in clique):
            clique.append(v)
    return clique


def max_clique(
    neigh: dict[int, set[int]], node_limit: int = 1_000_000
) -> tuple[list[int], bool]:
    """Exact maximum clique by branch and bound with greedy coloring;
    returns (clique, exact).  Falls back to the greedy clique when the node
    limit is hit."""
    best = _greedy_clique(neigh)
    nodes = 0

    def color_bound(cands: list[int]) -> dict[int, int]:
        colors: dict[int, int] = {}
        classes: list[set[int]] = []
        for v in cands:
            for c, cls in enumerate(classes):
                if not (neigh[v] & cls):
                    cls.add(v)
                    colors[v] = c + 1
                    break
            else:
                classes.append({v})
                colors[v] = len(classes)
        return colors

    def expand(clique: list[int], cands: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_limit:
            raise TimeoutError
        if not cands:
            if len(clique) > len(best):
                best = list(clique)
            return
        colors = color_bound(cands)
        ordered = sorted(cands, key=lambda v: colors[v])
        for idx in range(len(ordered) - 1, -1, -1):
            v = ordered[idx]
            if len(clique) + colors[v] <= len(best):
                return
            expand(clique + [v], [u for u in ordered[:idx] if u in neigh[v]])

    try:
        expand([], sorted(neigh))
        return best, True
    except TimeoutError:
        return best, False


def family_bounds(graph: CompatibilityGraph, node_limit: int = 1_000_000) -> FamilyBounds:
    """Clique sizes of the compatibility graph.

    The true extremal family size is at most `clique_upper` (any valid
    family induces a clique); `clique_found` is not claimed to bound it
    from below, since joint realizability of the drawings is not checked.
    """
    neigh = graph.neighbors()
    if not neigh:
        return FamilyBounds(0, 0, True)
    clique, exact = max_clique(neigh, node_limit)
    return FamilyBounds(len(clique), len(clique) if exact else None, exact)


# -- growth summary --------------------------------------------------------------


def growth_report(
    kmax: int,
    config: OracleConfig = OracleConfig(),
    jobs: int = 1,
) -> list[dict[str, object]]:
    """Rows (k, two-puncture class count, single-puncture count, normalized
    log growth, double-exponential upper bound exponent) for k = 1..kmax.

    A consistency report only: the asymptotic growth claims are not
    verifiable at these sizes, so no thresholds are asserted.
    """
    rows = []
    for k in range(1, kmax + 1):
        cat2 = enumerate_classes(2, k, config, jobs=jobs)
        cat1 = enumerate_classes(1, k, config, jobs=jobs)
        count2 = cat2.count
        rows.append(
            {
                "k": k,
                "classCountN2": count2,
                "countUncertainty": cat2.count_uncertainty,
                "classCountN1": cat1.count,
                "lnCountOverSqrtK": f"{math.log(count2) / math.sqrt(k):.6f}",
                "fUpperDoubleExpExponent": (2 * k) ** 4,
                "exact": True,
            }
        )
    return rows
