"""Command-line front end.

Every report is JSON (or CSV for tabular reports) on stdout and carries an
"exact" flag.  Exit codes: 0 success, 2 precondition violation (with a
machine-readable error object), 3 oracle budget exhausted (report emitted
with exact=false).  Large numbers are emitted as decimal strings.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass

import click

from .bounds import analytic_bounds, find_windings, winding_self_lower_bound
from .canon import canon_v, canon_x, equivalent
from .expansion import count_vectors_exact, decompose, sweep_rows
from .extremal import (
    EnumerationIncompleteError,
    compatibility_graph,
    enumerate_classes,
    family_bounds,
    growth_report,
)
from .oracle import DEFAULT_BUDGET, OracleConfig, pair_intersection_number, self_intersection_number
from .words import (
    NORTH,
    GapAlphabet,
    PreconditionError,
    Word,
    format_letters,
    parse_letters,
    parse_word,
    reduce_word,
)

EXIT_PRECONDITION = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    """Validated run options shared by the oracle-backed commands."""

    n: int = 2
    k: int | None = None
    budget: int = DEFAULT_BUDGET
    cache_dir: str | None = None
    use_cache: bool = True
    output_format: str = "json"
    length_cap_override: int | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise PreconditionError("budget must be at least 1")
        if self.output_format not in ("json", "csv"):
            raise PreconditionError(f"unknown output format {self.output_format!r}")
        if self.length_cap_override is not None and self.length_cap_override < 2:
            raise PreconditionError("length cap override must be at least 2")
        if self.jobs < 1:
            raise PreconditionError("jobs must be at least 1")

    def oracle(self) -> OracleConfig:
        return OracleConfig(
            budget=self.budget, cache_dir=self.cache_dir, use_cache=self.use_cache
        )


def _emit(obj: dict) -> None:
    click.echo(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _emit_csv(rows: list[dict], columns: list[str]) -> None:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row.get(c, "") for c in columns})
    click.echo(buffer.getvalue(), nl=False)


def _fail(exc: Exception) -> None:
    _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
    sys.exit(EXIT_PRECONDITION)


def _oracle_config(budget: int, cache_dir: str | None, no_cache: bool) -> OracleConfig:
    return RunConfig(budget=budget, cache_dir=cache_dir, use_cache=not no_cache).oracle()


def common_options(fn):
    fn = click.option("--n", "n", type=int, default=2, show_default=True,
                      help="number of punctures")(fn)
    fn = click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True,
                      help="oracle evaluation budget")(fn)
    fn = click.option("--cache-dir", type=str, default=None,
                      help="oracle cache directory (default: $LOOPFORGE_CACHE or ./.loopforge-cache)")(fn)
    fn = click.option("--no-cache", is_flag=True, help="disable the oracle cache")(fn)
    return fn


@click.group()
def main() -> None:
    """Loop words in a punctured plane: canonical forms, crossing minima,
    lower bounds, and class catalogs."""


@main.command()
@common_options
@click.argument("word_text")
def reduce(word_text: str, n: int, budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Reduce a word to its canonical form."""
    try:
        word = parse_word(word_text, GapAlphabet(n))
        red = reduce_word(word)
    except PreconditionError as exc:
        _fail(exc)
    _emit(
        {
            "word": red.word.to_json(),
            "text": str(red.word),
            "strippedPrefixParity": red.stripped_prefix_parity,
            "exact": True,
        }
    )


@main.command()
@common_options
@click.option("--hemisphere", type=click.Choice("NS"), default=NORTH, show_default=True,
              help="hemisphere of the loop's first arc (v-words)")
@click.argument("word_text")
def canon(word_text: str, n: int, hemisphere: str, budget: int,
          cache_dir: str | None, no_cache: bool) -> None:
    """Canonical homotopy-class descriptor of a word."""
    try:
        word = parse_word(word_text, GapAlphabet(n))
        cls = canon_v(word, hemisphere) if word.kind == "v" else canon_x(word)
    except PreconditionError as exc:
        _fail(exc)
    _emit({"class": cls.to_json(), "exact": True})


@main.command()
@common_options
@click.option("--hemi1", type=click.Choice("NS"), default=NORTH, show_default=True)
@click.option("--hemi2", type=click.Choice("NS"), default=NORTH, show_default=True)
@click.argument("word1")
@click.argument("word2")
def equiv(word1: str, word2: str, n: int, hemi1: str, hemi2: str,
          budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Whether two words name the same homotopy class."""
    try:
        alphabet = GapAlphabet(n)
        w1, w2 = parse_word(word1, alphabet), parse_word(word2, alphabet)
        if w1.kind != w2.kind:
            raise PreconditionError("cannot compare words of different kinds")
        if w1.kind == "v":
            c1, c2 = canon_v(w1, hemi1), canon_v(w2, hemi2)
        else:
            c1, c2 = canon_x(w1), canon_x(w2)
        same = equivalent(c1, c2)
    except PreconditionError as exc:
        _fail(exc)
    _emit({"equivalent": same, "class1": c1.to_json(), "class2": c2.to_json(), "exact": True})


@main.command()
@common_options
@click.argument("word_text")
def selfint(word_text: str, n: int, budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Minimal self-intersection number of a word."""
    try:
        word = parse_word(word_text, GapAlphabet(n))
        config = _oracle_config(budget, cache_dir, no_cache)
    except PreconditionError as exc:
        _fail(exc)
    result = self_intersection_number(word, GapAlphabet(n), config)
    _emit(result.to_json())
    if not result.exact:
        sys.exit(EXIT_BUDGET)


@main.command()
@common_options
@click.option("--hemi1", type=click.Choice("NS"), default=NORTH, show_default=True)
@click.option("--hemi2", type=click.Choice("NS"), default=NORTH, show_default=True)
@click.argument("word1")
@click.argument("word2")
def pairint(word1: str, word2: str, n: int, hemi1: str, hemi2: str,
            budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Minimal pairwise intersection number of two loop classes."""
    try:
        alphabet = GapAlphabet(n)
        w1, w2 = parse_word(word1, alphabet), parse_word(word2, alphabet)
        if w1.kind != w2.kind:
            raise PreconditionError("cannot pair words of different kinds")
        if w1.kind == "v":
            c1, c2 = canon_v(w1, hemi1), canon_v(w2, hemi2)
        else:
            c1, c2 = canon_x(w1), canon_x(w2)
        config = _oracle_config(budget, cache_dir, no_cache)
    except PreconditionError as exc:
        _fail(exc)
    result = pair_intersection_number(c1, c2, alphabet, config)
    _emit(result.to_json())
    if not result.exact:
        sys.exit(EXIT_BUDGET)


@main.command()
@common_options
@click.option("--k", type=int, required=True, help="crossing budget")
def bounds(n: int, k: int, budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Closed-form bounds on the extremal family sizes."""
    try:
        report = analytic_bounds(n, k)
    except PreconditionError as exc:
        _fail(exc)
    _emit(report.to_json())


@main.command()
@common_options
@click.argument("word_text")
def windings(word_text: str, n: int, budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Windings of a word and the resulting self-crossing lower bound."""
    try:
        alphabet = GapAlphabet(n)
        word = parse_word(word_text, alphabet)
        found = find_windings(word, alphabet)
        lb = winding_self_lower_bound(word, alphabet)
    except PreconditionError as exc:
        _fail(exc)
    _emit(
        {
            "windings": [
                {
                    "obstacle": w.obstacle,
                    "depth": w.depth,
                    "start": w.span.start,
                    "end": w.span.end,
                    "form": w.form,
                }
                for w in found
            ],
            "lowerBound": lb,
            "exact": True,
        }
    )


@main.command()
@common_options
@click.argument("word_text")
def decompose_cmd(word_text: str, n: int, budget: int,
                  cache_dir: str | None, no_cache: bool) -> None:
    """Core word and expansion vectors of a word without adjacent repeats."""
    try:
        alphabet = GapAlphabet(n)
        letters = parse_letters(word_text, alphabet)
        if letters and letters[0] == -1 and letters[-1] == -1:
            letters = letters[1:-1]
        dec = decompose(letters)
    except PreconditionError as exc:
        _fail(exc)
    _emit(
        {
            "core": format_letters(dec.core),
            "vectors": {
                f"{a}{b}": list(v) for (a, b), v in sorted(dec.vectors.items())
            },
            "exact": True,
        }
    )


@main.command(name="count-expansions")
@click.option("--l", "length", type=int, help="expansion vector length")
@click.option("--k", type=int, required=True, help="crossing budget")
@click.option("--sweep", is_flag=True, help="emit a CSV sweep over lengths and budgets")
@click.option("--lmax", type=int, default=8, show_default=True)
@click.option("--kmax", type=int, default=16, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
def count_expansions(length: int | None, k: int, sweep: bool, lmax: int, kmax: int,
                     fmt: str) -> None:
    """Count expansion vectors whose forced-crossing bound stays below k."""
    try:
        if sweep:
            rows = sweep_rows(range(0, lmax + 1), range(1, kmax + 1))
            rows = [
                {key: ("" if val is None else str(val)) for key, val in row.items()}
                for row in rows
            ]
            if fmt == "csv":
                _emit_csv(rows, ["length", "k", "exactCount", "mVectorCount",
                                 "mVectorCap", "multinomialZ"])
            else:
                _emit({"rows": rows, "exact": True})
            return
        if length is None:
            raise PreconditionError("--l is required without --sweep")
        value = count_vectors_exact(length, k)
    except PreconditionError as exc:
        _fail(exc)
    _emit({"count": str(value), "length": length, "k": k, "exact": True})


@main.command(name="enumerate")
@common_options
@click.option("--k", type=int, required=True, help="crossing budget")
@click.option("--length-cap", "cap", type=int, default=None,
              help="override the provable length cap")
@click.option("--jobs", type=int, default=1, show_default=True)
def enumerate_cmd(n: int, k: int, cap: int | None, jobs: int,
                  budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Catalog of loop classes with self-crossing number below k (JSONL)."""
    try:
        run = RunConfig(n=n, k=k, budget=budget, cache_dir=cache_dir,
                        use_cache=not no_cache, length_cap_override=cap, jobs=jobs)
        catalog = enumerate_classes(
            n, k, run.oracle(), length_cap_override=run.length_cap_override,
            jobs=run.jobs,
        )
    except PreconditionError as exc:
        _fail(exc)
    except EnumerationIncompleteError as exc:
        _emit({"error": {"type": "EnumerationIncomplete", "message": str(exc)},
               "exact": False})
        sys.exit(EXIT_BUDGET)
    header = dict(catalog.to_json())
    entries = header.pop("entries")
    _emit(header)
    for entry in entries:
        _emit(entry)


@main.command()
@common_options
@click.option("--k", type=int, required=True, help="crossing budget")
@click.option("--length-cap", "cap", type=int, default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
def graph(n: int, k: int, cap: int | None, jobs: int,
          budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Compatibility graph of the class catalog, with clique bounds."""
    try:
        run = RunConfig(n=n, k=k, budget=budget, cache_dir=cache_dir,
                        use_cache=not no_cache, length_cap_override=cap, jobs=jobs)
        config = run.oracle()
        catalog = enumerate_classes(
            n, k, config, length_cap_override=run.length_cap_override, jobs=run.jobs
        )
        g = compatibility_graph(catalog, config, jobs=run.jobs)
        fb = family_bounds(g)
    except PreconditionError as exc:
        _fail(exc)
    except EnumerationIncompleteError as exc:
        _emit({"error": {"type": "EnumerationIncomplete", "message": str(exc)},
               "exact": False})
        sys.exit(EXIT_BUDGET)
    out = g.to_json()
    out["familyBounds"] = fb.to_json()
    _emit(out)
    if not g.complete:
        sys.exit(EXIT_BUDGET)


@main.command()
@common_options
@click.option("--kmax", type=int, required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv",
              show_default=True)
def growth(kmax: int, n: int, jobs: int, fmt: str,
           budget: int, cache_dir: str | None, no_cache: bool) -> None:
    """Class-count growth table for k = 1..kmax (two punctures)."""
    try:
        if n != 2:
            raise PreconditionError("the growth table is defined for two punctures")
        run = RunConfig(n=n, k=kmax, budget=budget, cache_dir=cache_dir,
                        use_cache=not no_cache, output_format=fmt, jobs=jobs)
        rows = growth_report(kmax, run.oracle(), jobs=run.jobs)
    except PreconditionError as exc:
        _fail(exc)
    except EnumerationIncompleteError as exc:
        _emit({"error": {"type": "EnumerationIncomplete", "message": str(exc)},
               "exact": False})
        sys.exit(EXIT_BUDGET)
    if fmt == "csv":
        str_rows = [
            {
                key: (json.dumps(val) if isinstance(val, bool) else str(val))
                for key, val in row.items()
            }
            for row in rows
        ]
        _emit_csv(str_rows, ["k", "classCountN2", "countUncertainty", "classCountN1",
                             "lnCountOverSqrtK", "fUpperDoubleExpExponent", "exact"])
    else:
        _emit({"rows": rows, "exact": True})


main.add_command(decompose_cmd, name="decompose")


if __name__ == "__main__":
    main()
