"""Command-line front end.

Exit statuses: 0 definite answer, 1 definite negative, 2 unknown or
budget exceeded, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import boundedness, interplay
from .automata import (
    AutomatonError,
    Nfa,
    ResourceExceeded,
    ResourceExceededError,
    materialize,
    parse_automaton,
    serialize_automaton,
    words_upto,
)
from .constructions import build, cost_via_construction
from .languages import random_corpus
from .oracle import EnumerationLimitError, Semantics, format_cost, oracle_cost
from .parikh import jumping_member

OK, NEGATIVE, UNKNOWN, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _load(path: str | None) -> Nfa:
    if path is None:
        raise UsageError("--aut is required")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_automaton(text)


def _word(raw: str | None) -> str:
    if raw is None:
        raise UsageError("--word is required")
    return "" if raw == '""' else raw


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def cmd_cost(args) -> int:
    aut = _load(args.aut)
    word = _word(args.word)
    sem = Semantics.parse(_need(args.sem, "--sem"))
    aut.check_word(word)
    results = []
    if args.method in ("oracle", "both"):
        results.append(oracle_cost(aut, word, sem))
    if args.method in ("construction", "both"):
        results.append(cost_via_construction(aut, word, sem, args.budget))
    for value in results:
        print(format_cost(value))
    if len(set(results)) > 1:
        print("oracle and construction disagree", file=sys.stderr)
        return USAGE
    return OK


def cmd_member(args) -> int:
    aut = _load(args.aut)
    word = _word(args.word)
    inside = jumping_member(aut, word)
    print("true" if inside else "false")
    return OK if inside else NEGATIVE


def cmd_construct(args) -> int:
    aut = _load(args.aut)
    sem = Semantics.parse(_need(args.sem, "--sem"))
    out = _need(args.out, "--out")
    budget = args.budget if args.budget is not None else 100_000
    if budget < 1:
        raise UsageError("--budget must be positive")
    explicit = materialize(build(aut, sem, _need(args.k, "--k")), budget)
    if isinstance(explicit, ResourceExceeded):
        print(str(explicit), file=sys.stderr)
        return UNKNOWN
    Path(out).write_text(serialize_automaton(explicit), encoding="utf-8")
    print(f"states={explicit.state_count} transitions={len(explicit.transitions)}")
    return OK


def cmd_bounded(args) -> int:
    aut = _load(args.aut)
    sem = Semantics.parse(_need(args.sem, "--sem"))
    k = _need(args.k, "--k")
    budget = args.budget if args.budget is not None else 100_000
    if args.universal:
        verdict = boundedness.univ_bounded(aut, sem, k, budget)
    elif args.mode == "exact":
        verdict = boundedness.jlang_bounded_exact(aut, sem, k, budget, budget)
    else:
        max_len = args.max_len if args.max_len is not None else 6
        verdict = boundedness.jlang_bounded_search(aut, sem, k, max_len)
    print(verdict.describe())
    if isinstance(verdict, boundedness.Bounded):
        return OK
    if isinstance(verdict, boundedness.Unbounded):
        return NEGATIVE
    return UNKNOWN


def _write_reports(csv_path: Path, csv_text: str, markdown: str) -> None:
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    csv_path.write_text(csv_text, encoding="utf-8")
    csv_path.with_suffix(".md").write_text(markdown, encoding="utf-8")


def cmd_interplay(args) -> int:
    aut = _load(args.aut)
    max_len = args.max_len if args.max_len is not None else 6
    report = interplay.check_interplay(aut, max_len)
    if args.out:
        _write_reports(Path(args.out), report.to_csv(), report.to_markdown())
    print(f"words={report.words_checked} violations={len(report.violations)}")
    for v in report.violations:
        print(f"violation word={v.word} {v.inequality} lhs={format_cost(v.lhs)} rhs={format_cost(v.rhs)}")
    return OK if report.ok else NEGATIVE


def cmd_table2(args) -> int:
    max_len = args.max_len if args.max_len is not None else 6
    report = interplay.table2_suite(max_len)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_reports(out / "table2.csv", report.to_csv(), report.to_markdown())
    for cell in report.cells:
        status = "match" if cell.matches else "MISMATCH"
        print(f"{cell.language} {cell.semantics.value} {cell.observed} ({cell.evidence_kind}) {status}")
    return OK if report.ok else NEGATIVE


def cmd_selftest(args) -> int:
    """Compare oracle and construction costs on a seeded random corpus."""
    max_len = args.max_len if args.max_len is not None else 4
    checks = 0
    failures = 0
    for entry in random_corpus(args.count, args.seed):
        for word in words_upto(entry.nfa.alphabet, max_len):
            for sem in Semantics:
                expected = oracle_cost(entry.nfa, word, sem)
                got = cost_via_construction(entry.nfa, word, sem, args.budget)
                checks += 1
                if expected != got:
                    failures += 1
                    print(
                        f"mismatch {entry.name} word={word!r} sem={sem.value} "
                        f"oracle={format_cost(expected)} construction={format_cost(got)}"
                    )
    print(f"checks={checks} mismatches={failures} seed={args.seed}")
    return OK if failures == 0 else NEGATIVE


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--aut", help="automaton file")
    common.add_argument("--seed", type=int, default=0, help="seed for random corpora")
    common.add_argument("--budget", type=int, help="state budget for constructions")
    common.add_argument("--max-len", type=int, help="longest word to enumerate")

    parser = _Parser(prog="jumpcost", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    sem_choices = [s.value for s in Semantics]

    p = add("cost", cmd_cost, "cost of a word under one semantics")
    p.add_argument("--word")
    p.add_argument("--sem", choices=sem_choices)
    p.add_argument("--method", choices=["oracle", "construction", "both"], default="construction")

    p = add("member", cmd_member, "is the word a rearrangement of an accepted word")
    p.add_argument("--word")

    p = add("construct", cmd_construct, "write the bounded-cost automaton")
    p.add_argument("--sem", choices=sem_choices)
    p.add_argument("--k", type=int)
    p.add_argument("--out")

    p = add("bounded", cmd_bounded, "is every word within cost k")
    p.add_argument("--sem", choices=sem_choices)
    p.add_argument("--k", type=int)
    p.add_argument("--universal", action="store_true", help="quantify over all words")
    p.add_argument("--mode", choices=["exact", "search"], default="search")

    p = add("interplay", cmd_interplay, "check the inequalities between semantics")
    p.add_argument("--out", help="CSV report path; a .md file is written next to it")

    p = add("table2", cmd_table2, "classify the six separating languages")
    p.add_argument("--out", help="output directory")

    p = add("selftest", cmd_selftest, "oracle vs construction on random automata")
    p.add_argument("--count", type=int, default=5)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.budget is not None and args.budget < 1:
        parser.error("--budget must be positive")
    if args.max_len is not None and args.max_len < 0:
        parser.error("--max-len must be non-negative")
    if getattr(args, "k", None) is not None and args.k < 0:
        parser.error("--k must be non-negative")
    try:
        return args.func(args)
    except (UsageError, AutomatonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (EnumerationLimitError, ResourceExceededError) as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return UNKNOWN
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return OK


if __name__ == "__main__":
    sys.exit(main())
