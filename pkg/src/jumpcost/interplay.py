"""Cost scans, the per-word inequalities between the four semantics, and the
six separating example languages."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Callable

from . import languages
from .automata import Nfa, ResourceExceededError, words_upto
from .constructions import cost_via_construction
from .oracle import (
    DEFAULT_ENUMERATION_LIMIT,
    INF,
    CostValue,
    EnumerationLimitError,
    Semantics,
    format_cost,
    oracle_cost,
)
from .parikh import jumping_member

DEFAULT_STATE_BUDGET = 200_000


def word_cost(aut: Nfa, word: str, sem: Semantics, max_states: int = DEFAULT_STATE_BUDGET) -> CostValue:
    """Construction first; brute force if the construction blows its budget."""
    try:
        return cost_via_construction(aut, word, sem, max_states)
    except ResourceExceededError:
        return oracle_cost(aut, word, sem)


@dataclass(frozen=True)
class ScanRow:
    length: int
    max_cost: CostValue | None  # None: no word of this length is in the jumping language
    witness: str | None


@dataclass(frozen=True)
class CostScan:
    semantics: Semantics
    rows: tuple[ScanRow, ...]

    @property
    def overall_max(self) -> CostValue | None:
        finite = [r.max_cost for r in self.rows if r.max_cost is not None]
        return max(finite, default=None)


def scan_costs(aut: Nfa, sem: Semantics, max_len: int) -> CostScan:
    """Largest cost among jumping-language words of each length.

    The witness is the alphabetically first word attaining the maximum;
    its cost is rechecked by brute force.
    """
    sem = Semantics(sem)
    if max_len > DEFAULT_ENUMERATION_LIMIT:
        raise EnumerationLimitError(max_len, DEFAULT_ENUMERATION_LIMIT)
    best: dict[int, tuple[CostValue, str]] = {}
    for word in words_upto(aut.alphabet, max_len):
        if not jumping_member(aut, word):
            continue
        cost = word_cost(aut, word, sem)
        if len(word) not in best or cost > best[len(word)][0]:
            best[len(word)] = (cost, word)
    rows = []
    for length in range(max_len + 1):
        if length not in best:
            rows.append(ScanRow(length, None, None))
            continue
        cost, word = best[length]
        if oracle_cost(aut, word, sem) != cost:
            raise AssertionError(f"scan witness {word!r} cost mismatch")
        rows.append(ScanRow(length, cost, word))
    return CostScan(sem, tuple(rows))


def sorted_word(word: str, alphabet: tuple[str, ...]) -> str:
    """Letters grouped in alphabet declaration order."""
    return "".join(sym * word.count(sym) for sym in alphabet)


@dataclass(frozen=True)
class Violation:
    word: str
    inequality: str
    lhs: CostValue
    rhs: CostValue


@dataclass
class InterplayReport:
    words_checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["word", "inequality", "lhs", "rhs"])
        for v in self.violations:
            writer.writerow([v.word, v.inequality, format_cost(v.lhs), format_cost(v.rhs)])
        return out.getvalue()

    def to_markdown(self) -> str:
        lines = [
            f"Checked {self.words_checked} words, {len(self.violations)} violations.",
            "",
            "| word | inequality | lhs | rhs |",
            "|---|---|---|---|",
        ]
        for v in self.violations:
            lines.append(f"| {v.word} | {v.inequality} | {format_cost(v.lhs)} | {format_cost(v.rhs)} |")
        return "\n".join(lines) + "\n"


def check_interplay(aut: Nfa, max_len: int) -> InterplayReport:
    """Check the four inequalities on every jumping-language word up to ``max_len``."""
    if max_len > DEFAULT_ENUMERATION_LIMIT:
        raise EnumerationLimitError(max_len, DEFAULT_ENUMERATION_LIMIT)
    report = InterplayReport()
    sigma = len(aut.alphabet)
    for word in words_upto(aut.alphabet, max_len):
        if not jumping_member(aut, word):
            continue
        report.words_checked += 1
        c = {sem: word_cost(aut, word, sem) for sem in Semantics}
        grouped_max = word_cost(aut, sorted_word(word, aut.alphabet), Semantics.MAX)
        checks = [
            ("max <= abs", c[Semantics.MAX], c[Semantics.ABS]),
            (
                "ham <= (2*abs+1)*(abs+1)",
                c[Semantics.HAM],
                (2 * c[Semantics.ABS] + 1) * (c[Semantics.ABS] + 1),
            ),
            ("rev <= 3*ham", c[Semantics.REV], 3 * c[Semantics.HAM]),
            (
                "rev <= (|alphabet|-1)*(2*max(sorted)+1)+1",
                c[Semantics.REV],
                (sigma - 1) * (2 * grouped_max + 1) + 1,
            ),
        ]
        for name, lhs, rhs in checks:
            if lhs == INF or not lhs <= rhs:
                report.violations.append(Violation(word, name, lhs, rhs))
    return report


# Separating examples ------------------------------------------------------

SEMANTICS_ORDER = (Semantics.ABS, Semantics.HAM, Semantics.REV, Semantics.MAX)


@dataclass(frozen=True)
class Family:
    """Words ``make(0), make(1), ...`` whose cost should grow without bound."""

    name: str
    make: Callable[[int], str]

    def members(self, max_len: int) -> list[tuple[int, str]]:
        out = []
        n = 0
        while len(self.make(n)) <= max_len:
            out.append((n, self.make(n)))
            n += 1
            if n > max_len + 1:
                break
        return out


@dataclass(frozen=True)
class Table2Row:
    tag: str
    build: Callable[[], Nfa]
    expected: dict[Semantics, bool]  # True means bounded
    families: dict[Semantics, Family]  # evidence for unbounded cells
    ceilings: dict[Semantics, int]  # proven bound for bounded cells


B_N_A_N = Family("b^n a^n", lambda n: "b" * n + "a" * n)
A_B_N = Family("a b^n", lambda n: "a" + "b" * n)
B_C_N_A = Family("b c^n a", lambda n: "b" + "c" * n + "a")
AABB_N = Family("(aabb)^n", lambda n: "aabb" * n)
BA_N = Family("(ba)^n", lambda n: "ba" * n)


def _cells(abs_: bool, ham: bool, rev: bool, max_: bool) -> dict[Semantics, bool]:
    return dict(zip(SEMANTICS_ORDER, (abs_, ham, rev, max_)))


TABLE2_ROWS: tuple[Table2Row, ...] = (
    Table2Row(
        "(a+b)*",
        languages.all_words,
        _cells(True, True, True, True),
        {},
        {sem: 0 for sem in Semantics},
    ),
    Table2Row(
        "c*ac*bc*",
        languages.c_a_c_b_c,
        _cells(False, True, True, True),
        {Semantics.ABS: B_C_N_A},
        # rev follows from ham via rev <= 3*ham
        {Semantics.HAM: 2, Semantics.REV: 6, Semantics.MAX: 2},
    ),
    Table2Row(
        "(a+b)*a",
        languages.ends_with_a,
        _cells(False, True, True, False),
        {Semantics.ABS: A_B_N, Semantics.MAX: A_B_N},
        {Semantics.HAM: 2, Semantics.REV: 2},
    ),
    Table2Row(
        "odd-blocks",
        languages.odd_blocks,
        _cells(False, False, True, True),
        {Semantics.ABS: AABB_N, Semantics.HAM: AABB_N},
        # rev follows from max over a two-letter alphabet: (2-1)*(2*2+1)+1
        {Semantics.REV: 6, Semantics.MAX: 2},
    ),
    Table2Row(
        "a*b*",
        languages.a_star_b_star,
        _cells(False, False, True, False),
        {Semantics.ABS: B_N_A_N, Semantics.HAM: B_N_A_N, Semantics.MAX: B_N_A_N},
        {Semantics.REV: 2},
    ),
    Table2Row(
        "(ab)*",
        languages.ab_star,
        _cells(False, False, False, False),
        # b^n a^n stalls for ham (bbaa is two swaps from abab)
        {Semantics.ABS: B_N_A_N, Semantics.HAM: BA_N, Semantics.REV: B_N_A_N, Semantics.MAX: B_N_A_N},
        {},
    ),
)


@dataclass(frozen=True)
class Table2Cell:
    language: str
    semantics: Semantics
    expected_bounded: bool
    observed: str  # "bounded", "unbounded" or "unknown"
    evidence_kind: str
    scan: CostScan
    family_costs: tuple[tuple[str, CostValue], ...] = ()

    @property
    def matches(self) -> bool:
        return self.observed == ("bounded" if self.expected_bounded else "unbounded")


@dataclass
class Table2Report:
    max_len: int
    cells: list[Table2Cell]

    @property
    def ok(self) -> bool:
        return all(c.matches for c in self.cells)

    def csv_rows(self) -> list[list[str]]:
        rows = []
        for cell in self.cells:
            for r in cell.scan.rows:
                rows.append([
                    cell.language,
                    cell.semantics.value,
                    str(r.length),
                    "" if r.max_cost is None else format_cost(r.max_cost),
                    r.witness or "",
                    cell.evidence_kind,
                ])
        return rows

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["language", "semantics", "length", "max_cost", "witness", "evidence_kind"])
        writer.writerows(self.csv_rows())
        return out.getvalue()

    def to_markdown(self) -> str:
        lines = [
            f"# Separating languages (words up to length {self.max_len})",
            "",
            "| language | semantics | expected | observed | evidence |",
            "|---|---|---|---|---|",
        ]
        for c in self.cells:
            expected = "bounded" if c.expected_bounded else "unbounded"
            lines.append(f"| {c.language} | {c.semantics.value} | {expected} | {c.observed} | {c.evidence_kind} |")
        lines += [
            "",
            "| language | semantics | length | max_cost | witness | evidence_kind |",
            "|---|---|---|---|---|---|",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in self.csv_rows()]
        return "\n".join(lines) + "\n"


def strictly_increasing(values: list[CostValue]) -> bool:
    return len(values) >= 2 and all(a < b for a, b in zip(values, values[1:]))


def classify_cell(row: Table2Row, aut: Nfa, sem: Semantics, max_len: int) -> Table2Cell:
    scan = scan_costs(aut, sem, max_len)
    if sem in row.families:
        family = row.families[sem]
        costs = tuple((w, word_cost(aut, w, sem)) for _, w in family.members(max_len))
        grows = strictly_increasing([c for _, c in costs]) and all(c != INF for _, c in costs)
        observed = "unbounded" if grows else "unknown"
        return Table2Cell(row.tag, sem, row.expected[sem], observed, f"family {family.name}", scan, costs)
    ceiling = row.ceilings[sem]
    top = scan.overall_max
    observed = "bounded" if top is None or top <= ceiling else "unbounded"
    return Table2Cell(row.tag, sem, row.expected[sem], observed, f"ceiling {ceiling}", scan)


def table2_suite(max_len: int = 6) -> Table2Report:
    if max_len < 6:
        raise ValueError("the separating examples need words of length at least 6")
    cells = []
    for row in TABLE2_ROWS:
        aut = row.build()
        for sem in SEMANTICS_ORDER:
            cells.append(classify_cell(row, aut, sem, max_len))
    return Table2Report(max_len, cells)
