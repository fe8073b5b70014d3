"""Explicit and lazily-expanded nondeterministic automata.

An :class:`Nfa` is a plain value object with dense integer states.  An
:class:`ImplicitAutomaton` only knows how to produce initial states,
successors and the acceptance predicate; every construction in
:mod:`jumpcost.constructions` is one of these and is never expanded beyond
what a query actually touches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence, Union


class AutomatonError(ValueError):
    """Malformed automaton text or a word outside the alphabet."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ResourceExceeded:
    """A search stopped because it hit its budget; never a yes/no answer."""

    what: str
    limit: int

    def __str__(self) -> str:
        return f"{self.what} budget of {self.limit} exceeded"


class ResourceExceededError(RuntimeError):
    """Raised form of :class:`ResourceExceeded` for code paths that return values."""

    def __init__(self, info: ResourceExceeded):
        self.info = info
        super().__init__(str(info))


@dataclass(frozen=True)
class Universal:
    pass


@dataclass(frozen=True)
class NotUniversal:
    witness: str


UniversalityVerdict = Union[Universal, NotUniversal]


@dataclass(frozen=True)
class Nfa:
    alphabet: tuple[str, ...]
    state_count: int
    initial: frozenset[int]
    accepting: frozenset[int]
    transitions: frozenset[tuple[int, str, int]]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AutomatonError("alphabet symbols must be distinct")
        for sym in self.alphabet:
            if len(sym) != 1:
                raise AutomatonError(f"symbol {sym!r} is not a single character")
        for q in self.initial | self.accepting:
            if not 0 <= q < self.state_count:
                raise AutomatonError(f"state index {q} out of range")
        for src, sym, dst in self.transitions:
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise AutomatonError(f"transition ({src}, {sym!r}, {dst}) out of range")
            if sym not in self.alphabet:
                raise AutomatonError(f"transition symbol {sym!r} not in alphabet")
        if self.names and len(self.names) != self.state_count:
            raise AutomatonError("one name per state required")

    @classmethod
    def build(
        cls,
        alphabet: Iterable[str],
        state_count: int,
        initial: Iterable[int],
        accepting: Iterable[int],
        transitions: Iterable[tuple[int, str, int]],
    ) -> "Nfa":
        return cls(
            tuple(alphabet),
            state_count,
            frozenset(initial),
            frozenset(accepting),
            frozenset(transitions),
        )

    def state_name(self, q: int) -> str:
        return self.names[q] if self.names else f"q{q}"

    @cached_property
    def delta(self) -> dict[tuple[int, str], frozenset[int]]:
        out: dict[tuple[int, str], set[int]] = {}
        for src, sym, dst in self.transitions:
            out.setdefault((src, sym), set()).add(dst)
        return {key: frozenset(val) for key, val in out.items()}

    @cached_property
    def reverse_delta(self) -> dict[tuple[int, str], frozenset[int]]:
        """``(q, sym) -> {p | q in delta(p, sym)}``."""
        out: dict[tuple[int, str], set[int]] = {}
        for src, sym, dst in self.transitions:
            out.setdefault((dst, sym), set()).add(src)
        return {key: frozenset(val) for key, val in out.items()}

    def successors(self, q: int, sym: str) -> frozenset[int]:
        return self.delta.get((q, sym), frozenset())

    def predecessors(self, q: int, sym: str) -> frozenset[int]:
        return self.reverse_delta.get((q, sym), frozenset())

    def check_word(self, word: str) -> None:
        for ch in word:
            if ch not in self.alphabet:
                raise AutomatonError(f"symbol {ch!r} not in alphabet {''.join(self.alphabet)!r}")


# -- text format -----------------------------------------------------------


def parse_automaton(text: str) -> Nfa:
    """Parse the line-oriented ``alphabet`` / ``state`` / ``trans`` format."""
    alphabet: list[str] | None = None
    names: list[str] = []
    index: dict[str, int] = {}
    initial: set[int] = set()
    accepting: set[int] = set()
    transitions: set[tuple[int, str, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "alphabet":
            if alphabet is not None:
                raise AutomatonError("duplicate alphabet line", lineno)
            for sym in rest:
                if len(sym) != 1 or not sym.isprintable() or not sym.isascii():
                    raise AutomatonError(f"bad symbol {sym!r}", lineno)
            if len(set(rest)) != len(rest):
                raise AutomatonError("repeated alphabet symbol", lineno)
            alphabet = rest
        elif head == "state":
            if not rest:
                raise AutomatonError("state line needs a name", lineno)
            name, *flags = rest
            if name in index:
                raise AutomatonError(f"state {name!r} declared twice", lineno)
            index[name] = len(names)
            names.append(name)
            for flag in flags:
                if flag == "initial":
                    initial.add(index[name])
                elif flag == "accepting":
                    accepting.add(index[name])
                else:
                    raise AutomatonError(f"unknown state flag {flag!r}", lineno)
        elif head == "trans":
            if len(rest) != 3:
                raise AutomatonError("trans needs <src> <sym> <dst>", lineno)
            src, sym, dst = rest
            for name in (src, dst):
                if name not in index:
                    raise AutomatonError(f"unknown state name {name!r}", lineno)
            if alphabet is None:
                raise AutomatonError("trans before alphabet line", lineno)
            if sym not in alphabet:
                raise AutomatonError(f"unknown symbol {sym!r}", lineno)
            transitions.add((index[src], sym, index[dst]))
        else:
            raise AutomatonError(f"unknown directive {head!r}", lineno)

    if alphabet is None:
        raise AutomatonError("missing alphabet line")
    if not initial:
        raise AutomatonError("no initial state declared")
    return Nfa(
        tuple(alphabet),
        len(names),
        frozenset(initial),
        frozenset(accepting),
        frozenset(transitions),
        tuple(names),
    )


def serialize_automaton(aut: Nfa) -> str:
    lines = ["alphabet " + " ".join(aut.alphabet)]
    for q in range(aut.state_count):
        flags = []
        if q in aut.initial:
            flags.append("initial")
        if q in aut.accepting:
            flags.append("accepting")
        lines.append(" ".join(["state", aut.state_name(q), *flags]))
    order = {sym: i for i, sym in enumerate(aut.alphabet)}
    for src, sym, dst in sorted(aut.transitions, key=lambda t: (t[0], order[t[1]], t[2])):
        lines.append(f"trans {aut.state_name(src)} {sym} {aut.state_name(dst)}")
    return "\n".join(lines) + "\n"


def accepts(aut: Nfa, word: str) -> bool:
    aut.check_word(word)
    current = set(aut.initial)
    for sym in word:
        current = {r for q in current for r in aut.successors(q, sym)}
        if not current:
            return False
    return not current.isdisjoint(aut.accepting)


# -- implicit automata -----------------------------------------------------


State = Hashable


class ImplicitAutomaton:
    """Automaton given by initial states, a successor function and acceptance.

    Subclasses override :meth:`initial`, :meth:`step` and :meth:`accepting`.
    Successor sets are memoised per instance; this is safe because ``step``
    is required to be pure.
    """

    def __init__(self, alphabet: Sequence[str]):
        self.alphabet = tuple(alphabet)
        self._succ_cache: dict[tuple[State, str], frozenset] = {}

    def initial(self) -> frozenset:
        raise NotImplementedError

    def step(self, state: State, sym: str) -> frozenset:
        raise NotImplementedError

    def accepting(self, state: State) -> bool:
        raise NotImplementedError

    def successors(self, state: State, sym: str) -> frozenset:
        key = (state, sym)
        try:
            return self._succ_cache[key]
        except KeyError:
            succ = self._succ_cache[key] = frozenset(self.step(state, sym))
            return succ

    def check_word(self, word: str) -> None:
        for ch in word:
            if ch not in self.alphabet:
                raise AutomatonError(f"symbol {ch!r} not in alphabet {''.join(self.alphabet)!r}")

    def word_filter(self, word: str):
        """Optional ``(state, consumed) -> bool`` dropping states that cannot
        lead to acceptance of this particular ``word``.  None disables it."""
        return None


class NfaView(ImplicitAutomaton):
    def __init__(self, aut: Nfa):
        super().__init__(aut.alphabet)
        self.nfa = aut

    def initial(self) -> frozenset:
        return self.nfa.initial

    def step(self, state, sym):
        return self.nfa.successors(state, sym)

    def accepting(self, state) -> bool:
        return state in self.nfa.accepting


def as_implicit(aut: Nfa) -> ImplicitAutomaton:
    return NfaView(aut)


def post(aut: ImplicitAutomaton, macro: Iterable[State], sym: str) -> frozenset:
    """One subset-construction step."""
    out: set = set()
    for state in macro:
        out.update(aut.successors(state, sym))
    return frozenset(out)


def implicit_member(aut: ImplicitAutomaton, word: str, max_states: int | None = None) -> bool:
    """Membership by propagating the reachable macro-state letter by letter.

    ``max_states`` caps the size of any single macro-state; exceeding it
    raises :class:`ResourceExceededError`.
    """
    aut.check_word(word)
    viable = aut.word_filter(word)
    macro = frozenset(aut.initial())
    if viable is not None:
        macro = frozenset(s for s in macro if viable(s, 0))
    for consumed, sym in enumerate(word, start=1):
        macro = post(aut, macro, sym)
        if viable is not None:
            macro = frozenset(s for s in macro if viable(s, consumed))
        if not macro:
            return False
        if max_states is not None and len(macro) > max_states:
            raise ResourceExceededError(ResourceExceeded("macro-state size", max_states))
    return any(aut.accepting(s) for s in macro)


def _rejecting(aut: ImplicitAutomaton, macro: frozenset) -> bool:
    return not any(aut.accepting(s) for s in macro)


def is_universal(
    aut: ImplicitAutomaton, max_macro_states: int = 100_000
) -> UniversalityVerdict | ResourceExceeded:
    """Breadth-first on-the-fly determinisation looking for a rejected word.

    Macro-states are expanded in shortlex order of their access words, so the
    first rejecting one gives the shortlex-least rejected word.  A new
    macro-state that contains an already visited one is skipped: anything it
    rejects, the smaller one rejects through a shortlex-smaller word.
    """
    if max_macro_states < 1:
        raise ValueError("max_macro_states must be >= 1")
    start = frozenset(aut.initial())
    if _rejecting(aut, start):
        return _verified_witness(aut, "")
    visited: list[frozenset] = [start]
    seen = {start}
    queue: deque[tuple[frozenset, str]] = deque([(start, "")])
    while queue:
        macro, word = queue.popleft()
        for sym in aut.alphabet:
            nxt = post(aut, macro, sym)
            if nxt in seen:
                continue
            if _rejecting(aut, nxt):
                return _verified_witness(aut, word + sym)
            if any(old <= nxt for old in visited):
                continue
            seen.add(nxt)
            visited.append(nxt)
            if len(seen) > max_macro_states:
                return ResourceExceeded("macro-state", max_macro_states)
            queue.append((nxt, word + sym))
    return Universal()


def _verified_witness(aut: ImplicitAutomaton, word: str) -> NotUniversal:
    if implicit_member(aut, word):
        raise AssertionError(f"universality witness {word!r} is accepted")
    return NotUniversal(word)


def materialize(aut: ImplicitAutomaton, state_budget: int = 100_000) -> Nfa | ResourceExceeded:
    """Reachable part of ``aut`` as an :class:`Nfa`, states in discovery order."""
    if state_budget < 1:
        raise ValueError("state_budget must be >= 1")
    index: dict[State, int] = {}
    order: list[State] = []

    def visit(state) -> bool:
        if state in index:
            return True
        if len(order) >= state_budget:
            return False
        index[state] = len(order)
        order.append(state)
        return True

    for state in sorted(aut.initial(), key=repr):
        if not visit(state):
            return ResourceExceeded("state", state_budget)
    transitions = set()
    cursor = 0
    while cursor < len(order):
        state = order[cursor]
        cursor += 1
        for sym in aut.alphabet:
            for nxt in sorted(aut.successors(state, sym), key=repr):
                if not visit(nxt):
                    return ResourceExceeded("state", state_budget)
                transitions.add((index[state], sym, index[nxt]))
    initial = frozenset(index[s] for s in aut.initial())
    accepting = frozenset(i for i, s in enumerate(order) if aut.accepting(s))
    return Nfa(aut.alphabet, len(order), initial, accepting, frozenset(transitions))


def determinize(aut: Nfa, state_budget: int = 100_000) -> Nfa | ResourceExceeded:
    """Complete DFA by subset construction (the empty set is the sink)."""
    start = frozenset(aut.initial)
    index = {start: 0}
    order = [start]
    transitions = set()
    cursor = 0
    while cursor < len(order):
        macro = order[cursor]
        cursor += 1
        for sym in aut.alphabet:
            nxt = frozenset(r for q in macro for r in aut.successors(q, sym))
            if nxt not in index:
                if len(order) >= state_budget:
                    return ResourceExceeded("subset-construction state", state_budget)
                index[nxt] = len(order)
                order.append(nxt)
            transitions.add((index[macro], sym, index[nxt]))
    accepting = frozenset(i for i, m in enumerate(order) if not m.isdisjoint(aut.accepting))
    return Nfa(aut.alphabet, len(order), frozenset({0}), accepting, frozenset(transitions))


def complement(aut: Nfa, state_budget: int = 100_000) -> Nfa | ResourceExceeded:
    dfa = determinize(aut, state_budget)
    if isinstance(dfa, ResourceExceeded):
        return dfa
    rejecting = frozenset(range(dfa.state_count)) - dfa.accepting
    return Nfa(dfa.alphabet, dfa.state_count, dfa.initial, rejecting, dfa.transitions)


# -- word enumeration helpers ----------------------------------------------


def words_upto(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len, by length then lexicographically."""
    layer = [""]
    yield ""
    for _ in range(max_len):
        layer = [w + sym for w in layer for sym in alphabet]
        yield from layer


def language_upto(aut: Nfa | ImplicitAutomaton, max_len: int) -> set[str]:
    """Accepted words of length <= max_len, by a prefix-sharing walk."""
    if isinstance(aut, Nfa):
        aut = as_implicit(aut)
    found: set[str] = set()
    stack = [("", frozenset(aut.initial()))]
    while stack:
        word, macro = stack.pop()
        if any(aut.accepting(s) for s in macro):
            found.add(word)
        if len(word) == max_len:
            continue
        for sym in aut.alphabet:
            nxt = post(aut, macro, sym)
            if nxt:
                stack.append((word + sym, nxt))
    return found
