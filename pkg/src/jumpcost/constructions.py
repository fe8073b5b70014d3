"""Bounded-cost automata: for an NFA ``A`` and a bound ``k`` each builder
returns an implicit automaton accepting exactly the words whose cheapest
jumping run of ``A`` costs at most ``k`` under the given semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .automata import ImplicitAutomaton, Nfa, implicit_member
from .oracle import INF, CostValue, Semantics


class HamAutomaton(ImplicitAutomaton):
    """Simulate ``A`` on a rearrangement that differs from the input in at
    most ``k`` positions.  ``balance[i]`` counts how many more copies of
    letter ``i`` were fed to ``A`` than were read from the input."""

    def __init__(self, aut: Nfa, k: int):
        super().__init__(aut.alphabet)
        self.nfa, self.k = aut, k
        self._index = {sym: i for i, sym in enumerate(aut.alphabet)}

    def initial(self):
        zero = (0,) * len(self.alphabet)
        return frozenset((q, zero, 0) for q in self.nfa.initial)

    def step(self, state, sym):
        q, balance, swaps = state
        out = {(r, balance, swaps) for r in self.nfa.successors(q, sym)}
        if swaps < self.k:
            read = self._index[sym]
            for fed, tau in enumerate(self.alphabet):
                if fed == read:
                    continue
                targets = self.nfa.successors(q, tau)
                if not targets:
                    continue
                shifted = list(balance)
                shifted[read] -= 1
                shifted[fed] += 1
                shifted = tuple(shifted)
                out.update((r, shifted, swaps + 1) for r in targets)
        return out

    def accepting(self, state):
        q, balance, _ = state
        return q in self.nfa.accepting and not any(balance)


class RevAutomaton(ImplicitAutomaton):
    """Track one run segment of ``A`` per sweep of the head.

    Sweeps alternate direction, so with ``k`` reversals the input is a
    shuffle of ``k+1`` pieces, odd ones read forwards and even ones
    backwards.  Reversal counts are always even, so an odd ``k`` behaves
    like ``k-1``.
    """

    def __init__(self, aut: Nfa, k: int):
        super().__init__(aut.alphabet)
        self.nfa, self.k = aut, k
        self.width = k - k % 2 + 1

    def initial(self):
        states = range(self.nfa.state_count)
        out = set()
        for q0 in self.nfa.initial:
            layers = [(q0,)]
            for _ in range(self.width // 2):
                layers = [prefix + (p, p) for prefix in layers for p in states]
            out.update(layers)
        return frozenset(out)

    def step(self, state, sym):
        out = set()
        for j, q in enumerate(state):
            # index 0 is the first sweep, which moves forward
            moves = self.nfa.successors(q, sym) if j % 2 == 0 else self.nfa.predecessors(q, sym)
            for r in moves:
                out.add(state[:j] + (r,) + state[j + 1 :])
        return out

    def accepting(self, state):
        if state[-1] not in self.nfa.accepting:
            return False
        return all(state[j] == state[j + 1] for j in range(0, self.width - 1, 2))


# Window cells for the ABS automaton.  Cells left of the current input
# position are READ or hold the letter seen there (verified, not yet jumped
# to).  Cells at or right of it are UNKNOWN or hold a letter the jump head
# already consumed on a guess, which gets checked when the input reaches it.
READ = ""
UNKNOWN = None


class AbsAutomaton(ImplicitAutomaton):
    """Sliding window of ``2k+1`` cells around the sequential position.

    A state is ``(q, window, head, spent)``: ``head`` is the offset of the
    cell the jump head reads in the coming step and ``spent`` the jump cost
    paid so far.  A run with total cost at most ``k`` never reads further
    than ``k`` cells from the sequential position, so the window suffices.
    """

    def __init__(self, aut: Nfa, k: int):
        super().__init__(aut.alphabet)
        self.nfa, self.k = aut, k

    def initial(self):
        k = self.k
        window = (READ,) * k + (UNKNOWN,) * (k + 1)
        # first jump goes from the left end marker to cell 1 + head
        return frozenset((q, window, head, head) for q in self.nfa.initial for head in range(k + 1))

    def step(self, state, sym):
        q, window, head, spent = state
        k = self.k
        cells = list(window)

        centre = cells[k]
        if centre is UNKNOWN:
            cells[k] = sym
        elif centre == sym:
            cells[k] = READ
        else:
            return ()

        target = head + k
        current = cells[target]
        if head <= 0:
            if current is UNKNOWN or current == READ:
                return ()
            options = [(current, READ)]
        else:
            if current is not UNKNOWN:
                return ()
            options = [(tau, tau) for tau in self.alphabet]

        out = set()
        for letter, mark in options:
            successors = self.nfa.successors(q, letter)
            if not successors:
                continue
            after = cells.copy()
            after[target] = mark
            if after[0] != READ:
                continue
            shifted = tuple(after[1:]) + (UNKNOWN,)
            for nxt in range(-k, k + 1):
                cost = spent + abs(1 + nxt - head) - 1
                if cost > k:
                    continue
                if not self._can_read(shifted, nxt):
                    continue
                for r in successors:
                    out.add((r, shifted, nxt, cost))
        return out

    def _can_read(self, window, head) -> bool:
        cell = window[head + self.k]
        if head < 0:
            return cell is not UNKNOWN and cell != READ
        return cell is UNKNOWN

    def word_filter(self, word: str):
        n, k = len(word), self.k

        def viable(state, consumed: int) -> bool:
            _, window, head, _ = state
            upcoming = consumed + 1  # input position the window is centred on
            target = upcoming + head
            if consumed < n and not 1 <= target <= n:
                return False
            for offset in range(0, k + 1):
                cell = window[offset + k]
                if cell is UNKNOWN:
                    continue
                pos = upcoming + offset
                if pos > n or word[pos - 1] != cell:
                    return False
            return True

        return viable

    def accepting(self, state):
        q, window, head, _ = state
        k = self.k
        return (
            q in self.nfa.accepting
            and head == 0
            and all(cell == READ for cell in window[:k])
            and all(cell is UNKNOWN for cell in window[k:])
        )


# MAX construction ---------------------------------------------------------


@dataclass(frozen=True, order=True)
class Coordinate:
    """One tracked sweep: direction, simulated state, steps since its last
    letter, and the coordinates it is currently linked with."""

    right: bool
    q: int
    t: int
    linked: frozenset[int]


class MaxAutomaton(ImplicitAutomaton):
    """Guess, per letter, which sweep of the head reads it.

    ``2k+2`` coordinates each hold an active sweep or ``None``.  Right sweeps
    run ``A`` forwards, left sweeps run it backwards.  A left/right pair is
    opened where the head turns at a leftmost point and closed where it turns
    at a rightmost point.  ``linked`` records which open coordinates belong
    to the same partial path so that closing a pair onto itself (a loop
    detached from the real run) is refused.  ``t`` counts letters since the
    sweep last read one; reaching ``k+1`` would force a jump over more than
    ``k`` cells.

    States are kept in a canonical labelling (the path containing the
    start sits in coordinate 0, other open pairs follow in sorted order).
    Relabelling coordinates does not change the language, and this keeps
    the reachable state space small.
    """

    def __init__(self, aut: Nfa, k: int):
        super().__init__(aut.alphabet)
        self.nfa, self.k = aut, k
        self.width = 2 * k + 2

    def initial(self):
        rest = (None,) * (self.width - 1)
        return frozenset(
            (Coordinate(True, q0, 0, frozenset({0})),) + rest for q0 in self.nfa.initial
        )

    def _tick(self, coords, skip) -> list | None:
        out = list(coords)
        for j, c in enumerate(coords):
            if c is None or j in skip:
                continue
            if c.t + 1 > self.k:
                return None
            out[j] = Coordinate(c.right, c.q, c.t + 1, c.linked)
        return out

    def operations(self, coords, sym) -> Iterator[tuple]:
        active = [j for j, c in enumerate(coords) if c is not None]
        idle = [j for j, c in enumerate(coords) if c is None]

        for j in active:
            c = coords[j]
            moves = self.nfa.successors(c.q, sym) if c.right else self.nfa.predecessors(c.q, sym)
            if not moves:
                continue
            base = self._tick(coords, {j})
            if base is None:
                continue
            for r in moves:
                nxt = list(base)
                nxt[j] = Coordinate(c.right, r, 0, c.linked)
                yield tuple(nxt)

        if len(idle) >= 2:
            base = self._tick(coords, set())
            if base is not None:
                # which idle pair gets opened is irrelevant after canonical()
                jl, jr = idle[0], idle[1]
                pair = frozenset({jl, jr})
                for p in range(self.nfa.state_count):
                    for q in self.nfa.successors(p, sym):
                        nxt = list(base)
                        nxt[jl] = Coordinate(False, p, 0, pair)
                        nxt[jr] = Coordinate(True, q, 0, pair)
                        yield tuple(nxt)

        for jl in active:
            left = coords[jl]
            if left.right:
                continue
            for jr in active:
                right = coords[jr]
                if not right.right:
                    continue
                if left.linked == right.linked == frozenset({jl, jr}):
                    continue
                if left.q not in self.nfa.successors(right.q, sym):
                    continue
                base = self._tick(coords, {jl, jr})
                if base is None:
                    continue
                base[jl] = base[jr] = None
                merged = (left.linked | right.linked) - {jl, jr}
                for j in merged:
                    c = base[j]
                    base[j] = Coordinate(c.right, c.q, c.t, merged)
                yield tuple(base)

    def canonical(self, coords):
        groups: dict[frozenset[int], list[int]] = {}
        for j, c in enumerate(coords):
            if c is not None:
                groups.setdefault(c.linked, []).append(j)
        start = None
        pairs = []
        for members in groups.values():
            if len(members) == 1:
                if start is not None:
                    raise AssertionError(f"two start paths in {coords}")
                start = coords[members[0]]
            else:
                a, b = (coords[j] for j in members)
                left, right = (b, a) if a.right else (a, b)
                pairs.append(((left.q, left.t), (right.q, right.t)))
        if start is None:
            raise AssertionError(f"no start path in {coords}")
        pairs.sort()
        out = [Coordinate(True, start.q, start.t, frozenset({0}))]
        for n, ((lq, lt), (rq, rt)) in enumerate(pairs):
            link = frozenset({2 * n + 1, 2 * n + 2})
            out.append(Coordinate(False, lq, lt, link))
            out.append(Coordinate(True, rq, rt, link))
        out.extend([None] * (self.width - len(out)))
        return tuple(out)

    def step(self, state, sym):
        return {self.canonical(nxt) for nxt in self.operations(state, sym)}

    def word_filter(self, word: str):
        n = len(word)

        def viable(state, consumed):
            # every open pair still needs its own closing letter
            open_pairs = sum(c is not None for c in state) // 2
            return open_pairs <= n - consumed

        return viable

    def accepting(self, state):
        active = [(j, c) for j, c in enumerate(state) if c is not None]
        if len(active) != 1:
            return False
        j, c = active[0]
        return c.right and c.q in self.nfa.accepting and c.linked == frozenset({j})


BUILDERS = {
    Semantics.ABS: AbsAutomaton,
    Semantics.REV: RevAutomaton,
    Semantics.HAM: HamAutomaton,
    Semantics.MAX: MaxAutomaton,
}


def build_abs(aut: Nfa, k: int) -> AbsAutomaton:
    return AbsAutomaton(aut, _check_k(k))


def build_rev(aut: Nfa, k: int) -> RevAutomaton:
    return RevAutomaton(aut, _check_k(k))


def build_ham(aut: Nfa, k: int) -> HamAutomaton:
    return HamAutomaton(aut, _check_k(k))


def build_max(aut: Nfa, k: int) -> MaxAutomaton:
    return MaxAutomaton(aut, _check_k(k))


def build(aut: Nfa, sem: Semantics, k: int) -> ImplicitAutomaton:
    return BUILDERS[Semantics(sem)](aut, _check_k(k))


def _check_k(k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    return k


def candidate_bounds(sem: Semantics, n: int) -> range:
    """Bounds worth trying for a word of length ``n``, smallest first."""
    if sem is Semantics.ABS:
        return range(0, n * n + 1, 2)
    if sem is Semantics.REV:
        return range(0, n + 1, 2)
    return range(0, n + 1)


def cost_via_construction(
    aut: Nfa, word: str, sem: Semantics, max_states: int | None = None
) -> CostValue:
    """Smallest ``k`` whose bounded-cost automaton accepts ``word``."""
    from .parikh import jumping_member

    aut.check_word(word)
    sem = Semantics(sem)
    if not jumping_member(aut, word):
        return INF
    for k in candidate_bounds(sem, len(word)):
        if implicit_member(build(aut, sem, k), word, max_states):
            return k
    return INF
