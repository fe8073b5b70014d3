"""Letter-count vectors: jumping membership and Parikh-image intersection.

Intersection emptiness is decided on the usual flow encoding.  A word of an
NFA corresponds to an integer flow from one initial state to one accepting
state whose support is connected to the source; two languages share a
Parikh vector iff two such flows carry the same number of each letter.
The integer problem is solved by depth-first branch and bound over LP
relaxations, with connectivity enforced by branching when an integral
solution has a detached cycle.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np
from scipy.optimize import linprog

from .automata import AutomatonError, Nfa

ParikhVector = tuple[int, ...]


def parikh_vector(word: str, alphabet: Sequence[str]) -> ParikhVector:
    counts = Counter(word)
    foreign = set(counts) - set(alphabet)
    if foreign:
        raise AutomatonError(f"symbols {''.join(sorted(foreign))!r} not in alphabet")
    return tuple(counts[sym] for sym in alphabet)


def parikh_member(vector: Sequence[int], aut: Nfa) -> bool:
    """Is some word with these letter counts (in ``aut.alphabet`` order) accepted?"""
    target = tuple(vector)
    if len(target) != len(aut.alphabet) or any(c < 0 for c in target):
        raise ValueError(f"vector {target} does not fit alphabet {aut.alphabet}")
    zero = (0,) * len(target)
    seen = {(q, zero) for q in aut.initial}
    queue = deque(seen)
    while queue:
        q, used = queue.popleft()
        if used == target and q in aut.accepting:
            return True
        for i, sym in enumerate(aut.alphabet):
            if used[i] == target[i]:
                continue
            more = used[:i] + (used[i] + 1,) + used[i + 1 :]
            for r in aut.successors(q, sym):
                if (r, more) not in seen:
                    seen.add((r, more))
                    queue.append((r, more))
    return False


def jumping_member(aut: Nfa, word: str) -> bool:
    aut.check_word(word)
    return parikh_member(parikh_vector(word, aut.alphabet), aut)


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class NonEmpty:
    witness: ParikhVector


@dataclass(frozen=True)
class Unknown:
    reason: str


IntersectionVerdict = Union[Empty, NonEmpty, Unknown]


@dataclass
class FlowSystem:
    """Equality constraints of the joint flow problem, one block per automaton."""

    automata: tuple[Nfa, Nfa]
    columns: list[tuple] = field(default_factory=list)
    offsets: list[int] = field(default_factory=list)

    def __post_init__(self):
        for side, aut in enumerate(self.automata):
            self.offsets.append(len(self.columns))
            edges = sorted(aut.transitions)
            self.columns += [("edge", side, e) for e in edges]
            self.columns += [("source", side, q) for q in sorted(aut.initial)]
            self.columns += [("sink", side, q) for q in sorted(aut.accepting)]
        self.offsets.append(len(self.columns))
        self.index = {col: i for i, col in enumerate(self.columns)}

    @property
    def size(self) -> int:
        return len(self.columns)

    def side_columns(self, side: int) -> range:
        return range(self.offsets[side], self.offsets[side + 1])

    def equalities(self) -> tuple[np.ndarray, np.ndarray]:
        rows: list[np.ndarray] = []
        rhs: list[float] = []
        for side, aut in enumerate(self.automata):
            cols = self.side_columns(side)
            for kind in ("source", "sink"):
                row = np.zeros(self.size)
                for i in cols:
                    if self.columns[i][0] == kind:
                        row[i] = 1
                rows.append(row)
                rhs.append(1)
            for q in range(aut.state_count):
                row = np.zeros(self.size)
                for i in cols:
                    kind, _, item = self.columns[i]
                    if kind == "edge":
                        src, _, dst = item
                        row[i] += (dst == q) - (src == q)
                    elif kind == "source" and item == q:
                        row[i] += 1
                    elif kind == "sink" and item == q:
                        row[i] -= 1
                if row.any():
                    rows.append(row)
                    rhs.append(0)
        for sym in self.automata[0].alphabet:
            row = np.zeros(self.size)
            for i, (kind, side, item) in enumerate(self.columns):
                if kind == "edge" and item[1] == sym:
                    row[i] = 1 if side == 0 else -1
            rows.append(row)
            rhs.append(0)
        return np.array(rows), np.array(rhs, dtype=float)


@dataclass
class _Node:
    lower: np.ndarray
    upper: np.ndarray  # np.inf where unconstrained
    cuts: list[np.ndarray]  # rows r with r @ x >= 1


TOLERANCE = 1e-6
DEFAULT_MAX_NODES = 20_000
DEFAULT_FLOW_CEILING = 10**6


class _Solver:
    def __init__(self, a1: Nfa, a2: Nfa, flow_bound: int):
        self.system = FlowSystem((a1, a2))
        self.a_eq, self.b_eq = self.system.equalities()
        self.flow_bound = flow_bound
        self.cost = np.array([1.0 if c[0] == "edge" else 0.0 for c in self.system.columns])
        self.bound_hit = False

    def relax(self, node: _Node, capped: bool):
        upper = node.upper.copy()
        if capped:
            upper = np.minimum(upper, self.flow_bound)
        if np.any(node.lower > upper):
            return None
        a_ub = b_ub = None
        if node.cuts:
            a_ub = -np.array(node.cuts)
            b_ub = -np.ones(len(node.cuts))
        bounds = [(lo, None if math.isinf(hi) else hi) for lo, hi in zip(node.lower, upper)]
        res = linprog(
            self.cost, A_ub=a_ub, b_ub=b_ub, A_eq=self.a_eq, b_eq=self.b_eq,
            bounds=bounds, method="highs",
        )
        if res.status == 2:
            return None
        if res.status != 0:
            raise RuntimeError(f"LP solver failed: {res.message}")
        return res.x

    def solve_node(self, node: _Node):
        """LP point for ``node`` or None when the node can be dropped."""
        free = self.relax(node, capped=False)
        if free is None:
            return None
        if np.all(free <= self.flow_bound + TOLERANCE):
            return free
        capped = self.relax(node, capped=True)
        if capped is None:
            self.bound_hit = True
        return capped

    def detached_edges(self, x: np.ndarray, side: int) -> tuple[set[int], list[int]]:
        """States reachable from the used source, and positive edges outside them."""
        reached: set[int] = set()
        for i in self.system.side_columns(side):
            kind, _, item = self.system.columns[i]
            if kind == "source" and x[i] > 0.5:
                reached.add(item)
        support = [
            i for i in self.system.side_columns(side)
            if self.system.columns[i][0] == "edge" and x[i] > 0.5
        ]
        grew = True
        while grew:
            grew = False
            for i in support:
                src, _, dst = self.system.columns[i][2]
                if src in reached and dst not in reached:
                    reached.add(dst)
                    grew = True
        stray = [i for i in support if self.system.columns[i][2][0] not in reached]
        return reached, stray

    def connectivity_cut(self, side: int, reached: set[int]) -> np.ndarray:
        """Row demanding flow into the unreached states (or a source among them)."""
        row = np.zeros(self.system.size)
        for i in self.system.side_columns(side):
            kind, _, item = self.system.columns[i]
            if kind == "edge" and item[0] in reached and item[2] not in reached:
                row[i] = 1
            elif kind == "source" and item not in reached:
                row[i] = 1
        return row

    def children(self, node: _Node, x: np.ndarray) -> list[_Node] | None:
        """Branches for ``x``; None when ``x`` is already a valid solution."""
        frac = np.abs(x - np.round(x))
        j = int(np.argmax(frac))
        if frac[j] > TOLERANCE:
            down = _Node(node.lower.copy(), node.upper.copy(), node.cuts)
            down.upper[j] = math.floor(x[j])
            up = _Node(node.lower.copy(), node.upper.copy(), node.cuts)
            up.lower[j] = math.ceil(x[j])
            return [down, up]
        for side in (0, 1):
            reached, stray = self.detached_edges(x, side)
            if not stray:
                continue
            # either some stray edge is unused, or all are and the
            # component holding them is fed from the source
            out = []
            lower = node.lower.copy()
            for i in stray:
                child = _Node(lower.copy(), node.upper.copy(), node.cuts)
                child.upper[i] = 0
                out.append(child)
                lower[i] = max(lower[i], 1)
            cut = self.connectivity_cut(side, reached)
            out.append(_Node(lower, node.upper.copy(), node.cuts + [cut]))
            return out
        return None

    def witness(self, x: np.ndarray) -> ParikhVector:
        alphabet = self.system.automata[0].alphabet
        counts = dict.fromkeys(alphabet, 0)
        for i in self.system.side_columns(0):
            kind, _, item = self.system.columns[i]
            if kind == "edge":
                counts[item[1]] += int(round(x[i]))
        return tuple(counts[sym] for sym in alphabet)


def default_flow_bound(a1: Nfa, a2: Nfa, ceiling: int = DEFAULT_FLOW_CEILING) -> int:
    exponent = len(a1.transitions) + len(a2.transitions)
    return ceiling if exponent >= ceiling.bit_length() else min(2**exponent, ceiling)


def parikh_intersection_empty(
    a1: Nfa,
    a2: Nfa,
    flow_bound: int | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> IntersectionVerdict:
    """Do the Parikh images of ``a1`` and ``a2`` intersect?

    ``Empty`` is only returned when no branch was cut off by ``flow_bound``
    and the node limit was not reached; otherwise the answer is ``Unknown``.
    Witness vectors use ``a1.alphabet`` order.
    """
    if set(a1.alphabet) != set(a2.alphabet):
        raise AutomatonError(f"alphabet mismatch: {a1.alphabet} vs {a2.alphabet}")
    if a2.alphabet != a1.alphabet:
        a2 = Nfa(a1.alphabet, a2.state_count, a2.initial, a2.accepting, a2.transitions)
    if flow_bound is None:
        flow_bound = default_flow_bound(a1, a2)
    if not a1.initial or not a1.accepting or not a2.initial or not a2.accepting:
        return Empty()

    solver = _Solver(a1, a2, flow_bound)
    size = solver.system.size
    stack = [_Node(np.zeros(size), np.full(size, np.inf), [])]
    explored = 0
    while stack:
        if explored >= max_nodes:
            return Unknown(f"node limit {max_nodes} reached")
        explored += 1
        node = stack.pop()
        x = solver.solve_node(node)
        if x is None:
            continue
        branches = solver.children(node, x)
        if branches is None:
            vector = solver.witness(x)
            if not (parikh_member(vector, a1) and parikh_member(vector, a2)):
                raise AssertionError(f"flow witness {vector} fails validation")
            return NonEmpty(vector)
        stack.extend(reversed(branches))
    if solver.bound_hit:
        return Unknown(f"flow bound {flow_bound} cut off part of the search")
    return Empty()
