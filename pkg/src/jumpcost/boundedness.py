"""Is every word (of the jumping language, or of all of Sigma*) within cost k?"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from . import parikh
from .automata import (
    Nfa,
    NotUniversal,
    ResourceExceeded,
    ResourceExceededError,
    Universal,
    complement,
    implicit_member,
    is_universal,
    materialize,
    words_upto,
)
from .constructions import build, cost_via_construction
from .oracle import DEFAULT_ENUMERATION_LIMIT, CostValue, Semantics, format_cost, oracle_cost


@dataclass(frozen=True)
class Bounded:
    def describe(self) -> str:
        return "bounded"


@dataclass(frozen=True)
class Unbounded:
    witness: str
    cost: CostValue

    def describe(self) -> str:
        return f"unbounded witness={self.witness} cost={format_cost(self.cost)}"


@dataclass(frozen=True)
class Unknown:
    limit: str

    def describe(self) -> str:
        return f"unknown up to {self.limit}"


BoundednessVerdict = Union[Bounded, Unbounded, Unknown]


def verified_cost(aut: Nfa, word: str, sem: Semantics) -> CostValue:
    """Cost by brute force when the word is short enough, else by construction."""
    if len(word) <= DEFAULT_ENUMERATION_LIMIT:
        return oracle_cost(aut, word, sem)
    return cost_via_construction(aut, word, sem)


def _unbounded(aut: Nfa, word: str, sem: Semantics, k: int, jumping: bool) -> Unbounded:
    if jumping and not parikh.jumping_member(aut, word):
        raise AssertionError(f"witness {word!r} is not in the jumping language")
    cost = verified_cost(aut, word, sem)
    if not cost > k:
        raise AssertionError(f"witness {word!r} has cost {cost} <= {k}")
    return Unbounded(word, cost)


def univ_bounded(
    aut: Nfa, sem: Semantics, k: int, max_macro_states: int = 100_000
) -> BoundednessVerdict:
    """Does every word over the alphabet cost at most ``k``?"""
    sem = Semantics(sem)
    verdict = is_universal(build(aut, sem, k), max_macro_states)
    if isinstance(verdict, Universal):
        return Bounded()
    if isinstance(verdict, NotUniversal):
        return _unbounded(aut, verdict.witness, sem, k, jumping=False)
    return Unknown(str(verdict))


def smallest_word_with_vector(aut: Nfa, vector: tuple[int, ...]) -> str | None:
    """Lexicographically least accepted word with the given letter counts."""
    alphabet = aut.alphabet

    @lru_cache(maxsize=None)
    def finish(states: frozenset, remaining: tuple[int, ...]) -> str | None:
        if not any(remaining):
            return "" if not states.isdisjoint(aut.accepting) else None
        for i in sorted(range(len(alphabet)), key=lambda i: alphabet[i]):
            if remaining[i] == 0:
                continue
            nxt = frozenset(r for q in states for r in aut.successors(q, alphabet[i]))
            if not nxt:
                continue
            less = remaining[:i] + (remaining[i] - 1,) + remaining[i + 1 :]
            tail = finish(nxt, less)
            if tail is not None:
                return alphabet[i] + tail
        return None

    return finish(frozenset(aut.initial), tuple(vector))


def jlang_bounded_exact(
    aut: Nfa,
    sem: Semantics,
    k: int,
    state_budget: int = 20_000,
    complement_budget: int = 20_000,
    flow_bound: int | None = None,
    max_nodes: int = parikh.DEFAULT_MAX_NODES,
) -> BoundednessVerdict:
    """Decide whether every word of the jumping language costs at most ``k``.

    The bounded-cost automaton is expanded and complemented; the answer is
    yes iff no word of the complement is a rearrangement of a word of
    ``aut``.  Budget breaches give :class:`Unknown`.
    """
    sem = Semantics(sem)
    explicit = materialize(build(aut, sem, k), state_budget)
    if isinstance(explicit, ResourceExceeded):
        return Unknown(str(explicit))
    rejected = complement(explicit, complement_budget)
    if isinstance(rejected, ResourceExceeded):
        return Unknown(str(rejected))
    verdict = parikh.parikh_intersection_empty(rejected, aut, flow_bound, max_nodes)
    if isinstance(verdict, parikh.Empty):
        return Bounded()
    if isinstance(verdict, parikh.Unknown):
        return Unknown(verdict.reason)
    word = smallest_word_with_vector(rejected, verdict.witness)
    if word is None:
        raise AssertionError(f"no word realises vector {verdict.witness}")
    return _unbounded(aut, word, sem, k, jumping=True)


def jlang_bounded_search(
    aut: Nfa, sem: Semantics, k: int, max_len: int, max_states: int | None = None
) -> BoundednessVerdict:
    """Look for a word of the jumping language costing more than ``k``.

    Words are tried shortest first, then alphabetically.  Never answers
    :class:`Bounded`.
    """
    sem = Semantics(sem)
    bounded_cost = build(aut, sem, k)
    for word in words_upto(aut.alphabet, max_len):
        if not parikh.jumping_member(aut, word):
            continue
        try:
            within = implicit_member(bounded_cost, word, max_states)
        except ResourceExceededError as exc:
            return Unknown(f"{max_len} ({exc})")
        if not within:
            return _unbounded(aut, word, sem, k, jumping=True)
    return Unknown(str(max_len))
