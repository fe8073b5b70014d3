"""Fixed example automata and a seeded random corpus of small NFAs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .automata import Nfa, parse_automaton

AB_STAR_TEXT = """\
# (ab)*
alphabet a b
state q0 initial accepting
state q1
trans q0 a q1
trans q1 b q0
"""

A_STAR_B_STAR_TEXT = """\
# a*b*
alphabet a b
state p initial accepting
state r accepting
trans p a p
trans p b r
trans r b r
"""

ALL_WORDS_TEXT = """\
# (a+b)*
alphabet a b
state q initial accepting
trans q a q
trans q b q
"""

C_A_C_B_C_TEXT = """\
# c*ac*bc*
alphabet a b c
state before initial
state middle
state after accepting
trans before c before
trans before a middle
trans middle c middle
trans middle b after
trans after c after
"""

ENDS_WITH_A_TEXT = """\
# (a+b)*a
alphabet a b
state any initial
state last accepting
trans any a any
trans any b any
trans any a last
"""

# Every maximal block of equal letters has odd length, except possibly the
# last one.  Two copies of the block automaton (starting with a or with b)
# share the free tail states.
ODD_BLOCKS_TEXT = """\
# ((a(aa)*b(bb)*)* + (b(bb)*a(aa)*)*)(a* + b*)
alphabet a b
state x0 initial accepting
state xa1
state xa2
state xb1 accepting
state xb2
state y0 initial accepting
state yb1
state yb2
state ya1 accepting
state ya2
state tail_a accepting
state tail_b accepting
trans x0 a xa1
trans xa1 a xa2
trans xa2 a xa1
trans xa1 b xb1
trans xb1 b xb2
trans xb2 b xb1
trans xb1 a xa1
trans y0 b yb1
trans yb1 b yb2
trans yb2 b yb1
trans yb1 a ya1
trans ya1 a ya2
trans ya2 a ya1
trans ya1 b yb1
trans x0 a tail_a
trans x0 b tail_b
trans xb1 a tail_a
trans xb1 b tail_b
trans y0 a tail_a
trans y0 b tail_b
trans ya1 a tail_a
trans ya1 b tail_b
trans tail_a a tail_a
trans tail_b b tail_b
"""


def ab_star() -> Nfa:
    return parse_automaton(AB_STAR_TEXT)


def a_star_b_star() -> Nfa:
    return parse_automaton(A_STAR_B_STAR_TEXT)


def all_words() -> Nfa:
    return parse_automaton(ALL_WORDS_TEXT)


def c_a_c_b_c() -> Nfa:
    return parse_automaton(C_A_C_B_C_TEXT)


def ends_with_a() -> Nfa:
    return parse_automaton(ENDS_WITH_A_TEXT)


def odd_blocks() -> Nfa:
    return parse_automaton(ODD_BLOCKS_TEXT)


def single_word(word: str, alphabet: tuple[str, ...] = ("a", "b")) -> Nfa:
    """Automaton accepting exactly ``word``."""
    transitions = {(i, sym, i + 1) for i, sym in enumerate(word)}
    return Nfa.build(alphabet, len(word) + 1, {0}, {len(word)}, transitions)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    nfa: Nfa


def random_nfa(
    rng: random.Random,
    max_states: int = 3,
    alphabet: tuple[str, ...] = ("a", "b"),
    density: float = 0.35,
) -> Nfa:
    states = rng.randint(1, max_states)
    transitions = {
        (p, sym, q)
        for p in range(states)
        for sym in alphabet
        for q in range(states)
        if rng.random() < density
    }
    initial = {q for q in range(states) if rng.random() < 0.3} or {rng.randrange(states)}
    accepting = {q for q in range(states) if rng.random() < 0.45}
    return Nfa.build(alphabet, states, initial, accepting, transitions)


def random_corpus(size: int = 50, seed: int = 0, max_states: int = 3) -> list[CorpusEntry]:
    """``size`` random NFAs over {a, b}; the same seed gives the same corpus."""
    rng = random.Random(seed)
    return [CorpusEntry(f"rnd{seed}-{i:03d}", random_nfa(rng, max_states)) for i in range(size)]
