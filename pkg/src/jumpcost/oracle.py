"""Brute-force ground truth for the four jump costs.

Everything here enumerates: jump sequences as permutations, accepted
rearrangements as distinct permutations of the input.  It is slow on
purpose and serves as the reference the constructions are tested against.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .automata import Nfa, accepts

DEFAULT_ENUMERATION_LIMIT = 9

INF = math.inf
CostValue = float  # an int-valued cost, or math.inf


class Semantics(str, enum.Enum):
    ABS = "abs"
    REV = "rev"
    HAM = "ham"
    MAX = "max"

    @classmethod
    def parse(cls, text: str) -> "Semantics":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown semantics {text!r}; expected abs, rev, ham or max") from None


class EnumerationLimitError(ValueError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"word length {n} exceeds the enumeration limit {limit}")


def format_cost(cost: CostValue) -> str:
    return "inf" if cost == INF else str(int(cost))


JumpSequence = tuple[int, ...]


def validate_jump_sequence(js: Sequence[int]) -> None:
    n = len(js) - 2
    if n < 0 or js[0] != 0 or js[-1] != n + 1:
        raise ValueError(f"{tuple(js)} must start at 0 and end at n+1")
    if sorted(js[1:-1]) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(js)} middle is not a permutation of 1..{n}")


def enumerate_jump_sequences(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[JumpSequence]:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise EnumerationLimitError(n, limit)
    for middle in itertools.permutations(range(1, n + 1)):
        yield (0, *middle, n + 1)


def apply_jump(word: str, js: Sequence[int]) -> str:
    if len(js) != len(word) + 2:
        raise ValueError(f"jump sequence of length {len(js)} does not fit a word of length {len(word)}")
    return "".join(word[p - 1] for p in js[1:-1])


def abs_cost(js: Sequence[int]) -> int:
    return sum(abs(b - a) - 1 for a, b in zip(js, js[1:]))


def turning_indices(js: Sequence[int]) -> set[int]:
    return {
        i
        for i in range(1, len(js) - 1)
        if (js[i - 1] < js[i] > js[i + 1]) or (js[i - 1] > js[i] < js[i + 1])
    }


def rev_cost(js: Sequence[int]) -> int:
    return len(turning_indices(js))


def max_cost(js: Sequence[int]) -> int:
    return max((abs(b - a) - 1 for a, b in zip(js, js[1:])), default=0)


def hamming_distance(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError("words differ in length")
    if Counter(x) != Counter(y):
        raise ValueError("words are not permutations of each other")
    return sum(a != b for a, b in zip(x, y))


@dataclass(frozen=True)
class Sweep:
    right: bool
    start: int  # index into the jump sequence
    positions: tuple[int, ...]

    @property
    def kind(self) -> str:
        return "Right" if self.right else "Left"

    @property
    def end(self) -> int:
        return self.start + len(self.positions) - 1


def sweeps(js: Sequence[int]) -> list[Sweep]:
    """Split at turning indices into maximal monotone infixes."""
    turns = sorted(turning_indices(js))
    out: list[Sweep] = []
    start = 0
    for stop in [*turns, len(js) - 1]:
        block = tuple(js[start : stop + 1])
        if len(block) > 1:
            right = block[1] > block[0]
        else:
            # a single-cell sweep continues in the direction of the step into it
            right = js[start] > js[start - 1] if start > 0 else True
        out.append(Sweep(right, start, block))
        start = stop + 1
    return out


def sweep_range(js: Sequence[int], sweep: Sweep) -> range:
    if sweep.right:
        low = js[sweep.start] if sweep.start == 0 else js[sweep.start - 1]
        return range(low, js[sweep.end] + 1)
    return range(js[sweep.end], js[sweep.start - 1] + 1)


def simultaneous_sweeps(js: Sequence[int], i: int) -> int:
    """Number of sweeps whose range covers tape cell ``i``."""
    return sum(i in sweep_range(js, sw) for sw in sweeps(js))


def crossings(js: Sequence[int], m: int) -> int:
    n = len(js) - 2
    if not 0 <= m <= n:
        raise ValueError(f"cut {m} outside 0..{n}")
    return sum((a <= m) != (b <= m) for a, b in zip(js, js[1:]))


SEQUENCE_COST = {Semantics.ABS: abs_cost, Semantics.REV: rev_cost, Semantics.MAX: max_cost}


@lru_cache(maxsize=64)
def _sequences_by_cost(n: int, sem: Semantics) -> tuple[tuple[int, tuple[int, ...]], ...]:
    cost = SEQUENCE_COST[sem]
    ranked = [(cost(js), js[1:-1]) for js in enumerate_jump_sequences(n, limit=n)]
    ranked.sort(key=lambda item: item[0])
    return tuple(ranked)


def distinct_permutations(word: str) -> Iterator[str]:
    counts = Counter(word)
    letters = sorted(counts)
    n = len(word)
    buf: list[str] = []

    def rec() -> Iterator[str]:
        if len(buf) == n:
            yield "".join(buf)
            return
        for ch in letters:
            if counts[ch]:
                counts[ch] -= 1
                buf.append(ch)
                yield from rec()
                buf.pop()
                counts[ch] += 1

    return rec()


def oracle_cost(
    aut: Nfa, word: str, sem: Semantics, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> CostValue:
    aut.check_word(word)
    sem = Semantics(sem)
    n = len(word)
    if n > limit:
        raise EnumerationLimitError(n, limit)
    accepted_perms = [u for u in distinct_permutations(word) if accepts(aut, u)]
    if not accepted_perms:
        return INF
    if sem is Semantics.HAM:
        return min(sum(a != b for a, b in zip(word, u)) for u in accepted_perms)
    accepted = set(accepted_perms)
    for cost, middle in _sequences_by_cost(n, sem):
        if "".join(word[p - 1] for p in middle) in accepted:
            return cost
    raise AssertionError("an accepted permutation is reachable by some jump sequence")
