import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumpcost import languages
from jumpcost.automata import (
    AutomatonError,
    Nfa,
    NotUniversal,
    ResourceExceeded,
    ResourceExceededError,
    Universal,
    accepts,
    as_implicit,
    complement,
    determinize,
    implicit_member,
    is_universal,
    language_upto,
    materialize,
    parse_automaton,
    serialize_automaton,
    words_upto,
)
from jumpcost.constructions import build_abs, build_ham, build_rev


@st.composite
def small_nfas(draw, max_states=3):
    n = draw(st.integers(1, max_states))
    states = st.integers(0, n - 1)
    transitions = draw(st.sets(st.tuples(states, st.sampled_from("ab"), states), max_size=3 * n * n))
    initial = draw(st.sets(states, min_size=1))
    accepting = draw(st.sets(states))
    return Nfa.build(("a", "b"), n, initial, accepting, transitions)


def brute_accepts(aut: Nfa, word: str) -> bool:
    """Try every state path of the right length."""
    for path in itertools.product(range(aut.state_count), repeat=len(word) + 1):
        if path[0] not in aut.initial or path[-1] not in aut.accepting:
            continue
        if all((path[i], word[i], path[i + 1]) in aut.transitions for i in range(len(word))):
            return True
    return False


class TestParsing:
    def test_states_follow_declaration_order(self, ab2):
        assert ab2.alphabet == ("a", "b")
        assert ab2.state_count == 2
        assert ab2.initial == {0} and ab2.accepting == {0}
        assert ab2.transitions == {(0, "a", 1), (1, "b", 0)}

    def test_flags_in_any_order_and_comments(self):
        aut = parse_automaton("# c\nalphabet x\nstate s accepting initial\n\ntrans s x s\n")
        assert aut.initial == aut.accepting == {0}

    @pytest.mark.parametrize(
        "text, line",
        [
            ("alphabet a\nstate p initial\ntrans p b p\n", 3),
            ("alphabet a\nstate p initial\ntrans p a r\n", 3),
            ("alphabet a\nalphabet b\n", 2),
            ("alphabet ab\n", 1),
            ("alphabet a\nstate p initial\nstate p\n", 3),
            ("alphabet a\nwhatever\n", 2),
            ("alphabet a\nstate p bogus\n", 2),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(AutomatonError) as info:
            parse_automaton(text)
        assert info.value.line == line

    def test_missing_alphabet(self):
        with pytest.raises(AutomatonError):
            parse_automaton("state p initial\n")

    def test_roundtrip(self, corpus):
        for entry in corpus[:20]:
            again = parse_automaton(serialize_automaton(entry.nfa))
            assert again.alphabet == entry.nfa.alphabet
            assert again.initial == entry.nfa.initial
            assert again.accepting == entry.nfa.accepting
            assert again.transitions == entry.nfa.transitions

    def test_serialization_is_deterministic(self, ab2):
        assert serialize_automaton(ab2) == serialize_automaton(parse_automaton(serialize_automaton(ab2)))


class TestAcceptance:
    @pytest.mark.parametrize("word, expected", [("", True), ("ab", True), ("abab", True), ("ba", False), ("aba", False)])
    def test_ab_star(self, ab2, word, expected):
        assert accepts(ab2, word) is expected

    def test_foreign_symbol(self, ab2):
        with pytest.raises(AutomatonError):
            accepts(ab2, "abc")
        with pytest.raises(AutomatonError):
            implicit_member(as_implicit(ab2), "c")

    def test_accepts_matches_path_search(self, corpus):
        for entry in corpus[:15]:
            for word in words_upto("ab", 4):
                assert accepts(entry.nfa, word) == brute_accepts(entry.nfa, word)

    def test_implicit_view_agrees_exhaustively(self, corpus):
        for entry in corpus:
            view = as_implicit(entry.nfa)
            for word in words_upto("ab", 6):
                assert accepts(entry.nfa, word) == implicit_member(view, word)

    @settings(max_examples=60, deadline=None)
    @given(small_nfas(), st.text(alphabet="ab", max_size=6))
    def test_implicit_view_agrees_on_random_automata(self, aut, word):
        assert accepts(aut, word) == implicit_member(as_implicit(aut), word)

    def test_membership_budget(self):
        aut = build_ham(languages.all_words(), 2)
        with pytest.raises(ResourceExceededError):
            implicit_member(aut, "abab", max_states=1)

    def test_constructions_on_the_running_example(self, ab2):
        assert implicit_member(build_abs(ab2, 2), "ababbaab")
        assert not implicit_member(build_abs(ab2, 1), "ababbaab")
        assert implicit_member(build_abs(ab2, 0), "abab")


def shortlex_first_rejected(aut, max_len):
    for word in words_upto(aut.alphabet, max_len):
        if not implicit_member(aut, word):
            return word
    return None


class TestUniversality:
    def test_two_reversals_cover_a_star_b_star(self, asb):
        assert is_universal(build_rev(asb, 2)) == Universal()

    def test_zero_reversals(self, asb):
        assert is_universal(build_rev(asb, 0)) == NotUniversal("ba")

    def test_odd_letter_count_is_never_reachable(self, ab2):
        assert is_universal(build_rev(ab2, 2)) == NotUniversal("a")

    def test_budget(self, ab2):
        assert isinstance(is_universal(build_rev(ab2, 2), 1), (NotUniversal, ResourceExceeded))
        assert is_universal(build_rev(languages.a_star_b_star(), 2), 1) == ResourceExceeded("macro-state", 1)

    def test_witness_is_shortlex_least(self, corpus):
        for entry in corpus:
            aut = as_implicit(entry.nfa)
            verdict = is_universal(aut)
            expected = shortlex_first_rejected(aut, 8)
            if expected is None:
                # no rejected word up to 8; on <= 3 states that means universal
                assert verdict == Universal()
            else:
                assert verdict == NotUniversal(expected)

    @settings(max_examples=80, deadline=None)
    @given(small_nfas())
    def test_never_universal_with_a_short_rejected_word(self, aut):
        view = as_implicit(aut)
        verdict = is_universal(view)
        rejected = shortlex_first_rejected(view, 8)
        if rejected is not None:
            assert verdict == NotUniversal(rejected)
        if isinstance(verdict, NotUniversal):
            assert not implicit_member(view, verdict.witness)


class TestMaterialize:
    def test_plain_nfa(self, ab2):
        explicit = materialize(as_implicit(ab2), 10)
        assert explicit.state_count == 2
        assert language_upto(explicit, 6) == language_upto(ab2, 6)

    def test_ham_construction(self, ab2):
        lazy = build_ham(ab2, 1)
        explicit = materialize(lazy, 10**4)
        for word in words_upto("ab", 6):
            assert accepts(explicit, word) == implicit_member(lazy, word)

    def test_budget(self, ab2):
        assert materialize(as_implicit(ab2), 1) == ResourceExceeded("state", 1)

    def test_preserves_language_on_corpus(self, corpus):
        for entry in corpus[:25]:
            lazy = build_rev(entry.nfa, 2)
            explicit = materialize(lazy, 10**4)
            assert language_upto(explicit, 6) == language_upto(lazy, 6)


class TestComplement:
    def test_determinize_keeps_language(self, corpus):
        for entry in corpus[:25]:
            dfa = determinize(entry.nfa)
            assert len(dfa.initial) == 1
            for q in range(dfa.state_count):
                for sym in dfa.alphabet:
                    assert len(dfa.successors(q, sym)) == 1
            assert language_upto(dfa, 6) == language_upto(entry.nfa, 6)

    def test_complement_flips_every_word(self, corpus):
        for entry in corpus[:25]:
            comp = complement(entry.nfa)
            for word in words_upto("ab", 6):
                assert accepts(comp, word) != accepts(entry.nfa, word)

    def test_budget(self, ab2):
        assert isinstance(determinize(ab2, 1), ResourceExceeded)


def test_words_upto_is_shortlex():
    words = list(words_upto("ab", 3))
    assert len(words) == 15
    assert words[:5] == ["", "a", "b", "aa", "ab"]
    assert words == sorted(words, key=lambda w: (len(w), w))
    assert len(list(words_upto("ab", 6))) == 127
