import pytest

from jumpcost import languages
from jumpcost.automata import words_upto
from jumpcost.boundedness import (
    Bounded,
    Unbounded,
    Unknown,
    jlang_bounded_exact,
    jlang_bounded_search,
    smallest_word_with_vector,
    univ_bounded,
)
from jumpcost.oracle import INF, Semantics, oracle_cost
from jumpcost.parikh import jumping_member


def brute_force_bounded(aut, sem, k, max_len):
    """First word up to ``max_len`` of the jumping language costing more than k."""
    for word in words_upto(aut.alphabet, max_len):
        if jumping_member(aut, word) and oracle_cost(aut, word, sem) > k:
            return word
    return None


class TestUniversal:
    def test_two_reversals_suffice(self, asb):
        assert univ_bounded(asb, Semantics.REV, 2) == Bounded()

    def test_zero_reversals(self, asb):
        assert univ_bounded(asb, Semantics.REV, 0) == Unbounded("ba", 2)

    def test_words_outside_the_jumping_language(self, ab2):
        assert univ_bounded(ab2, Semantics.ABS, 4) == Unbounded("a", INF)

    def test_everything_free(self):
        for sem in Semantics:
            assert univ_bounded(languages.all_words(), sem, 0) == Bounded()

    def test_budget(self, asb):
        assert isinstance(univ_bounded(asb, Semantics.REV, 2, max_macro_states=1), Unknown)


class TestExact:
    def test_a_star_b_star(self, asb):
        assert jlang_bounded_exact(asb, Semantics.REV, 2) == Bounded()

    def test_ab_star(self, ab2):
        assert jlang_bounded_exact(ab2, Semantics.REV, 2) == Unbounded("bbaa", 4)

    def test_all_words(self):
        assert jlang_bounded_exact(languages.all_words(), Semantics.MAX, 0) == Bounded()

    def test_ham_on_a_star_b_star(self, asb):
        assert jlang_bounded_exact(asb, Semantics.HAM, 1) == Unbounded("ba", 2)

    def test_budgets(self, ab2):
        assert isinstance(jlang_bounded_exact(ab2, Semantics.REV, 2, state_budget=1), Unknown)
        assert isinstance(jlang_bounded_exact(ab2, Semantics.REV, 2, complement_budget=1), Unknown)

    def test_witness_vector_to_word(self, ab2):
        assert smallest_word_with_vector(ab2, (2, 2)) == "abab"
        assert smallest_word_with_vector(ab2, (2, 1)) is None


class TestSearch:
    def test_ab_star(self, ab2):
        assert jlang_bounded_search(ab2, Semantics.REV, 2, 6) == Unbounded("bbaa", 4)

    def test_a_star_b_star_ham(self, asb):
        verdict = jlang_bounded_search(asb, Semantics.HAM, 2, 6)
        assert verdict == Unbounded("bbaa", 4)

    def test_no_witness(self, asb):
        assert jlang_bounded_search(asb, Semantics.REV, 2, 8) == Unknown("8")

    def test_budget(self, ab2):
        verdict = jlang_bounded_search(ab2, Semantics.ABS, 2, 6, max_states=1)
        assert isinstance(verdict, Unknown)

    def test_describe(self):
        assert Bounded().describe() == "bounded"
        assert Unbounded("bbaa", 4).describe() == "unbounded witness=bbaa cost=4"
        assert Unbounded("a", INF).describe() == "unbounded witness=a cost=inf"
        assert Unknown("8").describe() == "unknown up to 8"


class TestCorpusConsistency:
    @pytest.mark.parametrize("sem, k", [(Semantics.REV, 0), (Semantics.REV, 2), (Semantics.HAM, 1), (Semantics.ABS, 2)])
    def test_modes_agree(self, corpus, sem, k):
        for entry in corpus[:25]:
            aut = entry.nfa
            search = jlang_bounded_search(aut, sem, k, 5)
            exact = jlang_bounded_exact(aut, sem, k)
            universal = univ_bounded(aut, sem, k)
            expected = brute_force_bounded(aut, sem, k, 5)
            if expected is None:
                assert isinstance(search, Unknown)
            else:
                assert search == Unbounded(expected, oracle_cost(aut, expected, sem))
            if isinstance(search, Unbounded):
                assert isinstance(exact, Unbounded)
            if isinstance(exact, Bounded):
                assert expected is None
            if isinstance(universal, Bounded):
                assert not isinstance(exact, Unbounded)
            for verdict in (search, exact):
                if isinstance(verdict, Unbounded):
                    assert jumping_member(aut, verdict.witness)
                    assert verdict.cost > k
