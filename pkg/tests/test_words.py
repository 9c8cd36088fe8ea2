import pytest
from hypothesis import given, strategies as st

from fatflip.words import (FreeAutomorphism, WordError, abelianized_matrix,
                           commutator, concat, gen, inverse, parse_word,
                           reduce_word, surface_generators, word_str)


rank2_words = st.lists(
    st.tuples(st.sampled_from(["a", "b"]), st.sampled_from([1, -1])),
    max_size=16).map(reduce_word)


class TestReduce:
    def test_cancellation(self):
        assert reduce_word([("a", 1), ("a", -1)]) == ()
        assert parse_word("b a a' b") == (("b", 1), ("b", 1))

    def test_idempotent(self):
        w = parse_word("a2 b2' a2' b1 a1 b1' a1'")
        assert reduce_word(w) == w

    @given(rank2_words)
    def test_reduced_has_no_adjacent_inverses(self, w):
        for (n1, s1), (n2, s2) in zip(w, w[1:]):
            assert not (n1 == n2 and s1 == -s2)

    @given(rank2_words)
    def test_inverse_cancels(self, w):
        assert concat(w, inverse(w)) == ()

    def test_unknown_generator(self):
        with pytest.raises(WordError):
            parse_word("a x")


class TestSyntax:
    def test_roundtrip(self):
        text = "a2 b2' a2' b1 a1 b1' a1'"
        assert word_str(parse_word(text)) == text

    def test_empty_word(self):
        assert parse_word("") == ()
        assert word_str(()) == "1"

    def test_commutator_convention(self):
        # [x, y] = x y x' y'
        assert word_str(commutator(gen("b1"), gen("a1"))) == "b1 a1 b1' a1'"


class TestAutomorphism:
    def test_identity(self):
        phi = FreeAutomorphism.identity(2)
        w = parse_word("a2 b1' a1")
        assert phi(w) == w

    def test_substitution(self):
        phi = FreeAutomorphism({"a1": parse_word("a1 b1"),
                                "b1": parse_word("b1")})
        assert phi(parse_word("a1 a1")) == parse_word("a1 b1 a1 b1")
        assert phi(parse_word("a1'")) == parse_word("b1' a1'")

    def test_missing_image(self):
        phi = FreeAutomorphism({"a1": gen("a1")})
        with pytest.raises(WordError):
            phi(parse_word("b1"))

    def test_from_text(self):
        phi = FreeAutomorphism.from_text(
            "# comment\na1 -> a1 b1\nb1 -> b1\n")
        assert phi(gen("a1")) == parse_word("a1 b1")

    def test_abelianized_matrix(self):
        phi = FreeAutomorphism({"a1": parse_word("a1 b1"),
                                "b1": parse_word("b1")})
        assert abelianized_matrix(phi, 1) == [[1, 0], [1, 1]]

    def test_surface_generators(self):
        assert surface_generators(2) == ["a1", "b1", "a2", "b2"]
