import pytest
from hypothesis import given
from hypothesis import strategies as st

from strongcyclic.words import (
    GAMMA_GEN,
    MissingImage,
    NonCyclicGenerator,
    Word,
    WordSyntaxError,
    alpha,
    exponent_sum,
    format_word,
    free_reduce,
    gamma,
    parse_word,
    substitute,
    theta_shift,
    x,
)

from .oracles import expand_substitute, letter_reduce
from .strategies import any_generators, raw_syllables, x_words

a1, a2, g = alpha(1), alpha(2), GAMMA_GEN


def test_inverse_cancellation():
    assert free_reduce([(a1, 1), (a1, -1)]) == Word()


def test_syllable_merge():
    assert free_reduce([(a1, 2), (a1, 3), (g, 1)]).syllables == ((a1, 5), (g, 1))


def test_nested_cancellation():
    raw = [(a2, 1), (g, 1), (g, -1), (a2, -1), (a1, 4)]
    assert letter_reduce(raw) == ((a1, 4),)
    assert free_reduce(raw).syllables == ((a1, 4),)


def test_zero_exponent_is_absorbed():
    assert free_reduce([(a1, 0), (g, 2), (a1, 0), (g, 1)]).syllables == ((g, 3),)


def test_word_rejects_unreduced_syllables():
    with pytest.raises(ValueError):
        Word(((a1, 1), (a1, 2)))
    with pytest.raises(ValueError):
        Word(((a1, 0),))


@given(raw_syllables(any_generators))
def test_free_reduce_matches_letter_oracle(raw):
    w = free_reduce(raw)
    assert w.syllables == letter_reduce(raw)
    assert free_reduce(w.syllables) == w


@given(raw_syllables(any_generators), any_generators)
def test_exponent_sum_is_reduction_invariant(raw, gen):
    assert exponent_sum(free_reduce(raw), gen) == sum(e for k, e in raw if k == gen)


@pytest.mark.parametrize("r", [1, 2, 7])
def test_exponent_sum_examples(r):
    w = Word.of((a2, 1), (a1, -r), (g, 1), (a2, -1), (g, -1))
    assert exponent_sum(w, a1) == -r
    assert exponent_sum(w, g) == 0
    assert exponent_sum(Word(), a1) == 0
    w2 = Word.of((a1, 1), (g, 1), (a2, 5), (a1, -1), (g, -1))
    assert exponent_sum(w2, g) == 0
    assert exponent_sum(w2, a2) == 5


def test_substitute_examples():
    images = {a1: Word.of((a1, 1), (g, 2))}
    assert substitute(Word.of((a1, 1)), images) == Word.of((a1, 1), (g, 2))
    assert substitute(Word.of((a1, -1)), images) == Word.of((g, -2), (a1, -1))
    images = {a1: Word.of((a1, 1), (g, 1)), g: Word.of((g, 1))}
    w = Word.of((a1, 1), (g, 1), (a1, -1))
    assert expand_substitute(w, images) == Word.of((a1, 1), (g, 1), (a1, -1))
    assert substitute(w, images) == Word.of((a1, 1), (g, 1), (a1, -1))


def test_substitute_missing_image():
    with pytest.raises(MissingImage) as exc:
        substitute(Word.of((a1, 1), (g, 1)), {a1: Word.of((a1, 1))})
    assert exc.value.generator == g


@given(raw_syllables(any_generators, max_len=20, max_exp=6), st.data())
def test_substitute_matches_expansion(raw, data):
    w = free_reduce(raw)
    images = {gen: data.draw(raw_syllables(any_generators, 5, 3).map(free_reduce)) for gen in w.generators()}
    assert substitute(w, images) == expand_substitute(w, images)


@given(raw_syllables(any_generators))
def test_identity_substitution(raw):
    w = free_reduce(raw)
    ident = {gen: Word.of((gen, 1)) for gen in w.generators()}
    assert substitute(substitute(w, ident), ident) == w


def test_substitute_is_homomorphic_on_huge_exponents():
    w = Word.of((a1, 10**6))
    out = substitute(w, {a1: Word.of((a1, 3))})
    assert out.syllables == ((a1, 3 * 10**6),)


def test_theta_shift_example():
    w = Word.of((x(2, 1), 1), (x(1, 1), -2), (x(2, 2), -1))
    assert theta_shift(w, 1, 2) == Word.of((x(2, 2), 1), (x(1, 2), -2), (x(2, 1), -1))
    assert theta_shift(w, 0, 2) == w
    assert theta_shift(w, 2, 2) == w


def test_theta_shift_rejects_knot_letters():
    with pytest.raises(NonCyclicGenerator):
        theta_shift(Word.of((a1, 1)), 1, 3)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), x_words(3, n))), st.integers(-20, 20), st.integers(-20, 20))
def test_theta_shift_composes(nw, a, b):
    n, w = nw
    assert theta_shift(theta_shift(w, a, n), b, n) == theta_shift(w, a + b, n)
    assert theta_shift(w, n, n) == w


def test_generator_order():
    assert alpha(1) < alpha(2) < gamma() < x(1, 1) < x(1, 2) < x(2, 1)
    assert sorted([x(1, 1), gamma(), alpha(3)]) == [alpha(3), gamma(), x(1, 1)]


def test_display_syntax():
    w = Word.of((a2, 1), (a1, -2), (g, 1), (a2, -1), (g, -1))
    assert format_word(w) == "a2 a1^-2 g a2^-1 g^-1"
    assert str(Word.of((x(1, 2), 3))) == "x1.2^3"
    assert format_word(Word()) == ""


@given(raw_syllables(any_generators).map(free_reduce))
def test_parse_format_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_parse_errors_carry_offset():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("a1 g b2")
    assert exc.value.offset == 5
    with pytest.raises(WordSyntaxError):
        parse_word("a0")
    with pytest.raises(WordSyntaxError):
        parse_word("x1.0")


def test_word_group_operations():
    w = Word.of((a1, 1), (g, 2))
    assert w * ~w == Word()
    assert (w ** 3) * (w ** -3) == Word()
    assert len(w ** 3) == 9
    assert list(Word.of((a1, -2)).letters()) == [(a1, -1), (a1, -1)]
