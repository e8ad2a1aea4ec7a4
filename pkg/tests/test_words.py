import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from houghton import (
    TAU,
    InputError,
    Letter,
    ParseError,
    RayOutOfRange,
    SameRay,
    TauOutsideH2,
    Word,
    complexity,
    compose,
    compose_all,
    evaluate,
    format_word,
    free_reduce,
    generating_set,
    generator,
    identity,
    inverse,
    invert_word,
    letter_element,
    parse,
    random_element,
    random_word,
    transposition,
)


def slow_evaluate(w):
    return compose_all([letter_element(a, w.n) for a in w], n=w.n)


def test_letter_inverse_is_swapped_indices():
    for i in range(3):
        for j in range(3):
            if i != j:
                a = Letter.g(i, j)
                assert compose(letter_element(a, 3), letter_element(a.inverse(), 3)).is_identity()
                assert letter_element(a.inverse(), 3) == inverse(generator(3, i, j))
    assert TAU.inverse() == TAU


def test_letter_validation():
    with pytest.raises(SameRay):
        Letter.g(1, 1)
    with pytest.raises(TauOutsideH2):
        Word(3, (TAU,))
    with pytest.raises(RayOutOfRange):
        Word(3, (Letter(0, 3),))


def test_generating_sets():
    assert len(generating_set("gij", 3).letters) == 6
    assert len(generating_set("gi", 4).letters) == 8
    assert set(generating_set("h2", 2).letters) == {Letter(0, 1), Letter(1, 0), TAU}
    for name in ("gij", "gi"):
        gs = generating_set(name, 3)
        assert {a.inverse() for a in gs.letters} == set(gs.letters)
    with pytest.raises(InputError):
        generating_set("h2", 3)
    with pytest.raises(InputError):
        generating_set("gi", 2)
    with pytest.raises(InputError):
        generating_set("nope", 3)


def test_parse_and_format():
    w = parse("g(0,1)^3 g(2, 1) g(0,1)^-2", 3)
    assert len(w) == 6
    assert w.letters[:3] == (Letter(0, 1),) * 3
    assert w.letters[-2:] == (Letter(1, 0),) * 2
    assert format_word(w) == "g(0,1)^3 g(2,1) g(1,0)^2"
    assert format_word(w, compact=False).count("g(0,1)") == 3
    assert parse(format_word(w), 3) == w
    assert parse("", 3) == Word(3)
    assert parse("t g(0,1) t^2", 2).letters == (TAU, Letter(0, 1), TAU, TAU)
    assert parse("g(0,1)g(1,0)", 3).letters == (Letter(0, 1), Letter(1, 0))


@pytest.mark.parametrize(
    "text, n, position",
    [
        ("g(0,1) g(0,", 3, 7),
        ("g(0,1)^0", 3, 0),
        ("g(1,1)", 3, 0),
        ("x", 3, 0),
        ("g(0,1)x", 3, 6),
    ],
)
def test_parse_errors_carry_positions(text, n, position):
    with pytest.raises(ParseError) as info:
        parse(text, n)
    assert info.value.position == position


def test_parse_validation_errors():
    with pytest.raises(TauOutsideH2):
        parse("g(0,1) t", 3)
    with pytest.raises(RayOutOfRange):
        parse("g(0,5)", 3)


def test_evaluate_examples():
    assert evaluate(Word(3)) == identity(3)
    assert evaluate(parse("g(0,1)", 3)) == generator(3, 0, 1)
    assert evaluate(parse("t", 2)) == transposition(2, (0, 1), (1, 1))
    assert evaluate(parse("g(0,1) g(1,0)", 3)).is_identity()


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 5), st.integers(0, 40), st.integers(0, 10**6))
def test_fast_evaluate_matches_products(n, length, seed):
    w = random_word(n, length, seed)
    assert evaluate(w) == slow_evaluate(w)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 30), st.integers(0, 10**6))
def test_h2_words(length, seed):
    w = random_word(2, length, seed)
    assert evaluate(w) == slow_evaluate(w)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 30), st.integers(0, 10**6))
def test_invert_and_reduce(length, seed):
    w = random_word(3, length, seed)
    assert compose(evaluate(w), evaluate(invert_word(w))).is_identity()
    r = free_reduce(w)
    assert evaluate(r) == evaluate(w)
    assert len(r) <= len(w)
    assert len(free_reduce(w + invert_word(w))) == 0


def test_word_concatenation_checks_rays():
    with pytest.raises(InputError):
        Word(3) + Word(4)


def test_random_generators_are_deterministic():
    assert random_word(3, 20, 7) == random_word(3, 20, 7)
    assert random_element(4, 50, "s") == random_element(4, 50, "s")


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 5), st.integers(0, 200), st.integers(0, 10**6))
def test_random_element_respects_budget(n, budget, seed):
    assert complexity(random_element(n, budget, seed)).P <= budget
