import random

import pytest

from twistscl.words import Word, commutator, free_reduce, generators, multiply, parse_word


def naive_reduce(letters):
    """Repeated-scan oracle: rescan from the start after every cancellation."""
    out = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i][0] == out[i + 1][0] and out[i][1] == -out[i + 1][1]:
                del out[i : i + 2]
                changed = True
                break
    return tuple(out)


def random_letters(rng, n, names=("x", "y", "z")):
    return [(rng.choice(names), rng.choice((1, -1))) for _ in range(n)]


def test_forced_cancellation():
    assert Word([("x", 1), ("x", -1)]) == Word.identity()


def test_interior_cancellation():
    w = Word([("x", 1), ("y", 1), ("y", -1), ("x", 1)])
    assert w == parse_word("x x")


def test_reduce_matches_naive_oracle():
    rng = random.Random(1729)
    for _ in range(1000):
        letters = random_letters(rng, 40)
        assert free_reduce(letters) == naive_reduce(letters)


def test_reduce_idempotent_and_length_nonincreasing():
    rng = random.Random(7)
    for _ in range(1000):
        letters = random_letters(rng, 40)
        once = free_reduce(letters)
        assert free_reduce(once) == once
        assert len(once) <= len(letters)


def test_word_times_inverse_is_identity():
    rng = random.Random(99)
    for _ in range(200):
        w = Word(random_letters(rng, 25))
        assert (w * ~w).is_identity()
        assert (Word.identity() * w) == w


def test_commutator_of_equal_words_is_trivial():
    x, = generators("x")
    assert commutator(x, x).is_identity()


def test_commutator_spelling():
    x, y = generators("x", "y")
    assert commutator(x, y) == parse_word("x y x^-1 y^-1")


def test_negative_power_reverses_and_negates():
    w = parse_word("x y")
    assert w ** -2 == parse_word("y^-1 x^-1 y^-1 x^-1")
    assert w ** 0 == Word.identity()


def test_conjugate():
    w, g = parse_word("x"), parse_word("y z")
    assert w.conjugate(g) == parse_word("y z x z^-1 y^-1")


def test_parse_round_trip():
    rng = random.Random(5)
    for _ in range(100):
        w = Word(random_letters(rng, 15))
        assert parse_word(str(w)) == w
    assert parse_word("1") == Word.identity()
    assert str(Word.identity()) == "1"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("x^0")
    with pytest.raises(ValueError):
        parse_word("^2")
    with pytest.raises(ValueError):
        parse_word("x$y")


def test_words_are_immutable_and_hashable():
    w = parse_word("x y")
    with pytest.raises(AttributeError):
        w.letters = ()
    assert len({w, parse_word("x y"), parse_word("y x")}) == 2


def test_multiply_varargs():
    x, y = generators("x", "y")
    assert multiply(x, y, ~x) == parse_word("x y x^-1")
    assert multiply() == Word.identity()
