import random

import pytest

from twistscl.words import Word, commutator, generators, multiply, parse_word
from twistscl.commutators import (
    ExpansionNotFound,
    as_commutator,
    bavard_expand,
    culler_expand,
    expression,
    shuffle_expand,
    substitute,
    verify_expression,
)


def all_reduced_words(names, max_len):
    """Every freely reduced word of length <= max_len over the generators."""
    alphabet = [Word.generator(n, s) for n in names for s in (1, -1)]
    out = [Word.identity()]
    frontier = [Word.identity()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in alphabet:
                wa = w * a
                if len(wa) == len(w) + 1:
                    nxt.append(wa)
        out.extend(nxt)
        frontier = nxt
    return out


def random_word(rng, n, names=("x", "y")):
    return Word([(rng.choice(names), rng.choice((1, -1))) for _ in range(n)])


# ---------------------------------------------------------------------------
# verify_expression
# ---------------------------------------------------------------------------

def test_identity_certificate():
    x, y = generators("x", "y")
    expr = expression([(Word.identity(), x, y)], commutator(x, y))
    assert verify_expression(expr)


def test_wrong_certificate_rejected():
    x, y = generators("x", "y")
    expr = expression([(Word.identity(), x, y)], x)
    assert not verify_expression(expr)


def test_empty_product_is_identity():
    expr = expression([], Word.identity())
    assert verify_expression(expr)


def test_conjugated_factor():
    x, y, g = generators("x", "y", "g")
    target = commutator(x, y).conjugate(g)
    assert verify_expression(expression([(g, x, y)], target))


# ---------------------------------------------------------------------------
# as_commutator (the single-commutator decision procedure)
# ---------------------------------------------------------------------------

def test_as_commutator_positive_cases():
    x, y = generators("x", "y")
    for p, q in [(x, y), (parse_word("x y"), parse_word("y x^-1")),
                 (parse_word("x^2 y"), parse_word("y^-1 x y^2"))]:
        w = commutator(p, q)
        got = as_commutator(w)
        assert got is not None
        assert commutator(*got) == w


def test_as_commutator_conjugates():
    x, y = generators("x", "y")
    w = commutator(x, y).conjugate(parse_word("y x y"))
    got = as_commutator(w)
    assert got is not None and commutator(*got) == w


def test_as_commutator_rejects_noncommutators():
    x, y = generators("x", "y")
    assert as_commutator(x) is None
    assert as_commutator(parse_word("x y")) is None
    assert as_commutator(commutator(x, y) ** 2) is None  # genus 2, not 1
    assert as_commutator(parse_word("x^2 y x^-1 y^-1 x^-1")) is not None  # conjugate of [x,y]


def test_as_commutator_identity():
    got = as_commutator(Word.identity())
    assert got is not None and commutator(*got).is_identity()


# ---------------------------------------------------------------------------
# shuffle_expand
# ---------------------------------------------------------------------------

def test_shuffle_k1_telescopes():
    u, v = generators("u", "v")
    factors = shuffle_expand(u, v, 1)
    assert factors == [parse_word("u v u^-1"), u]
    assert multiply(*factors) == u * v


def test_shuffle_k2_example():
    x, y = generators("x", "y")
    factors = shuffle_expand(x, y, 2)
    assert factors == [parse_word("x y x^-1"), parse_word("x^2 y x^-2"), parse_word("x^2")]
    assert multiply(*factors) == (x * y) ** 2


def test_shuffle_exhaustive_small_words():
    words = all_reduced_words(("a", "b"), 3)
    for u in words:
        for v in words:
            for k in range(1, 5):
                factors = shuffle_expand(u, v, k)
                assert len(factors) == k + 1
                assert multiply(*factors) == (u * v) ** k


def test_shuffle_random_longer_words():
    rng = random.Random(42)
    for _ in range(50):
        u, v = random_word(rng, 6), random_word(rng, 6)
        factors = shuffle_expand(u, v, 5)
        assert multiply(*factors) == (u * v) ** 5


def test_shuffle_rejects_k0():
    u, v = generators("u", "v")
    with pytest.raises(ValueError):
        shuffle_expand(u, v, 0)


# ---------------------------------------------------------------------------
# culler_expand
# ---------------------------------------------------------------------------

def test_culler_k1_single_factor():
    u, v = generators("u", "v")
    expr = culler_expand(u, v, 1)
    assert expr.factor_count() == 1
    assert verify_expression(expr)


def test_culler_counts_and_certification_k_up_to_12():
    u, v = generators("u", "v")
    for k in range(1, 13):
        expr = culler_expand(u, v, k)
        assert expr.factor_count() == k // 2 + 1, k
        assert verify_expression(expr), k
        assert expr.target == commutator(u, v) ** k


def test_culler_on_multi_letter_words():
    rng = random.Random(3)
    for k in (2, 3, 5, 8):
        u, v = random_word(rng, 4), random_word(rng, 4)
        expr = culler_expand(u, v, k)
        assert expr.factor_count() == k // 2 + 1
        assert verify_expression(expr)


def test_culler_shared_alphabet_degenerate():
    x, = generators("x")
    expr = culler_expand(x, x, 3)  # [x,x] = 1; the identity still certifies
    assert verify_expression(expr)


def test_culler_rejects_k0():
    u, v = generators("u", "v")
    with pytest.raises(ValueError):
        culler_expand(u, v, 0)


def test_culler_beyond_table_raises():
    u, v = generators("u", "v")
    with pytest.raises(ExpansionNotFound):
        culler_expand(u, v, 101)


def test_substitution_preserves_identities():
    x, y = generators("x", "y")
    w = commutator(x, y) ** 3
    img = substitute(w, {"x": parse_word("a b"), "y": parse_word("b^-1 a")})
    assert img == commutator(parse_word("a b"), parse_word("b^-1 a")) ** 3


# ---------------------------------------------------------------------------
# bavard_expand
# ---------------------------------------------------------------------------

def _pairs(r):
    return [(Word.generator(f"u{i}"), Word.generator(f"v{i}")) for i in range(1, r + 1)]


def test_bavard_r1_reduces_to_culler():
    expr = bavard_expand(_pairs(1), 4)
    assert expr.factor_count() == 4 // 2 + 1
    assert verify_expression(expr)


def test_bavard_r2_k4_seven_factors():
    expr = bavard_expand(_pairs(2), 4)
    assert expr.factor_count() == 7
    assert verify_expression(expr)


def test_bavard_k1_returns_original_factors():
    pairs = _pairs(3)
    expr = bavard_expand(pairs, 1)
    assert expr.factor_count() == 3
    for factor, (a, b) in zip(expr.factors, pairs):
        assert factor.conjugator.is_identity()
        assert (factor.left, factor.right) == (a, b)
    assert verify_expression(expr)


def test_bavard_grid_counts():
    for r in range(1, 4):
        for k in range(1, 7):
            expr = bavard_expand(_pairs(r), k)
            assert expr.factor_count() == k * (r - 1) + k // 2 + 1, (r, k)
            assert verify_expression(expr), (r, k)


def test_bavard_random_words():
    rng = random.Random(11)
    for _ in range(10):
        pairs = [(random_word(rng, 4), random_word(rng, 4)) for _ in range(2)]
        expr = bavard_expand(pairs, 4)
        assert expr.factor_count() == 7
        assert verify_expression(expr)


def test_bavard_rejects_bad_input():
    with pytest.raises(ValueError):
        bavard_expand(_pairs(2), 0)
    with pytest.raises(ValueError):
        bavard_expand([], 3)
