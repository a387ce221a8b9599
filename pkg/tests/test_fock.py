import random
from fractions import Fraction
from math import factorial

import pytest

from chessfock.fock import (apply_e, apply_f, apply_word, basis, inner,
                            pair_sum, random_vector, word_images)
from chessfock.tableaux import ResidueWord, alternating_word

ONE = Fraction(1)


def test_apply_f_single_cells():
    assert apply_f(basis(()), 0, 2) == {(1,): ONE}
    assert apply_f(basis(()), 1, 2) == {}
    assert apply_f(basis((1,)), 1, 2) == {(2,): ONE, (1, 1): ONE}
    assert apply_f(basis((1,)), 0, 2) == {}
    # all three corners of (2,1) have residue 0: (1,3), (2,2) and (3,1)
    assert apply_f(basis((2, 1)), 0, 2) == {
        (3, 1): ONE, (2, 2): ONE, (2, 1, 1): ONE}
    assert apply_f(basis((2, 1)), 1, 2) == {}


def test_apply_e_single_cells():
    assert apply_e(basis((1,)), 0, 2) == {(): ONE}
    assert apply_e(basis((1,)), 1, 2) == {}
    assert apply_e(basis((2, 1)), 1, 2) == {(1, 1): ONE, (2,): ONE}
    assert apply_e(basis(()), 0, 2) == {}


def test_linearity_and_cancellation():
    x = {(1,): Fraction(2)}
    assert apply_f(x, 1, 2) == {(2,): Fraction(2), (1, 1): Fraction(2)}
    # coefficients that cancel must not leave explicit zeros behind
    y = {(2,): ONE, (1, 1): -ONE}
    assert apply_e(y, 1, 2) == {}


def test_apply_word():
    assert apply_word(ResidueWord(2, (0,))) == {(1,): ONE}
    assert apply_word(ResidueWord(2, (1, 0))) == {}
    assert apply_word(ResidueWord(2, (0, 1))) == {(2,): ONE, (1, 1): ONE}
    # (2,2) supports no chess filling; the other four shapes have one each
    image = apply_word(alternating_word(4))
    assert image == {(4,): ONE, (3, 1): ONE, (2, 1, 1): ONE,
                     (1, 1, 1, 1): ONE}


def test_inner():
    x = {(2,): Fraction(3), (1, 1): ONE}
    y = {(2,): Fraction(1, 3)}
    assert inner(x, y) == 1
    assert inner(x, x) == 10
    assert inner({}, x) == 0


def test_pair_sum_examples():
    assert pair_sum(alternating_word(4), alternating_word(4)) == 4
    assert pair_sum(alternating_word(7), alternating_word(7)) == 48
    assert pair_sum(alternating_word(10), alternating_word(10)) == 2048
    assert pair_sum(ResidueWord(2, (0,)), ResidueWord(2, (1,))) == 0
    v = ResidueWord(2, (0, 1, 0))
    w = ResidueWord(2, (0, 1, 1))
    assert pair_sum(v, w) == 0
    assert pair_sum(w, w) == 4


def test_pair_sum_validation():
    with pytest.raises(ValueError):
        pair_sum(ResidueWord(2, (0,)), ResidueWord(2, (0, 1)))
    with pytest.raises(ValueError):
        pair_sum(ResidueWord(2, (0,)), ResidueWord(3, (0,)))


def test_modulus_one_gives_factorials():
    for n in range(11):
        w = ResidueWord(1, (0,) * n)
        assert pair_sum(w, w) == factorial(n)


def test_word_images_agree_with_apply_word():
    for n in (3, 6):
        images = dict(word_images(n, 2))
        for letters, image in images.items():
            assert image == apply_word(ResidueWord(2, letters))
            assert all(c.denominator == 1 and c > 0 for c in image.values())
            assert all(sum(lam) == n for lam in image)
        # words missing from the tree really have zero image
        import itertools
        for letters in itertools.product(range(2), repeat=n):
            if letters not in images:
                assert apply_word(ResidueWord(2, letters)) == {}


def test_grading():
    rng = random.Random(11)
    for _ in range(20):
        x = random_vector(rng, 7)
        for e in (2, 3):
            for i in range(e):
                up = apply_f(x, i, e)
                down = apply_e(x, i, e)
                degrees = {sum(lam) for lam in x}
                assert all(sum(lam) - 1 in degrees for lam in up)
                assert all(sum(lam) + 1 in degrees for lam in down)


def test_adjointness_randomized():
    rng = random.Random(7)
    for _ in range(40):
        e = rng.choice((2, 3, 5))
        i = rng.randrange(e)
        x = random_vector(rng, 9)
        y = random_vector(rng, 9)
        assert inner(apply_f(x, i, e), y) == inner(x, apply_e(y, i, e))
