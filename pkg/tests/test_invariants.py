import itertools
import random

import pytest

from braidnet.braid import free_reduce
from braidnet.constructions import (asb, dsb, loop_word, parse_signature,
                                    signed_word)
from braidnet.invariants import (lk_crossings, lk_l1, magnus_count, mu,
                                 mu3_l1, mu3_vector, triple_order)
from braidnet.survey import all_signatures
from braidnet.symmetric import enumerate_networks, num_crossings


def brute_subsequence_count(word, pattern):
    """Independent oracle: enumerate matching index subsequences."""
    total = 0

    def rec(start, pi, sign):
        nonlocal total
        if pi == len(pattern):
            total += sign
            return
        want = pattern[pi]
        for idx in range(start, len(word)):
            g = word[idx]
            if abs(g) == want:
                rec(idx + 1, pi + 1, sign * (1 if g > 0 else -1))

    rec(0, 0, 1)
    return total


def test_magnus_count_examples():
    assert magnus_count((1, 2), (1, 2)) == 1
    assert magnus_count((1, -1), (1,)) == 0
    # commutator x1 x2 x1^-1 x2^-1: subsequences (+,+), (+,-), (-,-)
    # contribute +1 - 1 + 1 = 1
    w = (1, 2, -1, -2)
    assert brute_subsequence_count(free_reduce(w), (1, 2)) == 1
    assert magnus_count(w, (1, 2)) == 1


def test_magnus_count_matches_brute_small_words():
    alphabet = (1, -1, 2, -2, 3, -3)
    patterns = [(1,), (1, 2), (2, 1), (1, 2, 3)]
    for length in range(0, 6):
        for word in itertools.product(alphabet, repeat=length):
            red = free_reduce(word)
            for pattern in patterns:
                assert magnus_count(word, pattern) == \
                    brute_subsequence_count(red, pattern)


def test_magnus_count_rejects_bad_patterns():
    with pytest.raises(ValueError):
        magnus_count((1,), ())
    with pytest.raises(ValueError):
        magnus_count((1,), (1, 1))


def test_lk_crossings_paper_examples():
    # A(121, (+-+)) and D(121, (+-+)) both have zero linking vector
    assert set(lk_crossings(3, (1, -2, 1, -2, 1, -2)).values()) == {0}
    assert set(lk_crossings(3, (1, -2, 1, -1, 2, -1)).values()) == {0}
    # all-plus signature on L1 = 121.212 links every pair
    loop = loop_word(3, (1, 2, 1), (2, 1, 2))
    lk = lk_crossings(3, signed_word(loop, (1,) * 6))
    assert all(abs(v) == 1 for v in lk.values())


def test_lk_crossings_rejects_non_loop():
    with pytest.raises(ValueError):
        lk_crossings(3, (1, 2, 1))


def test_mu_borromean():
    b = (1, -2, 1, -2, 1, -2)
    assert abs(mu(3, b, (1, 2, 3))) == 1
    assert mu3_l1(mu3_vector(3, b)) == 1


def test_mu_trivial_braid():
    assert mu(3, (1, -1), (1, 2, 3)) == 0
    assert mu3_vector(3, (1, -1)) == {(1, 2, 3): 0}


def test_mu2_equals_lk_exhaustive_n3():
    nets = enumerate_networks(3)
    for s in nets:
        for t in nets:
            loop = loop_word(3, s, t)
            for signs in all_signatures(6):
                letters = signed_word(loop, signs)
                lk = lk_crossings(3, letters)
                for (i, j), value in lk.items():
                    assert mu(3, letters, (i, j)) == value


def test_mu2_equals_lk_sampled_n4():
    rng = random.Random(7)
    nets = enumerate_networks(4)
    for _ in range(500):
        word = rng.choice(nets)
        signs = tuple(rng.choice((1, -1)) for _ in range(num_crossings(4)))
        letters = dsb(4, word, signs) if rng.random() < 0.5 \
            else asb(4, word, signs)
        lk = lk_crossings(4, letters)
        pair = rng.choice(list(lk))
        assert mu(4, letters, pair) == lk[pair]


def test_mu3_paper_values():
    # section 5.5.1 example braid: nonzero exactly at (1,2,3) and (2,3,4)
    vec = mu3_vector(4, dsb(4, (1, 2, 3, 2, 1, 2), parse_signature("+-++-+")))
    assert {t for t, v in vec.items() if v != 0} == {(1, 2, 3), (2, 3, 4)}
    assert mu3_l1(vec) == 2
    # the figure's braid on network 132132: same magnitude
    vec2 = mu3_vector(4, dsb(4, (1, 3, 2, 1, 3, 2), parse_signature("+-++-+")))
    assert sorted(abs(v) for v in vec2.values()) == [0, 0, 1, 1]


def test_triple_order_examples():
    assert triple_order((1, -1, -1)) == (3, 1, 2)
    assert triple_order((1, -1, 1)) is None
    assert triple_order((-1, 1, -1)) is None


def test_triple_order_six_of_eight():
    orders = set()
    for signs in itertools.product((1, -1), repeat=3):
        result = triple_order(signs)
        if result is not None:
            orders.add(result)
    assert len(orders) == 6  # = 3! total orders


def test_mu3_l1_is_l1_norm():
    assert mu3_l1({(1, 2, 3): 1, (1, 3, 4): -1}) == 2
