import random

import pytest

from braidnet.braid import is_pure, is_trivial
from braidnet.constructions import (asb, complement, conjugate,
                                    conjugate_signed, crossing_indices, dsb,
                                    format_signature, loop_word,
                                    parse_signature, signed_word)
from braidnet.survey import all_signatures
from braidnet.symmetric import enumerate_networks, num_crossings


def test_conjugate_examples():
    assert conjugate((1, 2, 1)) == (1, 2, 1)
    assert conjugate((1, 2, 3, 2, 1, 2)) == (2, 1, 2, 3, 2, 1)
    for s in enumerate_networks(4):
        assert conjugate(conjugate(s)) == s


def test_conjugate_signed():
    assert conjugate_signed((1, -2, 1)) == (-1, 2, -1)
    w = (1, -2, 3)
    assert conjugate_signed(conjugate_signed(w)) == w


def test_signature_text():
    assert parse_signature("+-+") == (1, -1, 1)
    assert format_signature((1, -1, 1)) == "+-+"
    with pytest.raises(ValueError):
        parse_signature("+0+")


def test_signed_word_length_mismatch():
    with pytest.raises(ValueError):
        signed_word((1, 2, 1), (1, -1))


def test_asb_word_formula():
    assert asb(3, (1, 2, 1), (1, -1, 1)) == (1, -2, 1, -2, 1, -2)


def test_asb_all_plus_is_trivial():
    # the (+++) triple signature is an inversion set
    assert is_trivial(3, asb(3, (1, 2, 1), (1, 1, 1)))


def test_dsb_word_formula_and_triviality():
    d = dsb(3, (1, 2, 1), (1, -1, 1))
    assert d == (1, -2, 1, -1, 2, -1)
    assert is_trivial(3, d)


def test_constructions_are_pure():
    rng = random.Random(3)
    for n in (3, 4, 5):
        nets = enumerate_networks(n)
        for _ in range(20):
            word = rng.choice(nets)
            signs = tuple(rng.choice((1, -1))
                          for _ in range(num_crossings(n)))
            assert is_pure(n, asb(n, word, signs))
            assert is_pure(n, dsb(n, word, signs))


def test_ss_star_trivial_random():
    rng = random.Random(11)
    for n in (4, 5):
        nets = enumerate_networks(n)
        for _ in range(50):
            word = rng.choice(nets)
            signs = tuple(rng.choice((1, -1))
                          for _ in range(num_crossings(n)))
            letters = signed_word(word, signs)
            assert is_trivial(n, letters + conjugate_signed(letters))


def test_crossing_indices_n3_loops():
    # L2 = 121.121: f + l = 7 for every pair
    idx = crossing_indices(3, loop_word(3, (1, 2, 1), (1, 2, 1)))
    assert all(f + l == 7 for f, l in idx.values())
    # L1 = 121.212: l - f = 3 for every pair
    idx = crossing_indices(3, loop_word(3, (1, 2, 1), (2, 1, 2)))
    assert all(l - f == 3 for f, l in idx.values())


def test_crossing_indices_dsb_reflection():
    # in the DSB loop, the second crossing of (i, j) sits N steps after
    # the first crossing of the mirrored pair
    for n in (3, 4):
        big_n = num_crossings(n)
        for word in enumerate_networks(n):
            idx = crossing_indices(n, tuple(word) + tuple(word))
            for (i, j), (f, l) in idx.items():
                mi, mj = sorted((n + 1 - i, n + 1 - j))
                assert l == idx[(mi, mj)][0] + big_n


def test_crossing_indices_rejects_short_word():
    with pytest.raises(ValueError):
        crossing_indices(3, (1, 2, 1))


def test_asb_unlinked_exhaustive_n4():
    from braidnet.invariants import lk_crossings, lk_l1
    for word in enumerate_networks(4):
        for signs in all_signatures(num_crossings(4)):
            assert lk_l1(lk_crossings(4, asb(4, word, signs))) == 0


def test_asb_triples_are_type_one():
    # every 3-strand sub-braid of an ASB crosses each of its pairs once
    # in each half with mirrored timing, as in the hexagon loop L1
    for word in enumerate_networks(4):
        idx = crossing_indices(4, tuple(word) + tuple(complement(4, word)))
        big_n = num_crossings(4)
        for (i, j), (f, l) in idx.items():
            assert 1 <= f <= big_n < l <= 2 * big_n


def test_complement_is_network():
    from braidnet.symmetric import is_sorting_network
    for word in enumerate_networks(4):
        assert is_sorting_network(4, complement(4, word))
