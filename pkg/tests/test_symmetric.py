import itertools

import pytest
from hypothesis import given, strategies as st

from braidnet.symmetric import (apply_word, braid_move_distance,
                                commutation_class, commutation_class_members,
                                enumerate_networks, format_network,
                                inversion_set, is_sorting_network,
                                num_crossings, parse_network, stanley_count,
                                wiring_diagram, CapExceeded)


def test_apply_word_examples():
    assert apply_word(3, (1, 2, 1)) == (3, 2, 1)
    assert apply_word(3, ()) == (1, 2, 3)
    # hand-applied: 1234 -> 2134 -> 2314 -> 2341 -> 3241 -> 3421 -> 4321
    assert apply_word(4, (1, 2, 3, 1, 2, 1)) == (4, 3, 2, 1)


def test_apply_word_rejects_bad_index():
    with pytest.raises(ValueError):
        apply_word(3, (3,))


def test_is_sorting_network():
    assert is_sorting_network(3, (1, 2, 1))
    assert is_sorting_network(3, (2, 1, 2))
    assert not is_sorting_network(3, (1, 2, 2))
    assert not is_sorting_network(3, (1, 2))
    assert not is_sorting_network(3, (1, 2, 1, 2, 1, 2))


def test_stanley_count_values():
    assert [stanley_count(n) for n in (2, 3, 4, 5)] == [1, 2, 16, 768]


def test_enumeration_matches_stanley():
    for n in (2, 3, 4, 5):
        nets = enumerate_networks(n)
        assert len(nets) == stanley_count(n)
        assert nets == sorted(nets)
        assert all(is_sorting_network(n, w) for w in nets)


def test_enumeration_n3():
    assert enumerate_networks(3) == [(1, 2, 1), (2, 1, 2)]


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_networks(5, cap=100)


def test_parallel_enumeration_merge_order():
    assert enumerate_networks(5, workers=2) == enumerate_networks(5)


def test_inversion_set_examples():
    assert set(inversion_set((1, 2, 3)).values()) == {-1}
    assert set(inversion_set((3, 2, 1)).values()) == {1}
    assert inversion_set((2, 3, 1)) == {(1, 2): -1, (1, 3): 1, (2, 3): 1}


@pytest.mark.parametrize("n", [3, 4])
def test_inversion_set_injective_and_count(n):
    realized = set()
    for p in itertools.permutations(range(1, n + 1)):
        vec = tuple(sorted(inversion_set(p).items()))
        assert vec not in realized
        realized.add(vec)
    # exactly n! of the 2^N sign vectors arise from permutations
    assert len(realized) == len(list(itertools.permutations(range(1, n + 1))))
    assert len(realized) < 2 ** num_crossings(n)


def test_wiring_diagram_crossing_tables():
    d = wiring_diagram(3, (1, 2, 1))
    assert list(d.crossings) == [frozenset({1, 2}), frozenset({1, 3}),
                                 frozenset({2, 3})]
    d2 = wiring_diagram(3, (2, 1, 2))
    assert list(d2.crossings) == [frozenset({2, 3}), frozenset({1, 3}),
                                  frozenset({1, 2})]
    # trajectory of particle 1 under 121: swapped by letters 1 and 2,
    # untouched by the final letter
    assert d.trajectories[0] == (1, 2, 3, 3)
    # every trajectory of a network ends at the mirror position
    for i, traj in enumerate(d.trajectories, start=1):
        assert traj[0] == i and traj[-1] == 3 + 1 - i


def test_commutation_class_singleton_at_n3():
    assert commutation_class((1, 2, 1)) == (1, 2, 1)
    assert commutation_class_members((1, 2, 1)) == frozenset({(1, 2, 1)})


def test_commutation_class_bfs_oracle():
    # independent closure by repeated scanning, no canonicalization
    word = (1, 3, 2, 1, 3, 2)
    closure = {word}
    changed = True
    while changed:
        changed = False
        for w in list(closure):
            for idx in range(len(w) - 1):
                if abs(w[idx] - w[idx + 1]) > 1:
                    v = w[:idx] + (w[idx + 1], w[idx]) + w[idx + 2:]
                    if v not in closure:
                        closure.add(v)
                        changed = True
    assert commutation_class_members(word) == frozenset(closure)
    assert commutation_class(word) == min(closure)


def test_braid_move_distance_examples():
    assert braid_move_distance((1, 2, 1), (1, 2, 1)) == 0
    assert braid_move_distance((1, 2, 1), (2, 1, 2)) == 1
    s1 = (1, 2, 3, 2, 1, 2)
    assert braid_move_distance(s1, tuple(reversed(s1))) == 2


def test_braid_move_distance_is_metric_n4():
    nets = enumerate_networks(4)
    reps = sorted({commutation_class(w) for w in nets})
    dist = {(a, b): braid_move_distance(a, b) for a in reps for b in reps}
    for a in reps:
        assert dist[(a, a)] == 0
        for b in reps:
            assert dist[(a, b)] == dist[(b, a)]
            for c in reps:
                assert dist[(a, c)] <= dist[(a, b)] + dist[(b, c)]


@given(st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n),
                        st.lists(st.integers(1, n - 1), min_size=1,
                                 max_size=12))))
def test_network_text_roundtrip(case):
    n, word = case
    assert parse_network(format_network(n, tuple(word))) == tuple(word)


def test_parse_network_comma_form():
    assert parse_network("1,10,2") == (1, 10, 2)
    with pytest.raises(ValueError):
        parse_network("1a2")
