"""
Linking numbers, Milnor numbers via Magnus-style subsequence counting,
and the transitivity classification of triple signatures.

Two independent routes to the pairwise linking numbers are provided:
``lk_crossings`` reads them off the crossing signs of a sorting loop
(each pair of strands crossing exactly twice), while ``mu`` with a pair
of indices computes the same number from the combed free-group action.
Their agreement is a standing consistency check of the sign convention.
"""
from __future__ import annotations

from typing import Sequence

from . import braid
from .symmetric import wiring_diagram

Pair = tuple[int, int]
Triple = tuple[int, int, int]


def lk_crossings(n: int, letters: Sequence[int]) -> dict[Pair, int]:
    """Linking numbers of a signed sorting loop from its crossing signs.

    Every pair of strands must cross exactly twice; then
    lk(i,j) = (sigma_f + sigma_l) / 2 with f, l the pair's two crossing
    times in the wiring diagram.
    """
    diagram = wiring_diagram(n, [abs(l) for l in letters])
    signs = [1 if l > 0 else -1 for l in letters]
    out: dict[Pair, int] = {}
    times = diagram.crossing_times()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ts = times.get((i, j), [])
            if len(ts) != 2:
                raise ValueError(
                    f"strands {i},{j} cross {len(ts)} times; not a sorting loop")
            f, l = ts
            out[(i, j)] = (signs[f - 1] + signs[l - 1]) // 2
    return out


def lk_l1(lk: dict[Pair, int]) -> int:
    return sum(abs(v) for v in lk.values())


def magnus_count(word: Sequence[int], pattern: Sequence[int]) -> int:
    """Signed count of subsequences of ``word`` matching ``pattern``.

    ``word`` is a free-group word over strand labels (signed ints),
    ``pattern`` a sequence of distinct positive labels.  A subsequence at
    positions j_1 < ... < j_m whose labels match the pattern contributes
    the product of its exponents.  Computed by a left-to-right dynamic
    program over pattern prefixes; the input is freely reduced first.

    >>> magnus_count((1, 2), (1, 2))
    1
    >>> magnus_count((1, 2, -1, -2), (1, 2))
    0
    """
    if not pattern:
        raise ValueError("pattern must be nonempty")
    if len(set(pattern)) != len(pattern):
        raise ValueError("pattern labels must be distinct")
    word = braid.free_reduce(word)
    m = len(pattern)
    counts = [0] * m
    for g in word:
        t = abs(g)
        e = 1 if g > 0 else -1
        for i in range(m - 1, -1, -1):
            if pattern[i] == t:
                counts[i] += e * (counts[i - 1] if i > 0 else 1)
    return counts[-1]


def mu(n: int, letters: Sequence[int], indices: Sequence[int]) -> int:
    """Milnor number mu(p_1, ..., p_m) of a pure braid: the signed count
    of the pattern (p_1, ..., p_{m-1}) inside the conjugator of strand
    p_m.  mu(i, j) is the linking number lk(i, j).
    """
    if len(indices) < 2:
        raise ValueError("need at least two strand indices")
    if len(set(indices)) != len(indices):
        raise ValueError("strand indices must be distinct")
    conjugators = braid.comb(n, letters)
    return magnus_count(conjugators[indices[-1]], tuple(indices[:-1]))


def mu3_vector(n: int, letters: Sequence[int],
               conjugators: dict[int, tuple[int, ...]] | None = None,
               ) -> dict[Triple, int]:
    """mu3(i,j,k) for all triples i < j < k.

    A precomputed combing may be passed to amortize sweeps.
    """
    if conjugators is None:
        conjugators = braid.comb(n, letters)
    out: dict[Triple, int] = {}
    for k in range(3, n + 1):
        word = conjugators[k]
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                if j == k:
                    continue
                out[(i, j, k)] = magnus_count(word, (i, j))
    return out


def mu3_l1(vector: dict[Triple, int]) -> int:
    """Magnitude of the mu3 vector: the L1 norm."""
    return sum(abs(v) for v in vector.values())


def triple_order(signs: Sequence[int]) -> tuple[int, int, int] | None:
    """Order relation induced by the signs of a triple's three crossings.

    ``signs`` are the crossing signs in first-crossing order, i.e. for
    the pairs (1,2), (1,3), (2,3) of the triple's strands relabelled
    1 < 2 < 3; sign +1 on pair (a,b) means a is above b.  Returns the
    total order as a tuple from greatest to least, or None when the
    relation is non-transitive -- exactly the patterns (+,-,+), (-,+,-).

    >>> triple_order((1, -1, -1))
    (3, 1, 2)
    >>> triple_order((1, -1, 1)) is None
    True
    """
    if len(signs) != 3 or any(s not in (1, -1) for s in signs):
        raise ValueError("expected three signs in {+1, -1}")
    wins = {1: 0, 2: 0, 3: 0}
    for (a, b), s in zip(((1, 2), (1, 3), (2, 3)), signs):
        wins[a if s > 0 else b] += 1
    if sorted(wins.values()) != [0, 1, 2]:
        return None
    return tuple(sorted((1, 2, 3), key=lambda x: -wins[x]))  # type: ignore


# ---------------------------------------------------------------------------
# JSON shapes

def lk_to_json(lk: dict[Pair, int]) -> list[dict[str, int]]:
    return [{"i": i, "j": j, "lk": v} for (i, j), v in sorted(lk.items())]


def mu3_to_json(vector: dict[Triple, int]) -> list[dict[str, int]]:
    return [{"i": i, "j": j, "k": k, "mu3": v}
            for (i, j, k), v in sorted(vector.items())]
