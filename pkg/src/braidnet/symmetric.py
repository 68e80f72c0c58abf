"""
Permutations, inversion sets, and sorting networks.

Permutations of {1, ..., n} are stored as tuples in one-line notation,
so ``p[i-1]`` is the image of ``i``.  A sorting network on ``n`` elements
is a word of N = C(n,2) adjacent-transposition indices (each in 1..n-1)
whose wiring diagram carries the identity arrangement to the reversed
arrangement (n, n-1, ..., 1).  Words act left to right: the first letter
is the first swap performed.
"""
from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


class CapExceeded(RuntimeError):
    """An enumeration or sweep would exceed the configured size cap."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def reverse_permutation(n: int) -> tuple[int, ...]:
    """The longest element of S_n in one-line notation.

    >>> reverse_permutation(3)
    (3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def is_permutation(images: Sequence[int]) -> bool:
    n = len(images)
    return sorted(images) == list(range(1, n + 1))


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def num_crossings(n: int) -> int:
    """N = C(n,2), the length of every sorting network on n elements."""
    return n * (n - 1) // 2


def apply_word(n: int, word: Iterable[int]) -> tuple[int, ...]:
    """Arrangement reached from (1,...,n) by performing the swaps of ``word``.

    Letter j swaps the contents of positions j and j+1; letters act left
    to right (wiring-diagram order).

    >>> apply_word(3, (1, 2, 1))
    (3, 2, 1)
    >>> apply_word(3, ())
    (1, 2, 3)
    """
    arr = list(range(1, n + 1))
    for j in word:
        if not 1 <= j <= n - 1:
            raise ValueError(f"generator index {j} out of range for n={n}")
        arr[j - 1], arr[j] = arr[j], arr[j - 1]
    return tuple(arr)


def is_sorting_network(n: int, word: Sequence[int]) -> bool:
    """True iff ``word`` has length C(n,2) and sorts identity to reversal.

    Malformed words (wrong length, indices out of range) give False.
    """
    if len(word) != num_crossings(n):
        return False
    if any(not 1 <= j <= n - 1 for j in word):
        return False
    return apply_word(n, word) == reverse_permutation(n)


def stanley_count(n: int) -> int:
    """Number of sorting networks on n elements (reduced words for the
    longest element): C(n,2)! / (1^(n-1) 3^(n-2) ... (2n-3)^1).

    >>> [stanley_count(n) for n in (2, 3, 4, 5)]
    [1, 2, 16, 768]
    """
    if n < 2:
        raise ValueError("need n >= 2")
    denom = 1
    for k in range(1, n):
        denom *= (2 * k - 1) ** (n - k)
    return math.factorial(num_crossings(n)) // denom


def _dfs_complete(n: int, prefix: Word) -> list[Word]:
    """All sorting networks extending ``prefix``, in lexicographic order."""
    big_n = num_crossings(n)
    arr = list(range(1, n + 1))
    for j in prefix:
        if arr[j - 1] > arr[j]:
            return []
        arr[j - 1], arr[j] = arr[j], arr[j - 1]
    out: list[Word] = []
    word = list(prefix)

    def dfs() -> None:
        if len(word) == big_n:
            out.append(tuple(word))
            return
        for j in range(1, n):
            if arr[j - 1] < arr[j]:
                arr[j - 1], arr[j] = arr[j], arr[j - 1]
                word.append(j)
                dfs()
                word.pop()
                arr[j - 1], arr[j] = arr[j], arr[j - 1]

    dfs()
    return out


def _prefixes(n: int, depth: int) -> list[Word]:
    prefixes: list[Word] = [()]
    for _ in range(min(depth, num_crossings(n))):
        nxt = []
        for p in prefixes:
            arr = list(apply_word(n, p))
            for j in range(1, n):
                if arr[j - 1] < arr[j]:
                    nxt.append(p + (j,))
        prefixes = nxt
    return prefixes


def _complete_star(args: tuple[int, Word]) -> list[Word]:
    return _dfs_complete(*args)


def enumerate_networks(n: int, cap: int | None = None,
                       workers: int = 1) -> list[Word]:
    """All sorting networks on n elements, lexicographically sorted.

    Generated by DFS that only applies a generator when it increases the
    inversion count.  With ``workers > 1`` the search is chunked over
    short prefixes; the merge order is the lexicographic order of the
    prefixes, so the result is identical to the single-worker one.

    >>> enumerate_networks(3)
    [(1, 2, 1), (2, 1, 2)]
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = stanley_count(n)
    if cap is not None and total > cap:
        raise CapExceeded(
            f"enumerating S({n}) would produce {total} networks (cap {cap})",
            total)
    if workers <= 1 or n <= 4:
        return _dfs_complete(n, ())
    prefixes = _prefixes(n, 3)
    with multiprocessing.Pool(workers) as pool:
        chunks = pool.map(_complete_star, [(n, p) for p in prefixes])
    out: list[Word] = []
    for chunk in chunks:
        out.extend(chunk)
    return out


def inversion_set(p: Sequence[int]) -> dict[tuple[int, int], int]:
    """Sign vector over pairs i<j: +1 if p(i) > p(j), else -1.

    >>> inversion_set((2, 3, 1))
    {(1, 2): -1, (1, 3): 1, (2, 3): 1}
    """
    n = len(p)
    return {(i, j): (1 if p[i - 1] > p[j - 1] else -1)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)}


@dataclass(frozen=True)
class WiringDiagram:
    """Particle trajectories through a word of swaps.

    ``trajectories[i-1][k]`` is the position of particle i after k swaps;
    ``crossings[k-1]`` is the (unordered) pair of particles swapped at
    step k.
    """
    n: int
    trajectories: tuple[tuple[int, ...], ...]
    crossings: tuple[frozenset[int], ...]

    def crossing_times(self) -> dict[tuple[int, int], list[int]]:
        """1-based swap times per particle pair, in increasing order."""
        times: dict[tuple[int, int], list[int]] = {}
        for k, pair in enumerate(self.crossings, start=1):
            a, b = sorted(pair)
            times.setdefault((a, b), []).append(k)
        return times


def wiring_diagram(n: int, word: Sequence[int]) -> WiringDiagram:
    """Trajectories and crossing table for any word (network or loop)."""
    arr = list(range(1, n + 1))          # arr[pos-1] = particle
    pos = list(range(1, n + 1))          # pos[particle-1] = position
    trajs = [[i] for i in range(1, n + 1)]
    crossings = []
    for j in word:
        if not 1 <= j <= n - 1:
            raise ValueError(f"generator index {j} out of range for n={n}")
        a, b = arr[j - 1], arr[j]
        crossings.append(frozenset((a, b)))
        arr[j - 1], arr[j] = b, a
        pos[a - 1], pos[b - 1] = pos[b - 1], pos[a - 1]
        for i in range(1, n + 1):
            trajs[i - 1].append(pos[i - 1])
    return WiringDiagram(n, tuple(tuple(t) for t in trajs), tuple(crossings))


# ---------------------------------------------------------------------------
# Commutation classes and braid moves

def _commutations(word: Word) -> Iterator[Word]:
    for idx in range(len(word) - 1):
        if abs(word[idx] - word[idx + 1]) > 1:
            yield word[:idx] + (word[idx + 1], word[idx]) + word[idx + 2:]


def _braid_moves(word: Word) -> Iterator[Word]:
    for idx in range(len(word) - 2):
        a, b, c = word[idx:idx + 3]
        if a == c and abs(a - b) == 1:
            yield word[:idx] + (b, a, b) + word[idx + 3:]


def commutation_class_members(word: Word) -> frozenset[Word]:
    """Closure of ``word`` under swaps of adjacent commuting letters."""
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for v in _commutations(w):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def commutation_class(word: Word) -> Word:
    """Lexicographically least member: a canonical class representative."""
    return min(commutation_class_members(word))


def braid_move_distance(s_word: Word, t_word: Word) -> int:
    """Minimal number of braid moves (jij -> iji) connecting two reduced
    words, commutations being free: BFS over commutation classes.

    By Tits' theorem the classes are always connected.
    """
    start = commutation_class(s_word)
    goal = commutation_class(t_word)
    if start == goal:
        return 0
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for rep in frontier:
            d = dist[rep]
            for member in commutation_class_members(rep):
                for moved in _braid_moves(member):
                    nrep = commutation_class(moved)
                    if nrep not in dist:
                        if nrep == goal:
                            return d + 1
                        dist[nrep] = d + 1
                        nxt.append(nrep)
        frontier = nxt
    raise RuntimeError("commutation classes not connected; invalid input")


# ---------------------------------------------------------------------------
# Text format

def format_network(n: int, word: Sequence[int]) -> str:
    """Digit string for n <= 10, comma-separated integers beyond."""
    if n <= 10:
        return "".join(str(j) for j in word)
    return ",".join(str(j) for j in word)


def parse_network(text: str) -> Word:
    text = text.strip()
    if not text:
        raise ValueError("empty network literal")
    try:
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"malformed network literal {text!r}") from None


def infer_n(word: Sequence[int]) -> int:
    """Smallest n a word of generators can live in: max letter + 1."""
    if not word:
        raise ValueError("cannot infer n from an empty word")
    return max(word) + 1
