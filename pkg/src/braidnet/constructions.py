"""
Sorting loops and the two canonical signed constructions.

A sorting loop concatenates two sorting networks S, T: the word S.T
returns the arrangement to the identity, so any signature on its 2N
letters yields a pure braid.  The algebraic sorting braid (ASB) mirrors
the first half through position complement with negated signs; the
dynamic sorting braid (DSB) repeats the first half with negated signs.
"""
from __future__ import annotations

from typing import Sequence

from . import braid
from .symmetric import is_sorting_network, num_crossings, wiring_diagram

Signature = tuple[int, ...]


def parse_signature(text: str) -> Signature:
    """Parse a string over {+,-} such as "+-+"."""
    signs = []
    for ch in text.strip():
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ValueError(f"malformed signature character {ch!r}")
    return tuple(signs)


def format_signature(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def signed_word(word: Sequence[int], signs: Sequence[int]) -> braid.SignedWord:
    """Attach a signature to a word of generator indices."""
    if len(word) != len(signs):
        raise ValueError(
            f"word length {len(word)} != signature length {len(signs)}")
    return tuple(j * s for j, s in zip(word, signs))


def conjugate(word: Sequence[int]) -> tuple[int, ...]:
    """Conjugate sorting network: the word read backwards (an involution)."""
    return tuple(reversed(word))


def conjugate_signed(letters: Sequence[int]) -> braid.SignedWord:
    """Signed conjugation: reverse the letters and negate every sign.

    This is exactly the inverse braid word, which is why S(sigma).S*(sigma)
    is always trivial.
    """
    return braid.inverse_word(letters)


def _check_network(n: int, word: Sequence[int]) -> None:
    if not is_sorting_network(n, word):
        raise ValueError(f"{word} is not a sorting network for n={n}")


def loop_word(n: int, first: Sequence[int], second: Sequence[int]) -> tuple[int, ...]:
    """Unsigned word of the sorting loop S.T."""
    _check_network(n, first)
    _check_network(n, second)
    return tuple(first) + tuple(second)


def asb(n: int, word: Sequence[int], signs: Sequence[int]) -> braid.SignedWord:
    """Algebraic sorting braid: j_1^s1 .. j_N^sN (n-j_1)^-s1 .. (n-j_N)^-sN."""
    _check_network(n, word)
    first = signed_word(word, signs)
    second = tuple(-(n - abs(l)) * (1 if l > 0 else -1) for l in first)
    return first + second


def dsb(n: int, word: Sequence[int], signs: Sequence[int]) -> braid.SignedWord:
    """Dynamic sorting braid: j_1^s1 .. j_N^sN j_1^-s1 .. j_N^-sN."""
    _check_network(n, word)
    first = signed_word(word, signs)
    return first + tuple(-l for l in first)


def crossing_indices(n: int, loop: Sequence[int]) -> dict[tuple[int, int], tuple[int, int]]:
    """First and last crossing times (f, l) per strand pair of a loop,
    1-based within the 2N-letter word.  Errors if some pair does not
    cross exactly twice.
    """
    if len(loop) != 2 * num_crossings(n):
        raise ValueError("loop word must have length 2N")
    times = wiring_diagram(n, [abs(l) for l in loop]).crossing_times()
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ts = times.get((i, j), [])
            if len(ts) != 2:
                raise ValueError(
                    f"strands {i},{j} cross {len(ts)} times; not a sorting loop")
            out[(i, j)] = (ts[0], ts[1])
    return out


def complement(n: int, word: Sequence[int]) -> tuple[int, ...]:
    """Letterwise position complement j -> n - j (a network symmetry)."""
    return tuple(n - j for j in word)
