"""
Signed braid words, the free-group action, combing, and triviality.

A signed braid word on n strands is a tuple of nonzero integers: letter
``+p`` is the positive generator at position p (the strand at position p
crosses over the strand at p+1), ``-p`` its inverse.  Free-group words
over the strand meridians x_1..x_n use the same encoding: ``+i`` is x_i,
``-i`` is its inverse.  Free words are kept freely reduced.

The braid acts on the free group by the standard rule for a positive
letter at position p:

    x_p  ->  x_p x_{p+1} x_p^-1,      x_{p+1}  ->  x_p,

letters composing left to right (first letter of the word acts first).
For a pure braid every generator maps to a conjugate A_i x_i A_i^-1;
extracting the conjugators A_i is the combing used by the Milnor-number
computation, and the braid is trivial iff every A_i is empty.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .symmetric import apply_word, identity

SignedWord = tuple[int, ...]


class NotPureError(ValueError):
    """Raised when an operation requiring a pure braid gets a non-pure one."""


def underlying_permutation(n: int, letters: Sequence[int]) -> tuple[int, ...]:
    return apply_word(n, [abs(l) for l in letters])


def is_pure(n: int, letters: Sequence[int]) -> bool:
    return underlying_permutation(n, letters) == identity(n)


def inverse_word(letters: Sequence[int]) -> SignedWord:
    return tuple(-l for l in reversed(letters))


def free_reduce(letters: Iterable[int]) -> SignedWord:
    """Cancel adjacent inverse pairs to a fixed point.

    >>> free_reduce((1, -1))
    ()
    >>> free_reduce((1, 2, -2, 1))
    (1, 1)
    """
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a valid letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _apply_generator(word: list[int], p: int, positive: bool) -> list[int]:
    """Image of a free word under one Artin generator, freely reduced."""
    a, b = p, p + 1
    out: list[int] = []

    def push(x: int) -> None:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)

    for g in word:
        t = abs(g)
        if t != a and t != b:
            push(g)
        elif positive:
            if g == a:
                push(a); push(b); push(-a)
            elif g == -a:
                push(a); push(-b); push(-a)
            elif g == b:
                push(a)
            else:
                push(-a)
        else:
            if g == a:
                push(b)
            elif g == -a:
                push(-b)
            elif g == b:
                push(-b); push(a); push(b)
            else:
                push(-b); push(-a); push(b)
    return out


def artin_apply(n: int, letters: Sequence[int], strand: int) -> SignedWord:
    """Image of the meridian x_strand under the braid's automorphism."""
    if not 1 <= strand <= n:
        raise ValueError(f"strand {strand} out of range for n={n}")
    word = [strand]
    for l in letters:
        p = abs(l)
        if not 1 <= p <= n - 1:
            raise ValueError(f"braid letter {l} out of range for n={n}")
        word = _apply_generator(word, p, l > 0)
    return tuple(word)


def comb(n: int, letters: Sequence[int]) -> dict[int, SignedWord]:
    """Conjugator word A_i per strand, so the braid sends
    x_i -> A_i x_i A_i^-1.  Requires a pure braid.
    """
    if not is_pure(n, letters):
        raise NotPureError("cannot comb a non-pure braid")
    conjugators: dict[int, SignedWord] = {}
    for i in range(1, n + 1):
        image = artin_apply(n, letters, i)
        half = len(image) // 2
        # A reduced conjugate of x_i is literally A . x_i . A^-1.
        if (len(image) % 2 != 1 or image[half] != i
                or image[half + 1:] != inverse_word(image[:half])):
            raise AssertionError(
                f"image of x_{i} is not of conjugate shape: {image}")
        conjugators[i] = image[:half]
    return conjugators


def is_trivial(n: int, letters: Sequence[int]) -> bool:
    """True iff the braid's automorphism fixes every meridian."""
    if not is_pure(n, letters):
        raise NotPureError("triviality is only decided for pure braids")
    return all(artin_apply(n, letters, i) == (i,) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# Text format

def format_signed_word(letters: Sequence[int]) -> str:
    """Canonical ASCII form: "1+ 2- 1+"."""
    return " ".join(f"{abs(l)}{'+' if l > 0 else '-'}" for l in letters)


def parse_signed_word(text: str) -> SignedWord:
    """Parse "1+ 2- 1+" or the compact integer form "1,-2,1"."""
    text = text.strip()
    if not text:
        return ()
    letters: list[int] = []
    if "," in text:
        parts = text.split(",")
        for part in parts:
            try:
                v = int(part)
            except ValueError:
                raise ValueError(f"malformed braid letter {part!r}") from None
            if v == 0:
                raise ValueError("0 is not a valid braid letter")
            letters.append(v)
    else:
        for part in text.split():
            if len(part) < 2 or part[-1] not in "+-":
                raise ValueError(f"malformed braid letter {part!r}")
            try:
                p = int(part[:-1])
            except ValueError:
                raise ValueError(f"malformed braid letter {part!r}") from None
            if p <= 0:
                raise ValueError(f"malformed braid letter {part!r}")
            letters.append(p if part[-1] == "+" else -p)
    return tuple(letters)
