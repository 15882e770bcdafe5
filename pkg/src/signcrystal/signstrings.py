"""Sign words over '+'/'-' and their crystal combinatorics.

The reduced form of a word repeatedly cancels a '-' together with a later
'+' once everything strictly between them is already cancelled.
Equivalently, in a single left-to-right pass, each '+' cancels the nearest
uncancelled '-' to its left.  Surviving symbols drive the statistics and
the partial raising/lowering maps.  Positions are 1-based throughout.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .errors import ValidationError

PLUS = "+"
MINUS = "-"
CANCELLED = "0"

_ALPHABET = frozenset(PLUS + MINUS)


def check_sign_string(t: str) -> str:
    """Validate a word over '+'/'-' (empty allowed) and return it."""
    if not isinstance(t, str):
        raise ValidationError(f"sign string must be a str, got {type(t).__name__}")
    stray = set(t) - _ALPHABET
    if stray:
        raise ValidationError(
            "sign string may contain only '+' and '-', found "
            + ", ".join(repr(c) for c in sorted(stray))
        )
    return t


def reduced_form(t: str) -> str:
    check_sign_string(t)
    out = list(t)
    open_minus: list[int] = []
    for i, sym in enumerate(t):
        if sym == MINUS:
            open_minus.append(i)
        elif open_minus:
            out[open_minus.pop()] = CANCELLED
            out[i] = CANCELLED
    return "".join(out)


def statistics(t: str) -> tuple[int, int]:
    """(h_plus, h_minus): counts of surviving '+' and '-'."""
    r = reduced_form(t)
    return r.count(PLUS), r.count(MINUS)


def h_plus(t: str) -> int:
    return statistics(t)[0]


def h_minus(t: str) -> int:
    return statistics(t)[1]


def weight(t: str) -> int:
    """h_minus - h_plus; cancellation is pairwise, so this is #'-' - #'+'."""
    hp, hm = statistics(t)
    return hm - hp


def e_tilde(t: str) -> tuple[str, int] | None:
    """Flip the rightmost surviving '+' to '-'; None when none survives.

    Returns the new word together with the 1-based flip position.
    """
    r = reduced_form(t)
    i = r.rfind(PLUS)
    if i < 0:
        return None
    return t[:i] + MINUS + t[i + 1:], i + 1


def f_tilde(t: str) -> tuple[str, int] | None:
    """Flip the leftmost surviving '-' to '+'; None when none survives."""
    r = reduced_form(t)
    i = r.find(MINUS)
    if i < 0:
        return None
    return t[:i] + PLUS + t[i + 1:], i + 1


def suffix_h_minus(t: str, k: int) -> int:
    """h_minus of the suffix starting at position k; k = n+1 gives 0."""
    check_sign_string(t)
    if not 1 <= k <= len(t) + 1:
        raise ValidationError(f"suffix start {k} out of range 1..{len(t) + 1}")
    return h_minus(t[k - 1:])


def succ_compare(a: str, b: str) -> int:
    """Total order on equal-length words: judged at the largest differing
    position, '-' above '+'.  Returns +1 when a is greater, -1 when b is,
    0 on equality."""
    check_sign_string(a)
    check_sign_string(b)
    if len(a) != len(b):
        raise ValidationError(f"cannot compare words of lengths {len(a)} and {len(b)}")
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return 1 if a[i] == MINUS else -1
    return 0


def plus_flips(t: str) -> list[tuple[int, str]]:
    """All single flips '+' -> '-', by ascending flip position.

    Ascending position agrees with ascending succ_compare order of the
    flipped words.
    """
    check_sign_string(t)
    return [(i + 1, t[:i] + MINUS + t[i + 1:]) for i, s in enumerate(t) if s == PLUS]


def minus_flips(t: str) -> list[tuple[int, str]]:
    """All single flips '-' -> '+', by ascending flip position."""
    check_sign_string(t)
    return [(i + 1, t[:i] + PLUS + t[i + 1:]) for i, s in enumerate(t) if s == MINUS]


def iter_words(n: int) -> Iterator[str]:
    """All words of length n, '+' before '-' at every position."""
    for symbols in itertools.product(PLUS + MINUS, repeat=n):
        yield "".join(symbols)
