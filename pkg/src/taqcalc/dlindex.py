"""Indexing words for Dyer-Lashof monomials.

A word ``I = ((e1, i1), ..., (el, il))`` stands for
beta^e1 Q^i1 ... beta^el Q^il, applied right to left.  At p = 2 every
``e`` is 0.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

from .modp import PrimeField, _as_field

DLIndex = Tuple[Tuple[int, int], ...]

EMPTY: DLIndex = ()


def make_index(entries: Iterable, field=None) -> DLIndex:
    word = tuple((int(e), int(i)) for e, i in entries)
    for e, i in word:
        if i < 1 or e not in (0, 1):
            raise ValueError(f"bad word entry {(e, i)}")
        if field is not None and _as_field(field).p == 2 and e:
            raise ValueError("beta does not occur at p = 2")
    return word


def to_flat(word: DLIndex) -> list[int]:
    return [x for pair in word for x in pair]


def from_flat(flat: Iterable[int], field=None) -> DLIndex:
    flat = list(flat)
    if len(flat) % 2:
        raise ValueError("flat word must have even length")
    return make_index(zip(flat[::2], flat[1::2]), field)


def entry_shift(e: int, i: int, p: int) -> int:
    return i if p == 2 else 2 * i * (p - 1) - e


def degree_shift(word: DLIndex, field) -> int:
    p = _as_field(field).p
    return sum(entry_shift(e, i, p) for e, i in word)


def is_admissible(word: DLIndex, field) -> bool:
    p = _as_field(field).p
    return all(i <= p * j - f for (_, i), (f, j) in zip(word, word[1:]))


def _leading_ok(e: int, i: int, m: int, p: int) -> bool:
    # strict excess: a new free generator rather than a p-th power or zero
    if p == 2:
        return i > m
    return 2 * i > m


def is_generator(word: DLIndex, n: int, field) -> bool:
    """Whether Q^I applied to a class of degree n gives a free generator."""
    p = _as_field(field).p
    if n < 0:
        raise ValueError("only connective classes are supported")
    if not is_admissible(word, p):
        raise ValueError(f"word {to_flat(word)} is not admissible")
    m = n
    for e, i in reversed(word):
        if not _leading_ok(e, i, m, p):
            return False
        m += entry_shift(e, i, p)
    return True


def sort_key(word: DLIndex, n: int, p: int):
    return (n + degree_shift(word, p), len(word), to_flat(word))


def enumerate_generators(n: int, field, max_total_degree: int) -> list[DLIndex]:
    """All admissible generator words on a degree-n class up to a degree bound."""
    p = _as_field(field).p
    if n < 0:
        raise ValueError("only connective classes are supported")
    return list(_enumerate(n, p, max_total_degree))


@lru_cache(maxsize=None)
def _enumerate(n: int, p: int, bound: int) -> tuple:
    found = []
    # grow words leftwards; every prefix-removal of a generator is a generator
    stack = [(EMPTY, n)]
    while stack:
        word, deg = stack.pop()
        if deg > bound:
            continue
        found.append(word)
        for e in (0, 1) if p > 2 else (0,):
            i = 1
            while True:
                new_deg = deg + entry_shift(e, i, p)
                if new_deg > bound:
                    break
                if word and i > p * word[0][1] - word[0][0]:
                    break
                if _leading_ok(e, i, deg, p):
                    stack.append((((e, i),) + word, new_deg))
                i += 1
    return tuple(sorted(found, key=lambda w: sort_key(w, n, p)))


def word_label(word: DLIndex) -> str:
    return "Q[" + ",".join(map(str, to_flat(word))) + "]"
