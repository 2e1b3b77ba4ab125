# youngbooks/young_book.py
from dataclasses import dataclass

import config
from qexact.laurent_series import LaurentSeries
from utils.errors import TooLargeError
from utils.logger import logger


@dataclass(frozen=True, eq=False)
class YoungBook:
    """A bijective filling of a staircase poset with 1..N, increasing along every cover."""

    poset: object
    fill: tuple  # fill[i] is the entry of poset.cells[i]

    def __post_init__(self):
        size = self.poset.size
        if sorted(self.fill) != list(range(1, size + 1)):
            raise ValueError(f"A Young book filling must use 1..{size} exactly once")
        broken = [(lo, hi) for lo, hi in self.poset.covers if self.fill[lo] > self.fill[hi]]
        if broken:
            cells = [(self.poset.cells[lo], self.poset.cells[hi]) for lo, hi in broken[:2]]
            raise ValueError(f"Filling is not increasing along covers: {cells}")

    @classmethod
    def from_entries(cls, poset, entries):
        """
        Args:
            poset (StaircasePoset): The shape.
            entries (dict): Cell -> entry.
        """
        return cls(poset, tuple(entries[cell] for cell in poset.cells))

    def reading_order(self):
        """Cell indices sorted by entry: reading_order()[i-1] holds entry i."""
        order = [0] * self.poset.size
        for index, entry in enumerate(self.fill):
            order[entry - 1] = index
        return order

    def descents(self):
        """Entries i such that i+1 is a descent after i."""
        order = self.reading_order()
        return frozenset(
            i + 1 for i in range(len(order) - 1) if self.poset.is_descent(order[i], order[i + 1])
        )

    def maj(self):
        return sum(self.descents())

    def omega_word(self):
        """The permutation i -> omega(cell holding i)."""
        return tuple(index + 1 for index in self.reading_order())

    def word_descents(self):
        """Descents of omega_word as a permutation."""
        word = self.omega_word()
        return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])

    def to_json(self):
        return {
            "cells": [
                dict(cell.to_json(), entry=entry) for cell, entry in zip(self.poset.cells, self.fill)
            ]
        }


def descents(book):
    return book.descents()


def maj(book):
    return book.maj()


def _check_guard(poset, guard):
    limit = config.ENUM_GUARD if guard is None else guard
    if poset.size > limit:
        raise TooLargeError(f"Poset has {poset.size} cells, above the enumeration guard {limit}")


def _available(poset, mask):
    return [
        i for i in range(poset.size)
        if not (mask >> i) & 1 and poset.lower_masks[i] & ~mask == 0
    ]


def enumerate_young_books(poset, guard=None):
    """
    Streams every Young book (linear extension) of the poset once.
    Args:
        poset (StaircasePoset): The shape.
        guard (int, optional): Largest allowed N. Defaults to config.ENUM_GUARD.
    Yields:
        YoungBook: In lexicographic order of the omega-index choices.
    """
    _check_guard(poset, guard)
    fill = [0] * poset.size

    def extend(mask, entry):
        if entry > poset.size:
            yield YoungBook(poset, tuple(fill))
            return
        for index in _available(poset, mask):
            fill[index] = entry
            yield from extend(mask | (1 << index), entry + 1)

    yield from extend(0, 1)


def count_linear_extensions(poset):
    """Number of Young books, by memoization over order ideals (bitmasks)."""
    full = (1 << poset.size) - 1
    memo = {full: 1}

    def count(mask):
        if mask in memo:
            return memo[mask]
        total = sum(count(mask | (1 << i)) for i in _available(poset, mask))
        memo[mask] = total
        return total

    result = count(0)
    logger.debug(f"{poset!r}: {result} linear extensions over {len(memo)} order ideals")
    return result


def _maj_gf_dynamic(poset):
    size = poset.size
    descent = [[poset.is_descent(a, b) for b in range(size)] for a in range(size)]
    # states after placing `placed` entries: (ideal, cell holding the last entry) -> {maj: count}
    states = {}
    for index in _available(poset, 0):
        states[(1 << index, index)] = {0: 1}
    for placed in range(1, size):
        following = {}
        for (mask, last), poly in states.items():
            for index in _available(poset, mask):
                step = placed if descent[last][index] else 0
                target = following.setdefault((mask | (1 << index), index), {})
                for exponent, count in poly.items():
                    key = exponent + step
                    target[key] = target.get(key, 0) + count
        states = following
    totals = {}
    for poly in states.values():
        for exponent, count in poly.items():
            totals[exponent] = totals.get(exponent, 0) + count
    return totals


def maj_gf(poset, method="dp", guard=None):
    """
    Sum over Young books of q^{maj}.
    Args:
        poset (StaircasePoset): The shape.
        method (str): 'dp' (dynamic programming over order ideals) or 'enumerate'.
        guard (int, optional): Largest allowed N. Defaults to config.ENUM_GUARD.
    Returns:
        LaurentSeries: Polynomial in q with nonnegative integer coefficients.
    """
    _check_guard(poset, guard)
    if method == "dp":
        totals = _maj_gf_dynamic(poset)
    elif method == "enumerate":
        totals = {}
        for book in enumerate_young_books(poset, guard=poset.size):
            key = book.maj()
            totals[key] = totals.get(key, 0) + 1
    else:
        raise ValueError(f"Unsupported maj_gf method: {method}")
    return LaurentSeries({2 * e: c for e, c in totals.items()})
