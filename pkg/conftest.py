# conftest.py
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from youngbooks.staircase_poset import Cell, build_poset  # noqa: E402
from youngbooks.young_book import YoungBook  # noqa: E402


def _page_entries(page, rows):
    # rows: {row label: (first column, [entries...])}; diagonal cells get page 0
    entries = {}
    for row, (first, values) in rows.items():
        for offset, value in enumerate(values):
            col = first + offset
            cell = Cell(0, row, col) if row >= 1 and row == col else Cell(page, row, col)
            entries[cell] = value
    return entries


@pytest.fixture
def two_page_poset():
    """n = 3, r = (1, 2), s = (0, 1): 23 cells."""
    return build_poset(3, (1, 2), (0, 1))


@pytest.fixture
def two_page_book(two_page_poset):
    """A Young book of the two-page staircase with descents {1,5,8,10,13,17,21}."""
    entries = _page_entries(1, {
        0: (1, [1, 9, 11]),
        1: (1, [12, 14, 15]),
        2: (2, [16, 17]),
        3: (3, [21]),
    })
    entries.update(_page_entries(2, {
        -1: (1, [2, 3, 6, 7]),
        0: (1, [4, 5, 8, 10]),
        1: (1, [12, 13, 18, 19]),
        2: (2, [16, 20, 22]),
        3: (3, [21, 23]),
    }))
    return YoungBook.from_entries(two_page_poset, entries)
