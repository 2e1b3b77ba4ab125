# youngbooks/staircase_poset.py
"""Cells and covering relation of a multi-page staircase with shared diagonal."""
from dataclasses import dataclass

from partitions.partition import as_composition
from qexact.q_gadgets import binomial
from utils.errors import BadShapeError
from utils.logger import logger


@dataclass(frozen=True)
class Cell:
    """A cell (row, col) on page 1..m; diagonal cells (i, i) are shared and carry page 0."""

    page: int
    row: int
    col: int

    @property
    def is_diagonal(self):
        return self.page == 0

    def omega_key(self):
        # row label first, then page (diagonal first), then column
        return (self.row, self.page, self.col)

    def to_json(self):
        return {"page": self.page, "row": self.row, "col": self.col}


class StaircasePoset:
    """
    The poset on the cells of m staircase pages glued along their diagonal.

    Cells are stored in the order of the fixed linear extension omega, so
    omega(cell) = index + 1 and every cover goes from a smaller to a larger index.
    """

    def __init__(self, n, rvec, svec):
        """
        Args:
            n (int): Number of diagonal cells, n >= 1.
            rvec (Composition): Extra rows above the diagonal, one entry per page.
            svec (Composition): Extra columns right of the diagonal, one entry per page.
        """
        rvec, svec = as_composition(rvec), as_composition(svec)
        if n < 1:
            raise BadShapeError(f"Staircase needs n >= 1, got {n}")
        if len(rvec) != len(svec) or len(rvec) < 1:
            raise BadShapeError(f"r and s must have the same positive length, got {rvec} and {svec}")
        self.n = n
        self.rvec = rvec
        self.svec = svec
        self.m = len(rvec)

        cells = {Cell(0, i, i) for i in range(1, n + 1)}
        for page in range(1, self.m + 1):
            for row, col in self._page_coordinates(page):
                cells.add(self._cell(page, row, col))
        self.cells = sorted(cells, key=Cell.omega_key)
        self.index = {cell: i for i, cell in enumerate(self.cells)}
        self.size = len(self.cells)

        expected = self.m * binomial(n, 2) + (rvec.total + svec.total + 1) * n + sum(
            r * s for r, s in zip(rvec, svec)
        )
        if self.size != expected:
            raise RuntimeError(f"Staircase cell count {self.size} differs from expected {expected}")

        covers = set()
        for page in range(1, self.m + 1):
            coords = set(self._page_coordinates(page))
            for row, col in coords:
                low = self.index[self._cell(page, row, col)]
                for nxt in ((row, col + 1), (row + 1, col)):
                    if nxt in coords:
                        covers.add((low, self.index[self._cell(page, *nxt)]))
        self.covers = sorted(covers)
        if any(low >= high for low, high in self.covers):
            raise RuntimeError("omega is not a linear extension of the staircase order")

        self.lower_covers = [[] for _ in self.cells]
        self.upper_covers = [[] for _ in self.cells]
        for low, high in self.covers:
            self.lower_covers[high].append(low)
            self.upper_covers[low].append(high)
        self.lower_masks = [sum(1 << j for j in lows) for lows in self.lower_covers]
        self.diagonal_indices = [self.index[Cell(0, i, i)] for i in range(1, n + 1)]
        logger.debug(f"StaircasePoset n={n}, r=({rvec}), s=({svec}) built with {self.size} cells.")

    def _page_coordinates(self, page):
        r, s = self.rvec[page - 1], self.svec[page - 1]
        for row in range(-r + 1, self.n + 1):
            first = 1 if row <= 0 else row
            for col in range(first, self.n + s + 1):
                yield row, col

    @staticmethod
    def _cell(page, row, col):
        return Cell(0, row, col) if row >= 1 and row == col else Cell(page, row, col)

    def omega(self, cell):
        return self.index[cell] + 1

    def is_descent(self, here, after):
        """
        Whether entry i+1 in cell index `after` is a descent relative to entry i in `here`.
        A descent means a strictly smaller row label, or the same row label on an
        earlier page when both cells are off the diagonal.
        """
        a, b = self.cells[here], self.cells[after]
        if b.row < a.row:
            return True
        return b.row == a.row and not a.is_diagonal and not b.is_diagonal and b.page < a.page

    def params(self):
        return {"n": self.n, "r": list(self.rvec), "s": list(self.svec)}

    def __repr__(self):
        return f"StaircasePoset(n={self.n}, r=({self.rvec}), s=({self.svec}), N={self.size})"


def build_poset(n, rvec, svec):
    """Builds the (n, r, s) staircase poset; compositions may be given as tuples, ints or '1,0' strings."""
    return StaircasePoset(n, rvec, svec)
