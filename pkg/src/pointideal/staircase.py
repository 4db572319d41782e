"""Finite lower sets of exponent vectors ("staircases") and their corners.

A staircase is a finite subset D of N_0^n closed under decrementing any
coordinate.  Its corner set consists of the minimal elements of the
complement: exactly the exponents beta outside D such that beta - e_i
lies in D whenever beta_i > 0.  Staircases carry an addition that merges
two of them column by column over the projection dropping the first
coordinate, summing fiber sizes -- the "drop the pieces down the 1-axis"
picture.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .poly import Exponent, lex_key


class NotLowerSetError(ValueError):
    """A cell set violates the lower-set property."""

    def __init__(self, cell: Exponent, axis: int):
        self.cell = cell
        self.axis = axis
        super().__init__(
            f"not a lower set: {cell} present but {_dec(cell, axis)} missing "
            f"(coordinate {axis + 1})"
        )


def _dec(cell: Exponent, axis: int) -> Exponent:
    return cell[:axis] + (cell[axis] - 1,) + cell[axis + 1 :]


class Staircase:
    """An immutable validated lower set."""

    __slots__ = ("n", "cells", "_corners")

    def __init__(self, n: int, cells: Iterable[Exponent] = ()):
        if n < 1:
            raise ValueError("ambient dimension must be >= 1")
        cellset = frozenset(tuple(c) for c in cells)
        for c in cellset:
            if len(c) != n or any(x < 0 or not isinstance(x, int) for x in c):
                raise ValueError(f"bad cell {c} for dimension {n}")
            for i in range(n):
                if c[i] and _dec(c, i) not in cellset:
                    raise NotLowerSetError(c, i)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cells", cellset)
        object.__setattr__(self, "_corners", None)

    def __setattr__(self, name, value):
        raise AttributeError("Staircase is immutable")

    def __len__(self):
        return len(self.cells)

    def __contains__(self, exp) -> bool:
        return tuple(exp) in self.cells

    def __eq__(self, other):
        return isinstance(other, Staircase) and self.n == other.n and self.cells == other.cells

    def __hash__(self):
        return hash((self.n, self.cells))

    def __repr__(self):
        return f"Staircase({self.n}, {self.sorted_cells()})"

    def sorted_cells(self) -> list[Exponent]:
        return sorted(self.cells, key=lex_key)

    def corners(self) -> frozenset[Exponent]:
        """Minimal exponents of the complement; finite and nonempty."""
        if self._corners is not None:
            return self._corners
        if not self.cells:
            result = frozenset({(0,) * self.n})
        else:
            candidates = {
                c[:i] + (c[i] + 1,) + c[i + 1 :] for c in self.cells for i in range(self.n)
            } - self.cells
            result = frozenset(
                b
                for b in candidates
                if all(b[i] == 0 or _dec(b, i) in self.cells for i in range(self.n))
            )
        object.__setattr__(self, "_corners", result)
        return result

    def sorted_corners(self) -> list[Exponent]:
        return sorted(self.corners(), key=lex_key)

    def project_drop_first(self) -> "Staircase":
        """Image under dropping the first coordinate; a lower set again."""
        if self.n < 2:
            raise ValueError("projection needs dimension >= 2")
        return Staircase(self.n - 1, {c[1:] for c in self.cells})

    def fiber_count(self, dhat: Exponent) -> int:
        """Number of cells whose last n-1 coordinates equal dhat."""
        dhat = tuple(dhat)
        if len(dhat) != self.n - 1:
            raise ValueError(f"fiber index {dhat} has wrong dimension")
        return sum(1 for c in self.cells if c[1:] == dhat)

    def column_counts(self) -> Counter:
        counts: Counter = Counter()
        for c in self.cells:
            counts[c[1:]] += 1
        return counts

    def prepend_zero(self) -> "Staircase":
        """Embed into one more dimension as {(0,) + d}."""
        return Staircase(self.n + 1, {(0,) + c for c in self.cells})

    def append_zero(self) -> "Staircase":
        """Embed into one more dimension as {d + (0,)}."""
        return Staircase(self.n + 1, {c + (0,) for c in self.cells})

    def drop_last(self) -> "Staircase":
        """Inverse of append_zero; requires every last coordinate zero."""
        if self.n < 2:
            raise ValueError("cannot drop below dimension 1")
        if any(c[-1] for c in self.cells):
            raise ValueError("a cell has nonzero last coordinate")
        return Staircase(self.n - 1, {c[:-1] for c in self.cells})

    def __add__(self, other):
        if not isinstance(other, Staircase):
            return NotImplemented
        return staircase_sum((self, other), self.n)

    def render(self) -> str:
        """ASCII picture for n = 2: rows are X2 descending, 'o' marks a
        cell, '*' marks a corner."""
        if self.n != 2:
            raise ValueError("rendering is available for dimension 2 only")
        corners = self.corners()
        height = max(y for _, y in corners) + 1
        widths = Counter(y for _, y in self.cells)
        lines = []
        for y in range(height - 1, -1, -1):
            row = ["o"] * widths[y]
            if (widths[y], y) in corners:
                row.append("*")
            lines.append(" ".join(row))
        return "\n".join(lines)


def staircase_sum(family: Iterable[Staircase], n: int) -> Staircase:
    """Sum of a finite family: columns over the drop-first projection are
    stacked, the fiber size over each column being the sum of the
    family's fiber sizes.  The empty family yields the empty staircase,
    which is the neutral element."""
    counts: Counter = Counter()
    for d in family:
        if d.n != n:
            raise ValueError(f"dimension mismatch: {d.n} vs {n}")
        counts.update(d.column_counts())
    cells = {(j,) + dhat for dhat, c in counts.items() for j in range(c)}
    return Staircase(n, cells)
