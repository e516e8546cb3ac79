"""Dense linear algebra over GF(2).

Rows are packed into Python integers: bit ``j`` of a row word is the entry in
column ``j``.  Elimination records every row addition so that the same
operations can be replayed elsewhere (for instance as CNOT gates).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

__all__ = ["GF2Matrix", "RowOpLog", "eliminate", "solve", "solve_many", "multiply", "replay"]

RowOpLog = list  # list[tuple[int, int]]: (source, target) meaning row[target] ^= row[source]


class GF2Matrix:
    """Bit matrix with ``nrows`` rows and ``ncols`` columns.

    Parameters
    ----------
    rows : sequence of int
        Packed row words; bit ``j`` of ``rows[i]`` is entry ``(i, j)``.
    ncols : int
        Number of columns.
    """

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[int], ncols: int) -> None:
        mask = (1 << ncols) - 1
        self.rows = [int(r) for r in rows]
        self.ncols = int(ncols)
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row word has bits outside the column range")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> GF2Matrix:
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> GF2Matrix:
        """Build from strings such as ``"11000"`` (leftmost character is column 0)."""
        rows = list(rows)
        ncols = len(rows[0]) if rows else 0
        words = []
        for s in rows:
            if len(s) != ncols or set(s) - {"0", "1"}:
                raise ValueError(f"bad row string {s!r}")
            words.append(sum(1 << j for j, ch in enumerate(s) if ch == "1"))
        return cls(words, ncols)

    @classmethod
    def from_array(cls, a) -> GF2Matrix:
        a = np.asarray(a, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        words = [sum(1 << j for j in np.flatnonzero(row)) for row in a]
        return cls(words, a.shape[1])

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(self.ncols):
                out[i, j] = (r >> j) & 1
        return out

    def to_strings(self) -> list[str]:
        return ["".join("1" if (r >> j) & 1 else "0" for j in range(self.ncols)) for r in self.rows]

    def copy(self) -> GF2Matrix:
        return GF2Matrix(list(self.rows), self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(idx)
        return (self.rows[i] >> j) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __repr__(self) -> str:
        return f"GF2Matrix({self.to_strings()!r})"

    def add_row(self, source: int, target: int) -> None:
        """In place: ``row[target] ^= row[source]``."""
        if source == target:
            raise ValueError("cannot add a row to itself")
        self.rows[target] ^= self.rows[source]

    def transpose(self) -> GF2Matrix:
        words = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    words[j] |= 1 << i
                r >>= 1
                j += 1
        return GF2Matrix(words, self.nrows)

    def hstack(self, other: GF2Matrix) -> GF2Matrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return GF2Matrix(
            [a | (b << self.ncols) for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols
        )

    def rank(self) -> int:
        return eliminate(self)[2]


def _eliminate_words(rows: list[int], ncols: int, log: list | None) -> int:
    """Reduce ``rows`` in place to reduced row-echelon form over the first ``ncols`` columns."""
    pivot_row = 0
    n = len(rows)
    for col in range(ncols):
        if pivot_row == n:
            break
        bit = 1 << col
        found = -1
        for r in range(pivot_row, n):
            if rows[r] & bit:
                found = r
                break
        if found < 0:
            continue
        if found != pivot_row:
            # bring the bit up by an addition rather than a swap, so the log only holds additions
            rows[pivot_row] ^= rows[found]
            if log is not None:
                log.append((found, pivot_row))
        prow = rows[pivot_row]
        for r in range(n):
            if r != pivot_row and rows[r] & bit:
                rows[r] ^= prow
                if log is not None:
                    log.append((pivot_row, r))
        pivot_row += 1
    return pivot_row


def eliminate(m: GF2Matrix) -> tuple[GF2Matrix, RowOpLog, int]:
    """Gauss-Jordan elimination.

    Pivots are taken from the first row (scanning top-down) holding a one in the
    current column.  Rows are never swapped.

    Returns
    -------
    reduced : GF2Matrix
        Reduced row-echelon form of ``m``.
    log : list of (source, target)
        Row additions in the order performed.
    rank : int
    """
    rows = list(m.rows)
    log: RowOpLog = []
    rank = _eliminate_words(rows, m.ncols, log)
    return GF2Matrix(rows, m.ncols), log, rank


def replay(log: Iterable[tuple[int, int]], m: GF2Matrix) -> GF2Matrix:
    """Apply the row additions of ``log`` to a copy of ``m``."""
    out = m.copy()
    for source, target in log:
        out.add_row(source, target)
    return out


def _bits_to_int(bits: Sequence[int]) -> int:
    return sum(1 << i for i, b in enumerate(bits) if b & 1)


def solve_many(a: GF2Matrix, rhs: Sequence[Sequence[int]]) -> list[list[int] | None]:
    """Solve ``a x = b`` for several right-hand sides with one shared elimination.

    Free variables are fixed to 0.  Entries of the result are ``None`` for
    inconsistent systems.
    """
    n, k = a.nrows, a.ncols
    for b in rhs:
        if len(b) != n:
            raise ValueError(f"right-hand side has length {len(b)}, expected {n}")
    # augment: column k + j of row i holds rhs[j][i]
    rows = list(a.rows)
    for j, b in enumerate(rhs):
        shift = k + j
        for i in range(n):
            if b[i] & 1:
                rows[i] |= 1 << shift
    rank = _eliminate_words(rows, k, None)
    colmask = (1 << k) - 1
    pivots = []
    for i in range(rank):
        low = rows[i] & colmask
        pivots.append((low & -low).bit_length() - 1)
    out: list[list[int] | None] = []
    for j in range(len(rhs)):
        shift = k + j
        if any((rows[i] >> shift) & 1 for i in range(rank, n)):
            out.append(None)
            continue
        x = [0] * k
        for i, p in enumerate(pivots):
            x[p] = (rows[i] >> shift) & 1
        out.append(x)
    return out


def solve(a: GF2Matrix, b: Sequence[int]) -> list[int] | None:
    """Return one solution of ``a x = b`` (free variables 0), or ``None``."""
    return solve_many(a, [b])[0]


def multiply(a: GF2Matrix, x: Sequence[int]) -> list[int]:
    """Matrix-vector product over GF(2)."""
    if len(x) != a.ncols:
        raise ValueError(f"vector has length {len(x)}, expected {a.ncols}")
    xw = _bits_to_int(x)
    return [bin(r & xw).count("1") & 1 for r in a.rows]
