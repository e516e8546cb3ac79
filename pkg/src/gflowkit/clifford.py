"""The 24-element single-qubit Clifford group, modulo global phase.

Each element is stored by a canonical Euler triple ``(a, b, c)`` of quarter
turns, meaning the matrix ``Z(a*pi/2) @ X(b*pi/2) @ Z(c*pi/2)``.  The
canonical triple is the lexicographically smallest one producing the element.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

__all__ = ["LocalClifford", "zphase_matrix", "xphase_matrix", "HADAMARD"]

_TOL = 1e-9
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def zphase_matrix(theta: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=complex)


def xphase_matrix(theta: float) -> np.ndarray:
    return HADAMARD @ zphase_matrix(theta) @ HADAMARD


def _euler_matrix(a: int, b: int, c: int) -> np.ndarray:
    q = np.pi / 2
    return zphase_matrix(a * q) @ xphase_matrix(b * q) @ zphase_matrix(c * q)


def _same_up_to_phase(m: np.ndarray, n: np.ndarray) -> bool:
    k = int(np.argmax(np.abs(n)))
    ref = n.flat[k]
    if abs(ref) < _TOL:
        return False
    z = m.flat[k] / ref
    return abs(abs(z) - 1) < 1e-6 and np.max(np.abs(m - z * n)) < _TOL * 10


@lru_cache(maxsize=None)
def _table() -> tuple[tuple[tuple[int, int, int], ...], tuple[np.ndarray, ...]]:
    triples: list[tuple[int, int, int]] = []
    mats: list[np.ndarray] = []
    for t in product(range(4), repeat=3):
        m = _euler_matrix(*t)
        if not any(_same_up_to_phase(m, n) for n in mats):
            triples.append(t)
            mats.append(m)
    return tuple(triples), tuple(mats)


def _index_of(m: np.ndarray) -> int:
    for i, n in enumerate(_table()[1]):
        if _same_up_to_phase(m, n):
            return i
    raise ValueError("matrix is not a single-qubit Clifford")


@lru_cache(maxsize=None)
def _compose_index(i: int, j: int) -> int:
    mats = _table()[1]
    return _index_of(mats[i] @ mats[j])


class LocalClifford:
    """A single-qubit Clifford unitary up to global phase."""

    __slots__ = ("_index",)

    def __init__(self, a: int = 0, b: int = 0, c: int = 0) -> None:
        self._index = _index_of(_euler_matrix(a % 4, b % 4, c % 4))

    @classmethod
    def _from_index(cls, index: int) -> LocalClifford:
        obj = cls.__new__(cls)
        obj._index = index
        return obj

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> LocalClifford:
        return cls._from_index(_index_of(np.asarray(m, dtype=complex)))

    @classmethod
    def identity(cls) -> LocalClifford:
        return cls(0, 0, 0)

    @classmethod
    def hadamard(cls) -> LocalClifford:
        return cls.from_matrix(HADAMARD)

    @classmethod
    def z(cls, quarter_turns: int) -> LocalClifford:
        return cls(quarter_turns, 0, 0)

    @classmethod
    def x(cls, quarter_turns: int) -> LocalClifford:
        return cls(0, quarter_turns, 0)

    @staticmethod
    def all() -> list[LocalClifford]:
        return [LocalClifford._from_index(i) for i in range(len(_table()[0]))]

    @property
    def triple(self) -> tuple[int, int, int]:
        return _table()[0][self._index]

    def matrix(self) -> np.ndarray:
        return _table()[1][self._index].copy()

    def is_identity(self) -> bool:
        return self.triple == (0, 0, 0)

    def __matmul__(self, other: LocalClifford) -> LocalClifford:
        """Matrix product: ``(p @ q)`` applies ``q`` first, then ``p``."""
        return LocalClifford._from_index(_compose_index(self._index, other._index))

    def inverse(self) -> LocalClifford:
        return LocalClifford.from_matrix(self.matrix().conj().T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalClifford):
            return NotImplemented
        return self._index == other._index

    def __hash__(self) -> int:
        return hash(("LocalClifford", self._index))

    def __repr__(self) -> str:
        return f"LocalClifford{self.triple}"
