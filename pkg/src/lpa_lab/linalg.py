"""Exact integer matrices and the Smith normal form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from . import kernels
from .errors import InputError, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if not rows or not rows[0]:
            raise InputError("matrices need at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise InputError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    T = property(transpose)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return IntMatrix.of([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries])

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, x)) for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> dict:
        return {"rows": self.tolist()}


@dataclass(frozen=True)
class SmithDecomposition:
    """``P @ M @ Q == D`` with ``P`` and ``Q`` unimodular."""

    P: IntMatrix
    D: IntMatrix
    Q: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    def to_json(self) -> dict:
        return {"P": self.P.tolist(), "D": self.D.tolist(), "Q": self.Q.tolist()}


def _as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.of(m)


def smith_normal_form(m, precision: str = "auto") -> SmithDecomposition:
    """Smith normal form with non-negative diagonal ``d1 | d2 | ...`` and zeros last.

    Deterministic: equal inputs give equal ``P``, ``D`` and ``Q`` whichever
    backend runs.
    """
    m = _as_matrix(m)
    p, d, q = kernels.snf(m.tolist(), precision)
    return SmithDecomposition(IntMatrix.of(p), IntMatrix.of(d), IntMatrix.of(q))


def determinant(m, precision: str = "auto") -> int:
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return kernels.det(m.tolist(), precision)


def content_gcd(m) -> int:
    """gcd of all entries (0 for the zero matrix)."""
    m = _as_matrix(m)
    return reduce(math.gcd, (x for r in m.entries for x in r), 0)
