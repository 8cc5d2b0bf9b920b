"""Sparse exact linear systems over Q(i).

Matrix entries are :class:`GaussianRational`; right-hand sides may be any
module elements over Q(i) (scalars or :class:`Poly`), which lets a single
elimination certify statements identically in a symbolic parameter.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any, Hashable

from .scalars import GaussianRational, ONE

__all__ = ["LinearSystem", "Solution", "Inconsistency", "invert_matrix"]


@dataclass
class Inconsistency:
    """A combination of equations reducing to ``0 = residual`` with residual != 0."""

    label: Any
    residual: Any

    def __str__(self):
        return f"equation {self.label!r} reduces to 0 = {self.residual}"


@dataclass
class Solution:
    values: dict  # unknown -> value (free unknowns set to zero)
    kernel: list = field(default_factory=list)  # list of dicts unknown -> scalar
    rank: int = 0


class LinearSystem:
    """Incremental semi-echelon elimination.

    Each stored row is reduced against all earlier pivots, so subtracting
    pivots in insertion order fully reduces a new row in one sweep.
    """

    def __init__(self, unknowns=None, zero=None):
        self.unknowns: list = list(unknowns) if unknowns is not None else []
        self._pos = {u: i for i, u in enumerate(self.unknowns)}
        self.zero = GaussianRational(0) if zero is None else zero
        self._rows: list = []  # (pivot, row, rhs)
        self._pivot_index: dict = {}
        self.inconsistencies: list = []
        self.n_equations = 0

    def add_unknown(self, name: Hashable) -> None:
        if name not in self._pos:
            self._pos[name] = len(self.unknowns)
            self.unknowns.append(name)

    def add_equation(self, row: dict, rhs=None, label=None) -> None:
        """Impose ``sum(row[x] * x) == rhs``."""
        self.n_equations += 1
        rhs = self.zero if rhs is None else rhs
        row = {k: v for k, v in row.items() if v}
        for k in row:
            if k not in self._pos:
                self.add_unknown(k)
        heap = [self._pivot_index[k] for k in row if k in self._pivot_index]
        heapq.heapify(heap)
        seen = set(heap)
        while heap:
            idx = heapq.heappop(heap)
            piv, prow, prhs = self._rows[idx]
            f = row.get(piv)
            if not f:
                continue
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                    j = self._pivot_index.get(k)
                    if j is not None and j not in seen and j > idx:
                        seen.add(j)
                        heapq.heappush(heap, j)
                else:
                    row.pop(k, None)
            rhs = rhs - prhs * f
        if not row:
            if rhs:
                self.inconsistencies.append(Inconsistency(label, rhs))
            return
        piv = min(row, key=self._order_key)
        inv = row[piv].inverse()
        row = {k: v * inv for k, v in row.items()}
        self._pivot_index[piv] = len(self._rows)
        self._rows.append((piv, row, rhs * inv))

    def _order_key(self, k):
        # stable pivot choice: earliest declared unknown
        return self._pos[k]

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    @property
    def rank(self) -> int:
        return len(self._rows)

    def free_unknowns(self) -> list:
        return [u for u in self.unknowns if u not in self._pivot_index]

    def _back_substitute(self, fixed: dict, homogeneous: bool) -> dict:
        vals = dict(fixed)
        for piv, row, rhs in reversed(self._rows):
            acc = GaussianRational(0) if homogeneous else rhs
            for k, v in row.items():
                if k != piv:
                    x = vals.get(k)
                    if x is not None and x:
                        acc = acc - x * v
            vals[piv] = acc
        return vals

    def solve(self) -> Solution:
        """Particular solution (free unknowns zero) and a kernel basis.
        Raises ``ValueError`` if inconsistent; check :attr:`consistent` first."""
        if self.inconsistencies:
            raise ValueError(str(self.inconsistencies[0]))
        free = self.free_unknowns()
        values = self._back_substitute({f: self.zero for f in free}, homogeneous=False)
        kernel = []
        zero_s = GaussianRational(0)
        for f in free:
            fixed = {g: zero_s for g in free}
            fixed[f] = ONE
            vec = self._back_substitute(fixed, homogeneous=True)
            kernel.append({k: v for k, v in vec.items() if v})
        return Solution(values=values, kernel=kernel, rank=len(self._rows))


def invert_matrix(m: list) -> list:
    """Inverse of a square matrix of scalars; raises ``ValueError`` if singular."""
    n = len(m)
    aug = [[GaussianRational.coerce(x) for x in row] + [ONE if i == j else GaussianRational(0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
