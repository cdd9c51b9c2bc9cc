"""Sparse exact row reduction over Q.

Vectors are dicts mapping hashable column labels to nonzero Fractions.
Columns are compared with the natural order of their labels, and the
pivot of a row is its *largest* column, so that for word-indexed
columns the surviving (non-pivot) labels are the lexicographically
small normal words: this keeps reduced bases deterministic across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

Vec = dict[Hashable, Fraction]


class RowReducer:
    """Incremental row-echelon accumulator.

    Feed vectors with `add`; the reducer maintains monic pivot rows
    keyed by their leading (largest) column.  `rank` is the number of
    pivots; `reduce` computes the normal form of any vector against the
    current pivots.
    """

    def __init__(self):
        self.pivots: dict[Hashable, Vec] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Vec) -> Vec:
        """Eliminate every pivot column from `vec` (a copy is made)."""
        vec = dict(vec)
        while True:
            hits = vec.keys() & self.pivots.keys()
            if not hits:
                return vec
            hit = max(hits)
            coef = vec.pop(hit)
            for col, val in self.pivots[hit].items():
                if col == hit:
                    continue
                nv = vec.get(col, Fraction(0)) - coef * val
                if nv:
                    vec[col] = nv
                else:
                    vec.pop(col, None)

    def add(self, vec: Vec) -> bool:
        """Reduce `vec` and install it as a new pivot row if nonzero.

        Returns True when the vector was independent of the rows seen
        so far.
        """
        vec = self.reduce(vec)
        if not vec:
            return False
        lead = max(vec)
        coef = vec[lead]
        self.pivots[lead] = {c: v / coef for c, v in vec.items()}
        return True

    def add_all(self, vecs: Iterable[Vec]) -> int:
        return sum(1 for v in vecs if self.add(v))


def span_dimension(vectors: Iterable[Vec]) -> int:
    red = RowReducer()
    return red.add_all(vectors)


def in_span(vec: Vec, vectors: Iterable[Vec]) -> bool:
    red = RowReducer()
    red.add_all(vectors)
    return not red.reduce(vec)


def nullspace(rows: list[Vec], columns: list[Hashable]) -> list[Vec]:
    """Basis of the null space of the matrix whose rows are `rows`,
    acting on coordinates indexed by `columns`.

    Returns one vector per free coordinate, normalized so the free
    coordinate has value 1.
    """
    red = RowReducer()
    red.add_all(rows)
    pivot_cols = set(red.pivots)
    free_cols = [c for c in columns if c not in pivot_cols]
    basis: list[Vec] = []
    for fc in free_cols:
        # set the free coordinate to 1 and solve pivot coordinates in
        # increasing lead order (every non-lead column of a pivot row is
        # smaller than its lead, so it is already determined).
        sol: Vec = {fc: Fraction(1)}
        for lead in sorted(red.pivots):
            row = red.pivots[lead]
            acc = Fraction(0)
            for col, val in row.items():
                if col == lead:
                    continue
                if col in sol:
                    acc += val * sol[col]
            if acc:
                sol[lead] = -acc
        basis.append(sol)
    return basis
