"""Exact linear algebra over Q(zeta_N): row reduction, nullspaces, spans."""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .cyclotomic import CycScalar


class DimensionMismatch(ValueError):
    pass


class Matrix:
    """Dense matrix of CycScalar entries sharing one conductor."""

    def __init__(self, entries: Sequence[Sequence[CycScalar]], conductor: int, cols: Optional[int] = None):
        self.conductor = conductor
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        if any(len(row) != cols for row in self.entries):
            raise DimensionMismatch("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int) -> Matrix:
        z = CycScalar.zero(conductor)
        return cls([[z] * cols for _ in range(rows)], conductor, cols)

    @classmethod
    def identity(cls, size: int, conductor: int) -> Matrix:
        m = cls.zeros(size, size, conductor)
        for i in range(size):
            m.entries[i][i] = CycScalar.one(conductor)
        return m

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def apply(self, v: Sequence[CycScalar]) -> list[CycScalar]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        zero = CycScalar.zero(self.conductor)
        out = []
        for row in self.entries:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan, exact)."""
    rows = [list(r) for r in M.entries if any(r)]
    pivots: list[int] = []
    top = 0
    for col in range(M.cols):
        p = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[top], rows[p] = rows[p], rows[top]
        prow = rows[top]
        inv = prow[col].inv()
        prow = [v * inv if v else v for v in prow]
        rows[top] = prow
        nz = [j for j in range(col, M.cols) if prow[j]]
        for i in range(len(rows)):
            if i != top:
                f = rows[i][col]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    z = CycScalar.zero(M.conductor)
    out = rows[:top] + [[z] * M.cols for _ in range(M.rows - top)]
    return Matrix(out, M.conductor, M.cols), pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def nullspace(M: Matrix) -> list[list[CycScalar]]:
    """A basis of {v : M v = 0}, one vector per free column."""
    R, pivots = rref(M)
    zero = CycScalar.zero(M.conductor)
    one = CycScalar.one(M.conductor)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * M.cols
        v[f] = one
        for i, p in enumerate(pivots):
            c = R.entries[i][f]
            if c:
                v[p] = -c
        basis.append(v)
    return basis


# -- incremental sparse echelon, used by the span oracles ------------------------


class Echelon:
    """Fully reduced echelon basis of a growing span of sparse vectors.

    Vectors are mappings from coordinate index to CycScalar.
    """

    def __init__(self, dim: Optional[int] = None):
        self.dim = dim
        self.rows: dict[int, dict[int, CycScalar]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return self.dim is not None and len(self.rows) == self.dim

    def reduce(self, v: Mapping[int, CycScalar]) -> dict[int, CycScalar]:
        w = {k: c for k, c in v.items() if c}
        if self.dim is not None and any(not 0 <= k < self.dim for k in w):
            raise DimensionMismatch("coordinate outside the ambient dimension")
        for p in [k for k in w if k in self.rows]:
            f = w.get(p)
            if not f:
                continue
            for k, c in self.rows[p].items():
                nv = w.get(k)
                nv = -(f * c) if nv is None else nv - f * c
                if nv:
                    w[k] = nv
                else:
                    w.pop(k, None)
        return w

    def add(self, v: Mapping[int, CycScalar]) -> bool:
        """Insert v; True if it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = w[p].inv()
        w = {k: c * inv for k, c in w.items()}
        for q, row in self.rows.items():
            f = row.get(p)
            if f:
                for k, c in w.items():
                    nv = row.get(k)
                    nv = -(f * c) if nv is None else nv - f * c
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[p] = w
        return True

    def contains(self, v: Mapping[int, CycScalar]) -> bool:
        return not self.reduce(v)


def _as_sparse(v) -> dict[int, CycScalar]:
    if isinstance(v, Mapping):
        return dict(v)
    return {i: c for i, c in enumerate(v) if c}


def span_of(vectors: Iterable, dim: Optional[int] = None) -> Echelon:
    e = Echelon(dim)
    for v in vectors:
        e.add(_as_sparse(v))
    return e


def in_span(v, vectors: Iterable, dim: Optional[int] = None) -> bool:
    return span_of(vectors, dim).contains(_as_sparse(v))


def span_equal(S: Iterable, T: Iterable, dim: Optional[int] = None) -> bool:
    S, T = list(S), list(T)
    if dim is None:
        lens = {len(v) for v in S + T if not isinstance(v, Mapping)}
        if len(lens) > 1:
            raise DimensionMismatch("vectors of different lengths")
    es = span_of(S, dim)
    et = span_of(T, dim)
    if es.rank != et.rank:
        return False
    return all(es.contains(_as_sparse(v)) for v in T)
