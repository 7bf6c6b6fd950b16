"""Exact integer matrices, Hermite/Smith normal forms and lattice arithmetic.

Lattices are subgroups of Z^n stored by a row basis in Hermite normal form.
Because the HNF of a row space is unique, two lattices compare equal exactly
when their stored bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "Lattice",
    "xgcd",
    "hnf",
    "snf",
    "kernel_lattice",
    "image_lattice",
    "lattice_sum",
    "lattice_scale",
    "lattice_intersect",
    "lattice_colon",
    "lattice_eq",
    "lattice_contains",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


class IntMatrix:
    """Immutable dense matrix of Python integers."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def T(self) -> IntMatrix:
        return IntMatrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
            other.ncols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return IntMatrix(self.rows + other.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def rank(self) -> int:
        return hnf(self).nrows

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"


def _as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix(M)


def hnf(M) -> IntMatrix:
    """Row-style Hermite normal form of the row space of ``M``.

    Zero rows are dropped; pivots are positive and the entries above each
    pivot lie in ``[0, pivot)``.
    """
    M = _as_matrix(M)
    A = [list(r) for r in M.rows]
    m, n = M.nrows, M.ncols
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            Rr, Ri = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(Rr, Ri)]
            A[i] = [ag * v - bg * u for u, v in zip(Rr, Ri)]
        p = A[r][c]
        if p == 0:
            continue
        if p < 0:
            A[r] = [-v for v in A[r]]
            p = -p
        for i in range(r):
            f = A[i][c] // p
            if f:
                A[i] = [u - f * v for u, v in zip(A[i], A[r])]
        r += 1
    return IntMatrix(A[:r], n)


def snf(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms: returns ``(D, P, K)`` with ``P @ M @ K == D``.

    ``P`` and ``K`` are unimodular, ``D`` is diagonal with nonnegative entries
    and ``D[0,0] | D[1,1] | ...``.
    """
    M = _as_matrix(M)
    m, n = M.shape
    A = [list(r) for r in M.rows]
    P = [[int(i == j) for j in range(m)] for i in range(m)]
    K = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in K:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        A[dst] = [u + f * v for u, v in zip(A[dst], A[src])]
        P[dst] = [u + f * v for u, v in zip(P[dst], P[src])]

    def add_col(dst, src, f):
        for row in A:
            row[dst] += f * row[src]
        for row in K:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear column t and row t; restart whenever a smaller remainder appears
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        changed = True
            if changed:
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            p = A[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            P[t] = [-v for v in P[t]]
    return IntMatrix(A, n), IntMatrix(P, m), IntMatrix(K, n)


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z^ambient_dim, canonicalized by its HNF row basis."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_dim: int) -> Lattice:
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in Z^{ambient_dim}")
        return cls(ambient_dim, hnf(IntMatrix(rows, ambient_dim)).rows)

    @classmethod
    def zero(cls, ambient_dim: int) -> Lattice:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Lattice:
        return cls(ambient_dim, IntMatrix.identity(ambient_dim).rows)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> IntMatrix:
        return IntMatrix(self.basis, self.ambient_dim)

    def tolist(self) -> list[list[int]]:
        return [list(v) for v in self.basis]

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)

    def __le__(self, other: Lattice) -> bool:
        _check_dims(self, other)
        return all(lattice_contains(other, v) for v in self.basis)

    def __add__(self, other: Lattice) -> Lattice:
        return lattice_sum(self, other)

    def __rmul__(self, k: int) -> Lattice:
        return lattice_scale(k, self)


def _check_dims(L1: Lattice, L2: Lattice) -> None:
    if L1.ambient_dim != L2.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {L1.ambient_dim} vs {L2.ambient_dim}")


def kernel_lattice(M) -> Lattice:
    """{m in Z^cols : M m = 0}, read off the column transform of the SNF."""
    M = _as_matrix(M)
    D, _, K = snf(M)
    rank = sum(1 for i in range(min(D.shape)) if D[i, i])
    return Lattice.span((K.column(j) for j in range(rank, M.ncols)), M.ncols)


def image_lattice(M) -> Lattice:
    """Lattice spanned by the columns of ``M``."""
    M = _as_matrix(M)
    return Lattice.span((M.column(j) for j in range(M.ncols)), M.nrows)


def lattice_sum(L1: Lattice, L2: Lattice) -> Lattice:
    _check_dims(L1, L2)
    return Lattice.span(L1.basis + L2.basis, L1.ambient_dim)


def lattice_scale(k: int, L: Lattice) -> Lattice:
    return Lattice.span(([k * x for x in v] for v in L.basis), L.ambient_dim)


def lattice_intersect(L1: Lattice, L2: Lattice) -> Lattice:
    """L1 ∩ L2 via the kernel of the stacked system ``a.B1 - b.B2 = 0``."""
    _check_dims(L1, L2)
    n = L1.ambient_dim
    a, b = L1.rank, L2.rank
    if a == 0 or b == 0:
        return Lattice.zero(n)
    stacked = IntMatrix(list(L1.basis) + [[-x for x in v] for v in L2.basis], n)
    rel = kernel_lattice(stacked.T)
    B1 = L1.matrix()
    vecs = [IntMatrix([c[:a]], a) @ B1 for c in rel.basis]
    return Lattice.span((v.rows[0] for v in vecs), n)


def lattice_colon(L: Lattice, k: int) -> Lattice:
    """{m : k m in L}, computed as (L ∩ kZ^n) / k."""
    if k <= 0:
        raise ValueError(f"colon requires a positive integer, got {k}")
    n = L.ambient_dim
    meet = lattice_intersect(L, lattice_scale(k, Lattice.full(n)))
    return Lattice.span(([x // k for x in v] for v in meet.basis), n)


def lattice_eq(L1: Lattice, L2: Lattice) -> bool:
    _check_dims(L1, L2)
    return L1.basis == L2.basis


def lattice_contains(L: Lattice, v: Sequence[int]) -> bool:
    """Membership by back-substitution against the echelon HNF basis."""
    if len(v) != L.ambient_dim:
        raise ValueError(f"vector of length {len(v)} in Z^{L.ambient_dim}")
    w = list(v)
    for row in L.basis:
        c = next(j for j, x in enumerate(row) if x)
        f, rem = divmod(w[c], row[c])
        if rem:
            return False
        if f:
            w = [a - f * b for a, b in zip(w, row)]
    return not any(w)
