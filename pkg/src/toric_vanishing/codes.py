"""Evaluation codes on Y_Q: monomials of degree alpha evaluated at fixed representatives."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .groebner import Ideal, normal_form
from .gf import FqField
from .limits import BudgetExceeded
from .points import PointSet, enumerate_YQ, evaluate_at
from .polyring import PolyRing
from .toric import ToricSetup, positive_weight

__all__ = [
    "EvalCode",
    "monomials_of_degree",
    "build_code",
    "rank_fq",
    "nullspace_fq",
    "ideal_slice_dim",
    "codes_csv",
]

MAX_CODEWORDS = 10**6


def monomials_of_degree(alpha: Sequence[int], setup: ToricSetup) -> list[tuple[int, ...]]:
    """All a in N^r with beta a = alpha, in decreasing lex order.

    Bounds come from a weight w positive on every column of beta: each
    a_j <= (w . alpha) / (w . beta_j).
    """
    beta = setup.beta
    alpha = tuple(alpha)
    if len(alpha) != beta.nrows:
        raise ValueError(f"alpha must have {beta.nrows} entries")
    w = positive_weight(beta)
    if w is None:
        raise ValueError("beta admits no positive weight; degree slices may be infinite")
    cols = [beta.column(j) for j in range(beta.ncols)]
    wcol = [sum(a * b for a, b in zip(w, c)) for c in cols]
    total = sum(a * b for a, b in zip(w, alpha))
    r = len(cols)
    out = []

    def rec(j, remaining_w, partial, acc):
        if j == r:
            if remaining_w == 0 and tuple(acc) == alpha:
                out.append(tuple(partial))
            return
        for a in range(remaining_w // wcol[j], -1, -1):
            partial.append(a)
            rec(j + 1, remaining_w - a * wcol[j], partial, [x + a * y for x, y in zip(acc, cols[j])])
            partial.pop()

    if total >= 0:
        rec(0, total, [], [0] * len(alpha))
    return out


def _rref(M: list[list[int]], F: FqField) -> tuple[list[list[int]], list[int]]:
    A = [row[:] for row in M]
    pivots = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, v) for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = F.neg(A[i][c])
                A[i] = [F.add(a, F.mul(f, b)) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank_fq(M: list[list[int]], F: FqField) -> int:
    return len(_rref(M, F)[1]) if M else 0


def nullspace_fq(M: list[list[int]], F: FqField) -> list[list[int]]:
    """Basis of {c : c M = 0} (left kernel) of an integer-encoded matrix."""
    if not M:
        return []
    T = [list(col) for col in zip(*M)]
    R, pivots = _rref(T, F)
    nv = len(M)
    free = [j for j in range(nv) if j not in pivots]
    basis = []
    for fj in free:
        v = [0] * nv
        v[fj] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fj])
        basis.append(v)
    return basis


@dataclass
class EvalCode:
    alpha: tuple[int, ...]
    points: PointSet
    representatives: list[tuple[int, ...]]
    basis: list[tuple[int, ...]]
    generator_matrix: list[list[int]]
    n: int
    k: int
    d: int | None

    def basis_strings(self, ring: PolyRing) -> list[str]:
        return [str(ring.monomial(a)) for a in self.basis]


def _min_distance(rows: list[list[int]], F: FqField) -> int:
    """Minimum nonzero weight of the span of linearly independent ``rows``."""
    k = len(rows)
    q = F.q
    if q**k > MAX_CODEWORDS:
        raise BudgetExceeded(f"{q}^{k} codewords exceeds {MAX_CODEWORDS}")
    G = np.array(rows, dtype=np.int64)
    if F.is_prime:
        p = F.p
        words = np.zeros((1, G.shape[1]), dtype=np.int64)
        for row in G[:-1]:
            words = np.concatenate([(words + lam * row) % p for lam in range(q)])
        best = G.shape[1]
        last = G[-1]
        for lam in range(q):
            cand = (words + lam * last) % p
            wts = np.count_nonzero(cand, axis=1)
            if lam == 0:
                wts = wts[1:]
            if wts.size:
                best = min(best, int(wts.min()))
        return best
    if q > 1024:
        raise BudgetExceeded(f"extension field GF({q}) too large for table-driven exhaustion")
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
    words = np.zeros((1, G.shape[1]), dtype=np.int32)
    for row in G[:-1]:
        words = np.concatenate([add[words, mul[lam][row]] for lam in range(q)])
    best = G.shape[1]
    for lam in range(q):
        cand = add[words, mul[lam][G[-1]]]
        wts = np.count_nonzero(cand, axis=1)
        if lam == 0:
            wts = wts[1:]
        if wts.size:
            best = min(best, int(wts.min()))
    return best


def build_code(
    Q,
    alpha: Sequence[int],
    setup: ToricSetup,
    representatives: Sequence[Sequence[int]] | None = None,
) -> EvalCode:
    """Evaluation code of degree-alpha monomials on Y_Q.

    Points are evaluated at their canonical dlog representative unless
    ``representatives`` (dlog vectors, one per point in sorted order) is given.
    """
    P = enumerate_YQ(Q, setup)
    reps = [p.dlog for p in P] if representatives is None else [tuple(h) for h in representatives]
    if len(reps) != len(P):
        raise ValueError("need one representative per point")
    basis = monomials_of_degree(alpha, setup)
    F = setup.field
    S = PolyRing.standard(F, setup.r)
    M = [[evaluate_at(S.monomial(a), h, setup) for h in reps] for a in basis]
    n = len(P)
    rows, _ = _rref(M, F) if M else ([], [])
    k = len(rows)
    d = _min_distance(rows, F) if k else None
    return EvalCode(tuple(alpha), P, reps, basis, M, n, k, d)


def ideal_slice_dim(I: Ideal, alpha: Sequence[int], setup: ToricSetup) -> int:
    """dim_K I_alpha = |S_alpha| - rank of the normal forms of the degree-alpha monomials."""
    basis = monomials_of_degree(alpha, setup)
    if not basis:
        return 0
    G = I.gb()
    nfs = [normal_form(I.ring.monomial(a), G.elements, G.order) for a in basis]
    support = sorted({e for f in nfs for e in f.terms})
    M = [[f.terms.get(e, 0) for e in support] for f in nfs]
    rank = rank_fq(M, I.ring.field) if support else 0
    return len(basis) - rank


def codes_csv(codes: Sequence[EvalCode], ring: PolyRing) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "n", "k", "d", "basis"])
    for c in codes:
        w.writerow([
            " ".join(map(str, c.alpha)),
            c.n,
            c.k,
            "" if c.d is None else c.d,
            " ".join(c.basis_strings(ring)),
        ])
    return buf.getvalue()
