"""Exact-sequence data of a toric variety: ray matrix phi, grading beta, and Q.

``phi`` is r x n with the ray generators as rows, ``beta`` is d x r with
``beta @ phi == 0`` and d = r - n. The Cox ring x_1..x_r is graded by the
columns of beta.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Sequence

from .gf import FqField, factor_prime_power, make_field
from .intlin import IntMatrix, Lattice, image_lattice, kernel_lattice, lattice_contains, snf

__all__ = [
    "SetupError",
    "ToricSetup",
    "BetaChoice",
    "beta_from_phi",
    "validate_setup",
    "normalize_Q",
    "is_homogeneous_Q",
    "positive_weight",
    "stack",
]

log = logging.getLogger(__name__)


class SetupError(ValueError):
    """Input data violates one or more named invariants."""

    def __init__(self, problems: dict[str, str]):
        self.problems = dict(problems)
        msg = "; ".join(f"{k}: {v}" for k, v in self.problems.items())
        super().__init__(msg)


@dataclass(frozen=True)
class ToricSetup:
    phi: IntMatrix
    beta: IntMatrix
    q: int
    field: FqField = field(compare=False, repr=False)

    @property
    def r(self) -> int:
        return self.phi.nrows

    @property
    def n(self) -> int:
        return self.phi.ncols

    @property
    def d(self) -> int:
        return self.beta.nrows

    @property
    def beta_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.beta.rows for v in row)


@dataclass(frozen=True)
class BetaChoice:
    beta: IntMatrix
    raw: IntMatrix
    normalized: bool


def _as_matrix(M, ncols: int | None = None) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix(M, ncols)


def _phi_problems(phi: IntMatrix) -> dict[str, str]:
    problems = {}
    r, n = phi.shape
    if n > r:
        problems["phi"] = f"{r} rays cannot span R^{n}"
    if phi.rank() != n:
        problems["rank(phi)"] = f"rays span a space of dimension {phi.rank()} < n={n}"
    else:
        D, _, _ = snf(phi)
        diag = [D[i, i] for i in range(n)]
        if any(v != 1 for v in diag):
            problems["torsion"] = f"Smith diagonal of phi is {diag}; Cl(X) has torsion"
    return problems


def beta_from_phi(phi, bound: int = 5) -> BetaChoice:
    """A grading matrix for phi, preferring one with nonnegative entries.

    The raw candidate is the last d rows of P in the Smith form P phi K = D.
    We then look for a unimodular recombination of those rows with
    coefficients in [-bound, bound] making every entry nonnegative; rows of
    small entry sum are preferred and the result is listed in decreasing
    lexicographic row order. If none is found the raw rows are kept and
    ``normalized`` is False.
    """
    phi = _as_matrix(phi)
    problems = _phi_problems(phi)
    if problems:
        raise SetupError(problems)
    r, n = phi.shape
    d = r - n
    _, P, _ = snf(phi)
    raw = IntMatrix(P.rows[n:], r)
    if d == 0:
        return BetaChoice(raw, raw, True)

    cands = []
    for c in itertools.product(range(-bound, bound + 1), repeat=d):
        if not any(c):
            continue
        row = IntMatrix([c], d) @ raw
        vals = row.rows[0]
        if all(v >= 0 for v in vals):
            cands.append((sum(vals), tuple(-v for v in vals), c, vals))
    cands.sort()
    cands = cands[:60]
    for combo in itertools.combinations(cands, d):
        U = IntMatrix([t[2] for t in combo], d)
        if abs(_det(U)) == 1:
            rows = sorted((t[3] for t in combo), reverse=True)
            return BetaChoice(IntMatrix(rows, r), raw, True)
    log.warning("no nonnegative grading found within bound %d; using raw Smith rows", bound)
    return BetaChoice(raw, raw, False)


def _det(M: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    A = [list(r) for r in M.rows]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


def validate_setup(phi, beta, q: int) -> ToricSetup:
    """Check every linear-algebraic hypothesis on (phi, beta, q).

    All violations are collected and raised together as a SetupError keyed
    by invariant name.
    """
    phi = _as_matrix(phi)
    problems: dict[str, str] = {}
    try:
        factor_prime_power(q)
    except ValueError as e:
        problems["q"] = str(e)
    problems.update(_phi_problems(phi))
    r, n = phi.shape
    if beta is None:
        raise SetupError({"beta": "missing"})
    beta = _as_matrix(beta, r)
    d = r - n
    if beta.ncols != r:
        problems["beta"] = f"beta has {beta.ncols} columns, expected r={r}"
    else:
        if beta.nrows != d:
            problems["d"] = f"beta has {beta.nrows} rows, expected d=r-n={d}"
        if beta.rank() != beta.nrows:
            problems["rank(beta)"] = f"beta has rank {beta.rank()} < {beta.nrows} rows"
        if not (beta @ phi).is_zero():
            problems["beta*phi"] = "beta @ phi is not zero"
        elif "rank(phi)" not in problems and "torsion" not in problems:
            if image_lattice(phi) != kernel_lattice(beta):
                problems["exactness"] = "image(phi) != ker(beta)"
            elif beta.nrows == d and image_lattice(beta) != Lattice.full(d):
                problems["exactness"] = "beta is not onto Z^d"
    if problems:
        raise SetupError(problems)
    return ToricSetup(phi, beta, q, make_field(q))


def setup_from_phi(phi, q: int, bound: int = 5) -> tuple[ToricSetup, BetaChoice]:
    choice = beta_from_phi(phi, bound)
    return validate_setup(phi, choice.beta, q), choice


def normalize_Q(Q, q: int) -> IntMatrix:
    """Entrywise representatives in [0, q-2] modulo q-1."""
    if q < 2:
        raise ValueError("q must be at least 2")
    Q = _as_matrix(Q)
    return IntMatrix([[v % (q - 1) for v in row] for row in Q.rows], Q.ncols)


def stack(Q, beta) -> IntMatrix:
    """The matrix [Q; beta]."""
    return _as_matrix(Q).vstack(_as_matrix(beta))


def is_homogeneous_Q(Q, setup: ToricSetup) -> bool:
    """Q is homogeneous iff ker Q ⊆ ker beta."""
    Q = _as_matrix(Q, setup.r)
    if Q.ncols != setup.r:
        raise ValueError(f"Q must have r={setup.r} columns")
    LQ = kernel_lattice(Q)
    Lb = kernel_lattice(setup.beta)
    return all(lattice_contains(Lb, v) for v in LQ.basis)


def positive_weight(beta: IntMatrix, bound: int = 6) -> tuple[int, ...] | None:
    """A small integer w with w . beta_j > 0 for every column, or None."""
    beta = _as_matrix(beta)
    cols = [beta.column(j) for j in range(beta.ncols)]
    d = beta.nrows
    best = None
    for w in itertools.product(range(-bound, bound + 1), repeat=d):
        if all(sum(a * b for a, b in zip(w, c)) > 0 for c in cols):
            cand = (sum(abs(x) for x in w), tuple(-x for x in w), w)
            if best is None or cand < best:
                best = cand
    return None if best is None else best[2]
