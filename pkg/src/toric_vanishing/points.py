"""Brute-force geometry of the torus T_X = (F_q^*)^r / G over a small field.

Everything happens in discrete-log coordinates: a tuple (p_1, ..., p_r)
is stored as h with p_i = eta^{h_i}, so G becomes the subgroup
{h in (Z/(q-1))^r : phi^T h = 0} and a torus point is the coset h + G,
represented by its lexicographically least element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groebner import Ideal, eliminate, ideal_intersect
from .gf import FqElem
from .intlin import IntMatrix
from .limits import check_enum
from .polyring import PolyRing, Polynomial, is_homogeneous_poly
from .toric import ToricSetup

__all__ = [
    "TorusPoint",
    "PointSet",
    "group_G",
    "canonical",
    "enumerate_torus",
    "enumerate_YQ",
    "zero_locus",
    "ideal_of_points",
    "point_ideal",
    "evaluate_at",
]


@dataclass(frozen=True, order=True)
class TorusPoint:
    """Class [eta^{h_1} : ... : eta^{h_r}], keyed by the canonical dlog vector."""

    dlog: tuple[int, ...]

    def rep(self, setup: ToricSetup) -> tuple[FqElem, ...]:
        F = setup.field
        return tuple(F.element(F.exp(h)) for h in self.dlog)


class PointSet:
    """A sorted, duplicate-free set of torus points of one setup."""

    def __init__(self, setup: ToricSetup, points: Iterable[TorusPoint]):
        self.setup = setup
        self.points: tuple[TorusPoint, ...] = tuple(sorted(set(points)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p: TorusPoint):
        return p in set(self.points)

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.setup == other.setup and self.points == other.points

    def __le__(self, other: PointSet) -> bool:
        return set(self.points) <= set(other.points)

    def tolist(self) -> list[list[int]]:
        return [list(p.dlog) for p in self.points]

    def __repr__(self):
        return f"PointSet({self.tolist()})"


def group_G(setup: ToricSetup) -> list[tuple[int, ...]]:
    """G = ker(pi) in dlog form: all h in (Z/(q-1))^r with phi^T h = 0 mod q-1.

    Found by exhaustive search over (Z/(q-1))^r, sorted.
    """
    m = setup.q - 1
    r = setup.r
    check_enum(m**r, "group G")
    cols = [setup.phi.column(j) for j in range(setup.n)]
    out = []
    for h in itertools.product(range(m), repeat=r):
        if all(sum(a * b for a, b in zip(u, h)) % m == 0 for u in cols):
            out.append(h)
    return out


def _group(setup: ToricSetup) -> list[tuple[int, ...]]:
    key = (setup.phi, setup.q)
    G = _G_CACHE.get(key)
    if G is None:
        G = _G_CACHE.setdefault(key, group_G(setup))
    return G


_G_CACHE: dict = {}


def canonical(h: Sequence[int], setup: ToricSetup) -> TorusPoint:
    """The least element of the coset h + G."""
    m = setup.q - 1
    return TorusPoint(min(tuple((a + g) % m for a, g in zip(h, gv)) for gv in _group(setup)))


def enumerate_torus(setup: ToricSetup) -> PointSet:
    """All (q-1)^n classes of T_X."""
    m = setup.q - 1
    check_enum(m**setup.r, "torus enumeration")
    G = _group(setup)
    seen = set()
    reps = []
    for h in itertools.product(range(m), repeat=setup.r):
        if h in seen:
            continue
        # lexicographic sweep: the first unseen element of a coset is its minimum
        reps.append(TorusPoint(h))
        for g in G:
            seen.add(tuple((a + b) % m for a, b in zip(h, g)))
    return PointSet(setup, reps)


def enumerate_YQ(Q, setup: ToricSetup) -> PointSet:
    """Y_Q = {[t^{q_1} : ... : t^{q_r}] : t in (F_q^*)^s}."""
    Q = Q if isinstance(Q, IntMatrix) else IntMatrix(Q, setup.r)
    if Q.ncols != setup.r:
        raise ValueError(f"Q must have r={setup.r} columns")
    m = setup.q - 1
    s = Q.nrows
    check_enum(m**s, "Y_Q enumeration")
    cols = [Q.column(j) for j in range(setup.r)]
    pts = set()
    for k in itertools.product(range(m), repeat=s):
        h = tuple(sum(a * b for a, b in zip(c, k)) % m for c in cols)
        pts.add(canonical(h, setup))
    return PointSet(setup, pts)


def evaluate_at(f: Polynomial, h: Sequence[int], setup: ToricSetup) -> int:
    """f(eta^{h_1}, ..., eta^{h_r}) as an integer-encoded field element."""
    F = setup.field
    m = setup.q - 1
    total = 0
    for e, c in f.terms.items():
        total = F.add(total, F.mul(c, F.exp(sum(a * b for a, b in zip(e, h)) % m)))
    return total


def zero_locus(I: Ideal, setup: ToricSetup) -> PointSet:
    """Torus points where every generator of I's reduced basis vanishes.

    Requires a homogeneous ideal, so that vanishing does not depend on the
    representative; this is spot-checked on a second representative.
    """
    gens = I.gb().elements
    for g in gens:
        if not is_homogeneous_poly(g, setup.beta)[0]:
            raise ValueError(f"non-homogeneous generator {g}")
    T = enumerate_torus(setup)
    G = _group(setup)
    m = setup.q - 1
    shift = G[-1]
    out = []
    for i, p in enumerate(T):
        vanish = all(evaluate_at(g, p.dlog, setup) == 0 for g in gens)
        if i < 8 and len(G) > 1:
            other = tuple((a + b) % m for a, b in zip(p.dlog, shift))
            if vanish != all(evaluate_at(g, other, setup) == 0 for g in gens):
                raise AssertionError("vanishing depends on the representative")
        if vanish:
            out.append(p)
    return PointSet(setup, out)


def point_ideal(h: Sequence[int], setup: ToricSetup) -> Ideal:
    """Homogeneous vanishing ideal of the single class [eta^{h_1} : ... : eta^{h_r}].

    The class is the G-orbit {p * z^beta}, so the ideal is
    <x_i z^{b_i-} - p_i z^{b_i+}, w prod z^{b-} - 1> eliminated down to the x's.
    """
    F = setup.field
    r, d = setup.r, setup.d
    S = PolyRing.standard(F, r, grading=setup.beta)
    R = S.extend([f"z{j + 1}" for j in range(d)] + ["w"])
    gens = []
    den = [0] * d
    for i in range(r):
        col = setup.beta.column(i)
        plus = [max(b, 0) for b in col]
        minus = [max(-b, 0) for b in col]
        e = [int(j == i) for j in range(r)]
        gens.append(R.monomial(e + minus + [0]) - R.monomial([0] * r + plus + [0], F.element(F.exp(h[i]))))
        den = [a + b for a, b in zip(den, minus)]
    gens.append(R.monomial([0] * r + den + [1]) - R.one)
    return eliminate(Ideal(R, gens), range(r, R.nvars), target=S, order="elim")


def ideal_of_points(P: PointSet | Iterable[TorusPoint], setup: ToricSetup, max_points: int = 32) -> Ideal:
    """I(P) as the intersection of the single-point ideals, pairwise in a balanced tree."""
    pts = list(P)
    if not pts:
        raise ValueError("empty point set")
    if len(pts) > max_points:
        raise ValueError(f"{len(pts)} points exceeds the oracle limit {max_points}")
    ideals = [point_ideal(p.dlog, setup) for p in pts]
    while len(ideals) > 1:
        nxt = [ideal_intersect(a, b) for a, b in zip(ideals[0::2], ideals[1::2])]
        if len(ideals) % 2:
            nxt.append(ideals[-1])
        ideals = nxt
    return ideals[0]
