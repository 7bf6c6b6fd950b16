"""Buchberger's algorithm, reduced Groebner bases and ideal operations.

Pairs are pruned with the Gebauer-Moeller update (coprime and chain
criteria) and selected by least sugar, then least lcm, then generator
indices. Remainders are fully tail-reduced. Output bases are reduced, monic
and sorted by leading monomial, ascending.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import limits
from .limits import BudgetExceeded
from .polyring import MonomialOrder, PolyRing, Polynomial, is_homogeneous_poly

__all__ = [
    "GroebnerBasis",
    "Ideal",
    "normal_form",
    "buchberger",
    "eliminate",
    "saturate_vars",
    "ideal_eq",
    "ideal_sum",
    "ideal_intersect",
    "minimal_generators",
    "spoly",
    "BudgetExceeded",
]


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


class _Counter:
    __slots__ = ("n", "cap")

    def __init__(self):
        self.n = 0
        self.cap = limits.max_reductions()

    def tick(self):
        self.n += 1
        if self.n > self.cap:
            raise BudgetExceeded(f"Groebner computation exceeded {self.cap} reduction steps")


def _reduce(p: dict, basis: list, key, F, counter: _Counter) -> dict:
    """Remainder of p modulo basis = [(poly dict, lm, lc), ...]."""
    p = dict(p)
    rem = {}
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    while p:
        m = max(p, key=key)
        c = p[m]
        for g, lm, lc in basis:
            if _divides(lm, m):
                counter.tick()
                shift = [x - y for x, y in zip(m, lm)]
                f = neg(mul(c, inv(lc)))
                for e, a in g.items():
                    ne = tuple([x + y for x, y in zip(e, shift)])
                    v = add(p.get(ne, 0), mul(f, a))
                    if v:
                        p[ne] = v
                    else:
                        p.pop(ne, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f, lmf, lcf, g, lmg, lcg, F) -> dict:
    L = _lcm(lmf, lmg)
    sf = [x - y for x, y in zip(L, lmf)]
    sg = [x - y for x, y in zip(L, lmg)]
    a = F.inv(lcf)
    b = F.neg(F.inv(lcg))
    out: dict = {}
    for poly, shift, c in ((f, sf, a), (g, sg, b)):
        for e, v in poly.items():
            ne = tuple([x + y for x, y in zip(e, shift)])
            w = F.add(out.get(ne, 0), F.mul(c, v))
            if w:
                out[ne] = w
            else:
                out.pop(ne, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def strings(self) -> list[str]:
        return [g.to_str(self.order) for g in self.elements]


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by G; no remaining term is divisible by any LM(g)."""
    G = [g for g in G if g]
    if not G:
        return f
    key = order.key
    basis = [(g.terms, g.leading_monomial(order), g.leading_coeff(order)) for g in G]
    return Polynomial(f.ring, _reduce(f.terms, basis, key, f.ring.field, _Counter()))


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    F = f.ring.field
    return Polynomial(f.ring, _spoly(f.terms, lf, f.terms[lf], g.terms, lg, g.terms[lg], F))


def _interreduce(polys: list[dict], key, F, counter) -> list[dict]:
    """Minimal, tail-reduced, monic basis from a Groebner basis."""
    items = []
    for p in polys:
        lm = max(p, key=key)
        items.append((p, lm))
    # drop elements whose leading monomial is a multiple of another's
    items.sort(key=lambda t: key(t[1]))
    minimal = []
    for p, lm in items:
        if not any(_divides(lm2, lm) for _, lm2 in minimal):
            minimal.append((p, lm))
    out = []
    for i, (p, lm) in enumerate(minimal):
        others = [(q, lm2, q[lm2]) for j, (q, lm2) in enumerate(minimal) if j != i]
        lc = p[lm]
        inv = F.inv(lc)
        p = {e: F.mul(inv, c) for e, c in p.items()}
        tail = {e: c for e, c in p.items() if e != lm}
        tail = _reduce(tail, others, key, F, counter)
        tail[lm] = 1
        out.append(tail)
    return out


def _buchberger_raw(polys: list[dict], key, F, counter) -> list[dict]:
    """Buchberger with the Gebauer-Moeller pair update and sugar selection."""
    G: list[tuple[dict, tuple, int]] = []
    sugar: list[int] = []
    active: list[int] = []
    live: dict[tuple[int, int], tuple[int, ...]] = {}
    heap: list = []

    def add_element(p, sug):
        lm = max(p, key=key)
        h = len(G)
        G.append((p, lm, p[lm]))
        sugar.append(sug)
        # new pairs (g, h); keep one per minimal lcm, then drop coprime ones
        C = [(g, _lcm(G[g][1], lm)) for g in active]
        D = []
        for idx, (g1, L1) in enumerate(C):
            coprime = all(not (a and b) for a, b in zip(G[g1][1], lm))
            if coprime or (
                not any(_divides(L2, L1) for _, L2 in C[idx + 1 :])
                and not any(_divides(L2, L1) for _, L2 in D)
            ):
                D.append((g1, L1))
        E = [(g, L) for g, L in D if any(a and b for a, b in zip(G[g][1], lm))]
        # old pairs made redundant by h
        for (i, j), L in list(live.items()):
            if _divides(lm, L) and _lcm(G[i][1], lm) != L and _lcm(G[j][1], lm) != L:
                del live[(i, j)]
        for g, L in E:
            sg = max(sugar[g] + sum(L) - sum(G[g][1]), sug + sum(L) - sum(lm))
            live[(g, h)] = L
            heapq.heappush(heap, (sg, key(L), g, h))
        active[:] = [g for g in active if not _divides(lm, G[g][1])]
        active.append(h)

    def basis():
        return [G[g] for g in active]

    for p in polys:
        if p:
            r = _reduce(p, basis(), key, F, counter)
            if r:
                add_element(r, max(sum(e) for e in r))

    while heap:
        sg, _, i, j = heapq.heappop(heap)
        if live.pop((i, j), None) is None:
            continue
        fi, li, ci = G[i]
        fj, lj, cj = G[j]
        s = _spoly(fi, li, ci, fj, lj, cj, F)
        r = _reduce(s, basis(), key, F, counter)
        if r:
            add_element(r, sg)
    return [G[g][0] for g in active]


def buchberger(I: Ideal | Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """The reduced Groebner basis of I with respect to ``order``."""
    gens = I.generators if isinstance(I, Ideal) else tuple(I)
    if not gens:
        return GroebnerBasis(order, ())
    ring = gens[0].ring
    if order.nvars != ring.nvars:
        raise ValueError("order and ring have different numbers of variables")
    key = order.key
    F = ring.field
    counter = _Counter()
    raw = _buchberger_raw([g.terms for g in gens if g], key, F, counter)
    if not raw:
        return GroebnerBasis(order, ())
    red = _interreduce(raw, key, F, counter)
    red.sort(key=lambda p: key(max(p, key=key)))
    return GroebnerBasis(order, tuple(Polynomial(ring, p) for p in red))


class Ideal:
    """An ideal given by generators, with reduced Groebner bases cached per order."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.default_order()
        with self._lock:
            cached = self._gb.get(order)
        if cached is not None:
            return cached
        G = buchberger(self.generators, order)
        with self._lock:
            return self._gb.setdefault(order, G)

    def _seed_gb(self, G: GroebnerBasis) -> None:
        with self._lock:
            self._gb.setdefault(G.order, G)

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, f: Polynomial) -> bool:
        G = self.gb()
        return not normal_form(f, G.elements, G.order)

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def __le__(self, other: Ideal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_homogeneous(self, beta=None) -> bool:
        return all(is_homogeneous_poly(g, beta)[0] for g in self.gb().elements)

    def strings(self, order: MonomialOrder | None = None) -> list[str]:
        return [g.to_str(order) for g in self.generators]

    def __repr__(self):
        return f"Ideal<{', '.join(self.strings()) or '0'}>"


def ideal_eq(I1: Ideal, I2: Ideal, order: MonomialOrder | None = None) -> bool:
    """Equality of ideals by comparing reduced Groebner bases."""
    if I1.ring != I2.ring:
        raise ValueError("ideals in different rings")
    order = order or I1.ring.default_order()
    G1, G2 = I1.gb(order), I2.gb(order)
    return [g.terms for g in G1] == [g.terms for g in G2]


def ideal_sum(I1: Ideal, I2: Ideal) -> Ideal:
    if I1.ring != I2.ring:
        raise ValueError("ideals in different rings")
    return Ideal(I1.ring, I1.generators + I2.generators)


def eliminate(
    I: Ideal,
    drop: Iterable[int],
    target: PolyRing | None = None,
    order: str = "lex",
    priority: Sequence[int] | None = None,
) -> Ideal:
    """I ∩ K[remaining variables], returned as an ideal of the smaller ring.

    ``order="lex"`` uses the lex order with the dropped variables first (in
    ``priority`` order if given, which must start with them); ``"elim"`` uses
    the faster grevlex block order. The generators of the result are the
    reduced Groebner basis of the elimination ideal under the induced order,
    which is cached on the returned ideal.
    """
    ring = I.ring
    drop = list(dict.fromkeys(drop))
    keep = [i for i in range(ring.nvars) if i not in set(drop)]
    if target is None:
        target = PolyRing(ring.field, [ring.names[i] for i in keep])
    elif list(target.names) != [ring.names[i] for i in keep]:
        raise ValueError("target ring does not match the remaining variables")
    if order == "lex":
        if priority is None:
            priority = drop + keep
        priority = list(priority)
        if set(priority[: len(drop)]) != set(drop):
            raise ValueError("eliminated variables must come first in the lex priority")
        mo = MonomialOrder.lex(ring.nvars, priority)
    elif order == "elim":
        mo = MonomialOrder.elimination(ring.nvars, drop)
    else:
        raise ValueError(f"unknown elimination order {order!r}")
    G = I.gb(mo)
    dropset = set(drop)
    out = []
    for g in G.elements:
        if any(i in dropset for i in g.support()):
            continue
        out.append(Polynomial(target, {tuple(e[i] for i in keep): c for e, c in g.terms.items()}))
    J = Ideal(target, out)
    J._seed_gb(GroebnerBasis(mo.restrict(keep), J.generators))
    return J


def saturate_vars(I: Ideal, variables: Sequence[int] | None = None) -> Ideal:
    """I : (prod of variables)^∞ via an auxiliary w with w*prod(x) - 1."""
    ring = I.ring
    if I.is_zero():
        return Ideal(ring)
    variables = range(ring.nvars) if variables is None else variables
    w = ring.fresh_name("w")
    R = ring.extend([w])
    exp = [0] * R.nvars
    for i in variables:
        exp[i] = 1
    exp[-1] = 1
    gens = [ring.embed(g, R) for g in I.generators]
    gens.append(R.monomial(exp) - R.one)
    return eliminate(Ideal(R, gens), [R.nvars - 1], target=ring, order="elim")


def ideal_intersect(I1: Ideal, I2: Ideal) -> Ideal:
    """I1 ∩ I2 = (t*I1 + (1-t)*I2) ∩ K[x]."""
    if I1.ring != I2.ring:
        raise ValueError("ideals in different rings")
    ring = I1.ring
    if I1.is_zero() or I2.is_zero():
        return Ideal(ring)
    t = ring.fresh_name("t")
    R = ring.extend([t])
    tv = R.gens[-1]
    gens = [tv * ring.embed(f, R) for f in I1.generators]
    gens += [(R.one - tv) * ring.embed(g, R) for g in I2.generators]
    return eliminate(Ideal(R, gens), [R.nvars - 1], target=ring, order="elim")


def minimal_generators(I: Ideal, weight: Sequence[int], beta=None) -> list[Polynomial]:
    """A minimal homogeneous generating set of a graded ideal.

    ``weight`` must be positive on every column of the grading, so that it
    induces a positive Z-grading. Candidates are reduced Groebner basis
    elements taken in increasing weighted degree; one is kept when it does
    not already lie in the ideal generated by the kept ones.
    """
    beta = I.ring.grading if beta is None else beta
    if beta is None:
        raise ValueError("ring has no grading")
    cols = [beta.column(j) for j in range(beta.ncols)]
    wdeg = [sum(a * b for a, b in zip(weight, c)) for c in cols]
    if any(v <= 0 for v in wdeg):
        raise ValueError("weight is not positive on the grading")
    G = I.gb()
    order = G.order
    for g in G.elements:
        if not is_homogeneous_poly(g, beta)[0]:
            raise ValueError("ideal is not homogeneous")

    def wd(g):
        e = next(iter(g.terms))
        return sum(a * b for a, b in zip(e, wdeg))

    cands = sorted(G.elements, key=lambda g: (wd(g), order.key(g.leading_monomial(order))))
    kept: list[Polynomial] = []
    for g in cands:
        if kept and not normal_form(g, buchberger(kept, order).elements, order):
            continue
        kept.append(g)
    return kept
