"""Sparse multivariate polynomials over F_q with an optional Z^d grading.

A polynomial is a mapping from exponent tuples to nonzero integer-encoded
field elements (see :mod:`toric_vanishing.gf`). Polynomials are immutable;
arithmetic returns new objects.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .gf import FqElem, FqField
from .intlin import IntMatrix

__all__ = [
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "mono_degree",
    "to_binomial",
    "is_homogeneous_poly",
    "compare",
]

Exp = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on n variables.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"elim"``. ``priority`` lists the
    variable indices from most to least significant. ``"elim"`` is the block
    order that compares the first ``block`` variables of ``priority`` by
    grevlex and breaks ties by grevlex on the rest; it eliminates that block.
    """

    kind: str
    priority: tuple[int, ...]
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation of the variable indices")

    @classmethod
    def lex(cls, n: int, priority: Sequence[int] | None = None) -> MonomialOrder:
        return cls("lex", tuple(range(n)) if priority is None else tuple(priority))

    @classmethod
    def grevlex(cls, n: int, priority: Sequence[int] | None = None) -> MonomialOrder:
        return cls("grevlex", tuple(range(n)) if priority is None else tuple(priority))

    @classmethod
    def elimination(cls, n: int, drop: Iterable[int]) -> MonomialOrder:
        drop = sorted(set(drop))
        rest = [i for i in range(n) if i not in drop]
        return cls("elim", tuple(drop + rest), len(drop))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    @cached_property
    def key(self) -> Callable[[Exp], tuple]:
        """Sort key: ``key(a) > key(b)`` iff ``a > b`` in this order."""
        pr = self.priority
        identity = pr == tuple(range(len(pr)))
        if self.kind == "lex":
            if identity:
                return tuple
            return lambda e: tuple([e[i] for i in pr])
        if self.kind == "grevlex":
            rev = pr[::-1]
            return lambda e: (sum(e), tuple([-e[i] for i in rev]))
        head, tail = pr[: self.block], pr[self.block :]
        rh, rt = head[::-1], tail[::-1]

        def elim_key(e):
            return (
                sum([e[i] for i in head]),
                tuple([-e[i] for i in rh]),
                sum([e[i] for i in tail]),
                tuple([-e[i] for i in rt]),
            )

        return elim_key

    def restrict(self, keep: Sequence[int]) -> MonomialOrder:
        """The order induced on the variables ``keep`` (renumbered 0..len-1)."""
        pos = {v: i for i, v in enumerate(keep)}
        pr = tuple(pos[v] for v in self.priority if v in pos)
        kind = "grevlex" if self.kind == "elim" else self.kind
        return MonomialOrder(kind, pr)


def compare(order: MonomialOrder, a: Exp, b: Exp) -> int:
    """-1, 0 or 1 as a <, =, > b."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different lengths")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def mono_degree(a: Sequence[int], beta) -> tuple[int, ...]:
    """Z^d-degree beta @ a of the monomial x^a."""
    beta = beta if isinstance(beta, IntMatrix) else IntMatrix(beta)
    if len(a) != beta.ncols:
        raise ValueError(f"exponent length {len(a)} vs {beta.ncols} grading columns")
    return beta.apply(a)


class PolyRing:
    """F_q[names...], optionally graded by the columns of ``grading``."""

    def __init__(self, field: FqField, names: Sequence[str], grading: IntMatrix | None = None):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if grading is not None:
            grading = grading if isinstance(grading, IntMatrix) else IntMatrix(grading)
            if grading.ncols != len(self.names):
                raise ValueError("grading matrix must have one column per variable")
        self.grading = grading
        self._index = {n: i for i, n in enumerate(self.names)}

    @classmethod
    def standard(cls, field: FqField, r: int, grading=None, prefix: str = "x") -> PolyRing:
        return cls(field, [f"{prefix}{i + 1}" for i in range(r)], grading)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.grading == other.grading
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {list(self.names)})"

    def index(self, name: str) -> int:
        return self._index[name]

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.monomial((0,) * self.nvars)

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        n = self.nvars
        return tuple(self.monomial(tuple(int(i == j) for j in range(n))) for i in range(n))

    def monomial(self, exp: Sequence[int], coeff: int = 1) -> Polynomial:
        c = coeff.value if isinstance(coeff, FqElem) else self.field.from_int(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def poly(self, terms: Mapping[Sequence[int], int]) -> Polynomial:
        """Build from {exponent: integer-encoded coefficient}; zeros are dropped."""
        return Polynomial(self, {tuple(e): c for e, c in terms.items() if c})

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.grevlex(self.nvars)

    def extend(self, names: Sequence[str]) -> PolyRing:
        """A ring with extra variables appended (grading is dropped)."""
        return PolyRing(self.field, self.names + tuple(names))

    def embed(self, f: Polynomial, target: PolyRing) -> Polynomial:
        """Map f into ``target`` by variable name."""
        pos = [target.index(n) for n in self.names]
        out = {}
        for e, c in f.terms.items():
            ne = [0] * target.nvars
            for i, a in zip(pos, e):
                ne[i] = a
            out[tuple(ne)] = c
        return Polynomial(target, out)

    def parse(self, text: str) -> Polynomial:
        return _parse(self, text)

    def fresh_name(self, base: str) -> str:
        name = base
        while name in self._index:
            name += "_"
        return name


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.monomial((0,) * self.ring.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def support(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Exp, int]]:
        key = (order or self.ring.default_order()).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Exp:
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder) -> int:
        return self.terms[self.leading_monomial(order)]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # arithmetic

    def _check(self, other: Polynomial):
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FqElem)):
            return self.ring.monomial((0,) * self.ring.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        add = self.ring.field.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FqElem)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                v = F.add(out.get(e, 0), F.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        F = self.ring.field
        c = c.value if isinstance(c, FqElem) else F.from_int(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {e: F.mul(c, a) for e, a in self.terms.items()})

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.terms:
            return self
        F = self.ring.field
        lc = self.leading_coeff(order or self.ring.default_order())
        inv = F.inv(lc)
        return Polynomial(self.ring, {e: F.mul(inv, c) for e, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> FqElem:
        """Value at a point given as FqElem or integer-encoded coordinates."""
        F = self.ring.field
        vals = [v.value if isinstance(v, FqElem) else v for v in point]
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, a in zip(vals, e):
                if a:
                    t = F.mul(t, F.pow(v, a))
            total = F.add(total, t)
        return FqElem(F, total)

    # grading

    def degrees(self, beta=None) -> set[tuple[int, ...]]:
        beta = self.ring.grading if beta is None else beta
        if beta is None:
            raise ValueError("ring has no grading")
        return {mono_degree(e, beta) for e in self.terms}

    # text

    def to_str(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                n if a == 1 else f"{n}^{a}" for n, a in zip(self.ring.names, e) if a
            )
            if F.is_prime:
                s = F.signed(c)
                sign = "-" if s < 0 else "+"
                mag = abs(s)
                coeff = "" if mag == 1 and mono else str(mag)
            else:
                sign = "+"
                digits = FqElem(F, c).coeffs
                coeff = (
                    ""
                    if c == 1 and mono
                    else "(" + "+".join(_upoly_terms(digits)) + ")"
                )
            body = "*".join(x for x in (coeff, mono) if x)
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _upoly_terms(digits: list[int]) -> list[str]:
    out = []
    for i, c in enumerate(digits):
        if not c:
            continue
        if i == 0:
            out.append(str(c))
        else:
            u = "u" if i == 1 else f"u^{i}"
            out.append(u if c == 1 else f"{c}*{u}")
    return out or ["0"]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    kinds = ("int", "name", "^", "*", "+", "-", "(", ")")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                out.append((kind, val))
                break
        pos = m.end()
    return out


def _parse(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``c*x1^2*x2 - x4 + (1+u)*x3`` style text.

    Parenthesized coefficients are polynomials in ``u``, the generator of
    the extension field over its prime subfield.
    """
    toks = _tokenize(text)
    F = ring.field
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind):
            raise ValueError(f"unexpected token {tok[1]!r} in {text!r}")
        pos += 1
        return tok

    def field_coeff() -> int:
        # inside parentheses: sum of [int][*]u[^k]
        coeffs = [0] * F.k
        sign = 1
        while True:
            kind, val = peek()
            if kind == "-":
                take()
                sign = -sign
                continue
            if kind == "+":
                take()
                continue
            if kind == ")":
                take()
                break
            c = 1
            if kind == "int":
                c = int(take()[1])
                if peek()[0] == "*":
                    take()
                elif peek()[1] != "u":
                    coeffs[0] += sign * c
                    sign = 1
                    continue
            name = take("name")[1]
            if name != "u":
                raise ValueError(f"unknown field generator {name!r}")
            k = 1
            if peek()[0] == "^":
                take()
                k = int(take("int")[1])
            if k >= F.k:
                raise ValueError(f"u^{k} is not reduced for GF({F.q})")
            coeffs[k] += sign * c
            sign = 1
        return F(coeffs).value

    terms: dict = {}
    nv = ring.nvars
    sign = 1
    expect_term = True
    while pos < len(toks):
        kind, val = peek()
        if kind in ("+", "-"):
            take()
            if kind == "-":
                sign = -sign
            expect_term = True
            continue
        if not expect_term:
            raise ValueError(f"missing operator before {val!r} in {text!r}")
        coeff = F.from_int(1)
        exp = [0] * nv
        while True:
            kind, val = peek()
            if kind == "int":
                take()
                coeff = F.mul(coeff, F.from_int(int(val)))
            elif kind == "(":
                take()
                coeff = F.mul(coeff, field_coeff())
            elif kind == "name":
                take()
                if val not in ring._index:
                    raise ValueError(f"unknown variable {val!r}")
                a = 1
                if peek()[0] == "^":
                    take()
                    a = int(take("int")[1])
                exp[ring.index(val)] += a
            else:
                raise ValueError(f"unexpected token {val!r} in {text!r}")
            if peek()[0] == "*":
                take()
                continue
            break
        if sign < 0:
            coeff = F.neg(coeff)
        e = tuple(exp)
        v = F.add(terms.get(e, 0), coeff)
        if v:
            terms[e] = v
        else:
            terms.pop(e, None)
        sign = 1
        expect_term = False
    return Polynomial(ring, terms)


def to_binomial(m: Sequence[int], ring: PolyRing) -> Polynomial:
    """x^{m+} - x^{m-} for an integer vector m."""
    if len(m) != ring.nvars:
        raise ValueError(f"vector of length {len(m)} for a ring with {ring.nvars} variables")
    plus = tuple(max(v, 0) for v in m)
    minus = tuple(max(-v, 0) for v in m)
    return ring.monomial(plus) - ring.monomial(minus)


def is_homogeneous_poly(f: Polynomial, beta=None) -> tuple[bool, tuple[int, ...] | None]:
    """(True, degree) when all terms share one degree, else (False, None).

    The zero polynomial counts as homogeneous of degree 0.
    """
    beta = f.ring.grading if beta is None else beta
    if beta is None:
        raise ValueError("no grading given")
    beta = beta if isinstance(beta, IntMatrix) else IntMatrix(beta)
    if beta.ncols != f.ring.nvars:
        raise ValueError("grading does not match the ring")
    degs = f.degrees(beta)
    if not degs:
        return True, (0,) * beta.nrows
    if len(degs) == 1:
        return True, next(iter(degs))
    return False, None
