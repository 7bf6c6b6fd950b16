"""Arithmetic in F_q, q = p^k.

Elements are encoded as integers ``0 <= a < q``: the base-p digits of ``a``
are the coefficients (constant term first) of a polynomial in ``u`` reduced
modulo the field's defining polynomial. For prime q this is the usual
residue. Polynomial code works directly on these integers through the
``FqField`` methods; ``FqElem`` is the user-facing wrapper.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from itertools import product

__all__ = ["FqField", "FqElem", "make_field", "factor_prime_power", "prime_factors"]

MAX_Q = 1 << 16


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"q={q} is not a prime power")
    p = ps[0]
    k = round(math.log(q, p))
    if p**k != q:
        k = next(e for e in range(1, q.bit_length() + 1) if p**e == q)
    return p, k


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(c, p: int) -> int:
    a = 0
    for x in reversed(c):
        a = a * p + x
    return a


def _polymulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    k = len(mod) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # mod is monic
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * mod[j]) % p
    return prod[:k]


def _has_root_factor(f: tuple[int, ...], p: int) -> bool:
    """True if f (monic, coeffs low->high) has a monic factor of degree 1..deg/2."""
    k = len(f) - 1
    for dg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=dg):
            g = list(low) + [1]
            # long division of f by g over F_p
            r = list(f)
            for d in range(k, dg - 1, -1):
                c = r[d]
                if c:
                    for j in range(dg + 1):
                        r[d - dg + j] = (r[d - dg + j] - c * g[j]) % p
            if not any(r[:dg]):
                return True
    return False


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # candidates ordered by their integer encoding, i.e. lexicographically
    # on (c_{k-1}, ..., c_0)
    for code in range(p**k):
        f = tuple(_digits(code, p, k)) + (1,)
        if f[0] == 0 and k > 1:
            continue
        if k == 1 or not _has_root_factor(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True, eq=False)
class FqField:
    """The finite field F_q with a fixed modulus and primitive element ``eta``."""

    p: int
    k: int
    modulus: tuple[int, ...]
    eta: int
    _exp: tuple[int, ...] = field(repr=False)
    _log: dict = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"

    # raw integer-encoded arithmetic

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return _undigits([-c % self.p for c in _digits(a, self.p, self.k)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def exp(self, h: int) -> int:
        """eta**h."""
        return self._exp[h % (self.q - 1)]

    def dlog(self, a: int) -> int:
        """The unique h in [0, q-2] with eta**h == a."""
        if a == 0:
            raise ValueError("discrete log of zero")
        return self._log[a]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_q."""
        return n % self.p

    def signed(self, a: int) -> int:
        """Prime-field residue as the representative closest to zero."""
        return a - self.p if a > self.p // 2 else a

    # user-facing elements

    def __call__(self, value) -> FqElem:
        if isinstance(value, FqElem):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.k:
                raise ValueError(f"too many coefficients for {self!r}")
            return FqElem(self, _undigits([int(c) % self.p for c in value], self.p))
        return FqElem(self, self.from_int(int(value)))

    def element(self, code: int) -> FqElem:
        """Element with the given integer encoding."""
        if not 0 <= code < self.q:
            raise ValueError(f"encoding {code} out of range for {self!r}")
        return FqElem(self, code)

    @property
    def primitive(self) -> FqElem:
        return FqElem(self, self.eta)

    def elements(self):
        return [FqElem(self, a) for a in range(self.q)]

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        return str(_digits(a, self.p, self.k))


@dataclass(frozen=True)
class FqElem:
    field: FqField
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FqElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FqElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return FqElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return FqElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return FqElem(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.pow(self.value, e))

    def inv(self) -> FqElem:
        return FqElem(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return self.field.format(self.value)

    @property
    def coeffs(self) -> list[int]:
        return _digits(self.value, self.field.p, self.field.k)


def order_of(t: FqElem) -> int:
    """Multiplicative order of a nonzero element."""
    if not t:
        raise ValueError("zero has no multiplicative order")
    n = t.field.q - 1
    return n // math.gcd(n, t.field.dlog(t.value))


def dlog(t: FqElem) -> int:
    return t.field.dlog(t.value)


@functools.lru_cache(maxsize=None)
def make_field(q: int) -> FqField:
    """Build F_q with the smallest irreducible modulus and smallest primitive element.

    "Smallest" is by integer encoding; for q prime the modulus is ``u`` and
    eta is the least primitive root mod q.
    """
    p, k = factor_prime_power(q)
    if q > MAX_Q:
        raise ValueError(f"q={q} exceeds the supported size {MAX_Q}")
    modulus = _smallest_irreducible(p, k) if k > 1 else (0, 1)

    def slow_mul(a, b):
        if k == 1:
            return a * b % p
        return _undigits(_polymulmod(_digits(a, p, k), _digits(b, p, k), modulus, p), p)

    def slow_pow(a, e):
        r = 1
        while e:
            if e & 1:
                r = slow_mul(r, a)
            a = slow_mul(a, a)
            e >>= 1
        return r

    n = q - 1
    ells = prime_factors(n) if n > 1 else []
    eta = next(
        g for g in range(1, q) if all(slow_pow(g, n // ell) != 1 for ell in ells)
    )
    exp = [1] * n
    for i in range(1, n):
        exp[i] = slow_mul(exp[i - 1], eta)
    log = {a: i for i, a in enumerate(exp)}
    if len(log) != n:
        raise AssertionError("eta is not primitive")
    return FqField(p, k, modulus, eta, tuple(exp), log)
