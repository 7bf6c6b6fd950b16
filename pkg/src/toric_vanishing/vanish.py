"""Vanishing ideals of parameterized subgroups Y_Q of the torus T_X.

Two independent routes:

* elimination: build an ideal J in K[x, y, z(, w)] whose intersection with
  K[x] is I(Y_Q) and eliminate with a lex Groebner basis;
* lattice: I(Y_Q) = I_L for L = {m in L_beta : Q m = 0 mod (q-1)}, with the
  lattice ideal computed by saturating the basis binomials.

The closed-form lattice (L_Q ∩ L_beta) + (q-1) L_beta and the colon test
deciding when it is the right one are provided as well, together with the
diagonal-Q formula and the finite Nullstellensatz identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .gf import order_of
from .groebner import (
    GroebnerBasis,
    Ideal,
    eliminate,
    ideal_eq,
    ideal_sum,
    minimal_generators,
    saturate_vars,
)
from .intlin import (
    IntMatrix,
    Lattice,
    image_lattice,
    kernel_lattice,
    lattice_colon,
    lattice_intersect,
    lattice_scale,
    lattice_sum,
)
from .polyring import MonomialOrder, PolyRing, Polynomial, to_binomial
from .toric import ToricSetup, is_homogeneous_Q, normalize_Q, positive_weight

__all__ = [
    "VanishingResult",
    "cox_ring",
    "build_J_general",
    "build_J_simple",
    "vanishing_via_elimination",
    "lattice_L1",
    "condition_holds",
    "lattice_L_thm",
    "lattice_ideal",
    "vanishing_via_lattice",
    "degenerate_lattice",
    "nullstellensatz_check",
    "NullstellensatzReport",
]


def _Q(Q, setup: ToricSetup) -> IntMatrix:
    Q = Q if isinstance(Q, IntMatrix) else IntMatrix(Q, setup.r)
    if Q.ncols != setup.r:
        raise ValueError(f"Q has {Q.ncols} columns, expected r={setup.r}")
    return Q


def cox_ring(setup: ToricSetup) -> PolyRing:
    """S = F_q[x1..xr] graded by beta."""
    return PolyRing.standard(setup.field, setup.r, grading=setup.beta)


@dataclass
class VanishingResult:
    ideal: Ideal
    method: str
    lattice_used: Lattice | None = None
    condition_held: bool | None = None
    elimination_gb: GroebnerBasis | None = field(default=None, repr=False)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def gb(self) -> GroebnerBasis:
        """Reduced grevlex basis (x1 > ... > xr), the canonical presentation."""
        return self.ideal.gb()

    def generators(self) -> list[Polynomial]:
        """Minimal homogeneous generators, or the grevlex basis if no positive weight exists."""
        return presentation(self.ideal)

    def generator_strings(self) -> list[str]:
        return [g.to_str() for g in self.generators()]


def presentation(I: Ideal) -> list[Polynomial]:
    beta = I.ring.grading
    w = positive_weight(beta) if beta is not None else None
    if w is None or not I.is_homogeneous():
        return list(I.gb().elements)
    return minimal_generators(I, w)


def _yzw_ring(setup: ToricSetup, s: int, with_w: bool) -> PolyRing:
    names = [f"x{i + 1}" for i in range(setup.r)]
    names += [f"y{i + 1}" for i in range(s)]
    names += [f"z{i + 1}" for i in range(setup.d)]
    if with_w:
        names.append("w")
    return PolyRing(setup.field, names)


def _split(v: Sequence[int]) -> tuple[list[int], list[int]]:
    return [max(a, 0) for a in v], [max(-a, 0) for a in v]


def build_J_general(Q, setup: ToricSetup) -> Ideal:
    """J in K[x, y, z, w] for arbitrary integer Q and beta.

    Generators: x_i y^{q_i-} z^{b_i-} - y^{q_i+} z^{b_i+} for each column,
    y_j^{q-1} - 1, and w * prod_i y^{q_i-} z^{b_i-} - 1.
    """
    Q = _Q(Q, setup)
    r, s, d = setup.r, Q.nrows, setup.d
    R = _yzw_ring(setup, s, with_w=True)
    gens = []
    h = [0] * (s + d)
    for i in range(r):
        qp, qm = _split(Q.column(i))
        bp, bm = _split(setup.beta.column(i))
        minus = qm + bm
        lhs = [int(j == i) for j in range(r)] + minus + [0]
        rhs = [0] * r + qp + bp + [0]
        gens.append(R.monomial(lhs) - R.monomial(rhs))
        h = [a + b for a, b in zip(h, minus)]
    for j in range(s):
        e = [0] * R.nvars
        e[r + j] = setup.q - 1
        gens.append(R.monomial(e) - R.one)
    gens.append(R.monomial([0] * r + h + [1]) - R.one)
    return Ideal(R, gens)


def build_J_simple(Q, setup: ToricSetup) -> Ideal:
    """J = <x_i - y^{q_i} z^{b_i}, y_j^{q-1} - 1> for nonnegative Q and beta."""
    Q = _Q(Q, setup)
    if any(v < 0 for row in Q.rows for v in row):
        raise ValueError("Q has negative entries; normalize it first")
    if not setup.beta_nonnegative:
        raise ValueError("beta has negative entries; the simple construction needs beta >= 0")
    r, s = setup.r, Q.nrows
    R = _yzw_ring(setup, s, with_w=False)
    gens = []
    for i in range(r):
        x = [int(j == i) for j in range(r)] + [0] * (s + setup.d)
        yz = [0] * r + list(Q.column(i)) + list(setup.beta.column(i))
        gens.append(R.monomial(x) - R.monomial(yz))
    for j in range(s):
        e = [0] * R.nvars
        e[r + j] = setup.q - 1
        gens.append(R.monomial(e) - R.one)
    return Ideal(R, gens)


def vanishing_via_elimination(Q, setup: ToricSetup, general: bool = False) -> VanishingResult:
    """I(Y_Q) = J ∩ S from a lex basis with w > z_1 > .. > z_d > y_1 > .. > y_s > x_1 > .. > x_r.

    With ``general=False`` Q is first reduced mod q-1 and beta must be
    nonnegative.
    """
    Q = _Q(Q, setup)
    if general:
        J = build_J_general(Q, setup)
    else:
        J = build_J_simple(normalize_Q(Q, setup.q), setup)
    r = setup.r
    R = J.ring
    aux = list(range(r, R.nvars))
    # w first, then z block, then y block, then x
    w = [R.nvars - 1] if general else []
    zs = list(range(r + Q.nrows, r + Q.nrows + setup.d))
    ys = list(range(r, r + Q.nrows))
    priority = w + zs + ys + list(range(r))
    S = cox_ring(setup)
    I = eliminate(J, aux, target=S, order="lex", priority=priority)
    lex_gb = I.gb(MonomialOrder.lex(r))
    return VanishingResult(
        Ideal(S, I.generators),
        "elimination-general" if general else "elimination-simple",
        elimination_gb=lex_gb,
    )


def lattice_L1(Q, setup: ToricSetup) -> Lattice:
    """{m in L_beta : Q m = 0 mod (q-1)}.

    Computed as phi U where U = {u in Z^n : (Q phi) u = 0 mod (q-1)}, the
    projection of the kernel of [Q phi | (q-1) I].
    """
    Q = _Q(Q, setup)
    s, n = Q.nrows, setup.n
    M = Q @ setup.phi
    k = setup.q - 1
    aug = IntMatrix([list(row) + [k * int(i == j) for j in range(s)] for i, row in enumerate(M.rows)], n + s)
    if s == 0:
        U = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    else:
        U = [v[:n] for v in kernel_lattice(aug).basis]
    return Lattice.span((setup.phi.apply(u) for u in U), setup.r)


def script_L(Q, setup: ToricSetup) -> Lattice:
    """The image lattice Q L_beta = column span of Q phi in Z^s."""
    return image_lattice(_Q(Q, setup) @ setup.phi)


def condition_holds(Q, setup: ToricSetup) -> bool:
    """True iff Q L_beta equals its colon by q-1."""
    LL = script_L(Q, setup)
    return LL == lattice_colon(LL, setup.q - 1)


def lattice_L_thm(Q, setup: ToricSetup) -> Lattice:
    """(L_Q ∩ L_beta) + (q-1) L_beta."""
    Q = _Q(Q, setup)
    Lb = kernel_lattice(setup.beta)
    return lattice_sum(lattice_intersect(kernel_lattice(Q), Lb), lattice_scale(setup.q - 1, Lb))


def lattice_ideal(L: Lattice, setup_or_ring) -> Ideal:
    """I_L: saturation of the basis binomials at x1...xr."""
    ring = setup_or_ring if isinstance(setup_or_ring, PolyRing) else cox_ring(setup_or_ring)
    if L.ambient_dim != ring.nvars:
        raise ValueError(f"lattice in Z^{L.ambient_dim} for a ring with {ring.nvars} variables")
    gens = [to_binomial(m, ring) for m in L.basis]
    return saturate_vars(Ideal(ring, gens))


def vanishing_via_lattice(Q, setup: ToricSetup) -> VanishingResult:
    """I(Y_Q) = I_{L1}; the closed-form lattice is cross-checked when the condition holds."""
    L1 = lattice_L1(Q, setup)
    held = condition_holds(Q, setup)
    if held and L1 != lattice_L_thm(Q, setup):
        raise AssertionError("colon condition holds but the closed-form lattice differs")
    return VanishingResult(lattice_ideal(L1, setup), "lattice", lattice_used=L1, condition_held=held)


def degenerate_orders(q_diag: Sequence[int], setup: ToricSetup) -> list[int]:
    """d_i = multiplicative order of eta^{q_i}."""
    F = setup.field
    return [order_of(F.primitive**qi) for qi in q_diag]


def degenerate_lattice(q_diag: Sequence[int], setup: ToricSetup) -> Lattice:
    """D (ker beta D) for Q = diag(q_diag), D = diag(order of eta^{q_i})."""
    if len(q_diag) != setup.r:
        raise ValueError(f"need {setup.r} diagonal entries")
    ds = degenerate_orders(q_diag, setup)
    D = IntMatrix.diag(ds)
    K = kernel_lattice(setup.beta @ D)
    return Lattice.span((D.apply(v) for v in K.basis), setup.r)


@dataclass
class NullstellensatzReport:
    condition: bool
    lattice: Lattice
    sum_identity: bool
    saturated_sum_identity: bool
    torus_loci_equal: bool
    Y_size: int
    V_size: int
    V_equals_Y: bool
    ideal_of_V_equals_IL: bool | None
    IYQ_equals_IL: bool

    def as_dict(self) -> dict:
        return {
            "condition_held": self.condition,
            "lattice_basis": self.lattice.tolist(),
            "I_L == I_LQ + I_(q-1)Lbeta": self.sum_identity,
            "I_L == sat(I_LQ + I_(q-1)Lbeta)": self.saturated_sum_identity,
            "V(I_LQ) == V(I_L) on torus": self.torus_loci_equal,
            "|Y_Q|": self.Y_size,
            "|V_Q|": self.V_size,
            "V_Q == Y_Q": self.V_equals_Y,
            "I(V(I_L)) == I_L": self.ideal_of_V_equals_IL,
            "I(Y_Q) == I_L": self.IYQ_equals_IL,
        }


def nullstellensatz_check(Q, setup: ToricSetup, max_points: int = 32) -> NullstellensatzReport:
    """Check the finite Nullstellensatz statements for a homogeneous Q.

    ``I(V(I_L)) == I_L`` is only evaluated when the condition holds and the
    zero locus has at most ``max_points`` points; otherwise it is None.
    """
    from . import points

    Q = _Q(Q, setup)
    if not is_homogeneous_Q(Q, setup):
        raise ValueError("Q is not homogeneous (ker Q is not contained in ker beta)")
    S = cox_ring(setup)
    LQ = kernel_lattice(Q)
    Lb = kernel_lattice(setup.beta)
    scaled = lattice_scale(setup.q - 1, Lb)
    L = lattice_sum(LQ, scaled)
    I_L = lattice_ideal(L, S)
    I_LQ = lattice_ideal(LQ, S)
    summed = ideal_sum(I_LQ, lattice_ideal(scaled, S))
    held = condition_holds(Q, setup)

    V_Q = points.zero_locus(I_LQ, setup)
    V_L = points.zero_locus(I_L, setup)
    Y = points.enumerate_YQ(Q, setup)
    iv = None
    if held and 0 < len(V_L) <= max_points:
        iv = ideal_eq(points.ideal_of_points(V_L, setup), I_L)
    IY = vanishing_via_lattice(Q, setup).ideal
    return NullstellensatzReport(
        condition=held,
        lattice=L,
        sum_identity=ideal_eq(I_L, summed),
        saturated_sum_identity=ideal_eq(I_L, saturate_vars(summed)),
        torus_loci_equal=V_Q == V_L,
        Y_size=len(Y),
        V_size=len(V_Q),
        V_equals_Y=V_Q == Y,
        ideal_of_V_equals_IL=iv,
        IYQ_equals_IL=ideal_eq(IY, I_L),
    )


def gcd_orders(q_diag: Sequence[int], q: int) -> list[int]:
    """(q-1)/gcd(q-1, q_i), the closed form of the degenerate orders."""
    return [(q - 1) // math.gcd(q - 1, qi) for qi in q_diag]


def presentation_strings(I: Ideal) -> list[str]:
    return [g.to_str() for g in presentation(I)]
