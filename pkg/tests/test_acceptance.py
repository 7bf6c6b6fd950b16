"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""

import itertools
import random
import time

import pytest

from toric_vanishing.codes import build_code, ideal_slice_dim, monomials_of_degree
from toric_vanishing.groebner import Ideal, buchberger, ideal_eq, ideal_sum, saturate_vars
from toric_vanishing.intlin import IntMatrix, Lattice, kernel_lattice, lattice_eq, lattice_scale, snf
from toric_vanishing.polyring import MonomialOrder, PolyRing, to_binomial
from toric_vanishing.points import enumerate_torus, enumerate_YQ, ideal_of_points, zero_locus
from toric_vanishing.toric import stack
from toric_vanishing.vanish import (
    condition_holds,
    cox_ring,
    degenerate_lattice,
    lattice_ideal,
    lattice_L1,
    lattice_L_thm,
    vanishing_via_elimination,
    vanishing_via_lattice,
)

from conftest import ACCEPTANCE_LINES, H2_BETA, Q_1234, VARIETIES, setup_for

A_ZERO_LOCUS = [[-1, 2, -1, 0], [0, 1, 0, 1], [0, 10, 0, 0], [0, 0, 1, 0]]
FIXTURE_QS = (2, 3, 4, 5, 7, 11)


def record(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def identity(r):
    return [[int(i == j) for j in range(r)] for i in range(r)]


def det(rows):
    if not rows:
        return 1
    return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1 :] for r in rows[1:]]) for j in range(len(rows)) if rows[0][j])


def instance_pool(seed, count):
    rng = random.Random(seed)
    names = sorted(VARIETIES)
    for _ in range(count):
        name = rng.choice(names)
        q = rng.choice([3, 5, 7])
        S = setup_for(name, q)
        s = rng.randint(1, 3)
        Q = [[rng.randint(0, q - 2) for _ in range(S.r)] for _ in range(s)]
        yield name, S, Q


def monic_set(polys, order):
    return {p.monic(order) for p in polys}


def test_criterion_1_hirzebruch_q11():
    S = setup_for("H2", 11)
    R = cox_ring(S)
    expected = [R.parse("x1^2*x2 - x4"), R.parse("x1^5 - x3^5")]
    # lex with x4 > x3 > x2 > x1, the order under which the pair is a reduced basis
    lex = MonomialOrder.lex(4, [3, 2, 1, 0])
    t0 = time.perf_counter()
    results = {
        "elimination": vanishing_via_elimination(Q_1234, S),
        "elimination-general": vanishing_via_elimination(Q_1234, S, general=True),
        "lattice": vanishing_via_lattice(Q_1234, S),
    }
    gbs = {k: set(r.ideal.gb(lex).elements) for k, r in results.items()}
    elapsed = time.perf_counter() - t0
    ok = all(g == monic_set(expected, lex) for g in gbs.values())
    ok &= all(r.generator_strings() == ["x1^2*x2 - x4", "x1^5 - x3^5"] for r in results.values())
    ok &= all(ideal_eq(r.ideal, Ideal(R, expected)) for r in results.values())
    ok &= elapsed < 5
    record(1, ok, f"H2, q=11, Q=[1,2,3,4]: reduced lex basis matches by all methods in {elapsed:.3f}s")


def test_criterion_2_condition_q2():
    S = setup_for("H2", 2)
    held = condition_holds(Q_1234, S)
    L = lattice_L_thm(Q_1234, S)
    ok = held and lattice_eq(L, Lattice.span([(-1, 0, 1, 0), (-2, -1, 0, 1)], 4))
    record(2, ok, f"H2, q=2, Q=[1,2,3,4]: condition={'yes' if held else 'no'}, L={L.tolist()}")


def test_criterion_3_stacked_q11():
    S = setup_for("H2", 11)
    R = cox_ring(S)
    Qp = stack(Q_1234, H2_BETA)
    LQp = kernel_lattice(Qp)
    Lb = kernel_lattice(H2_BETA)
    L = lattice_L_thm(Qp, S)
    IL = lattice_ideal(L, S)
    checks = {
        "L_Q'": LQp == Lattice.span([(2, 1, 0, -1)], 4),
        "L_beta": Lb == Lattice.span([(2, 1, 0, -1), (1, 0, -1, 0)], 4),
        "L": L == Lattice.span([(2, 1, 0, -1), (10, 0, -10, 0)], 4),
        "I_L": ideal_eq(IL, Ideal(R, [R.parse("x1^2*x2 - x4"), R.parse("x1^10 - x3^10")])),
        "condition=no": not condition_holds(Qp, S),
        "I(Y_A)=I_L": ideal_eq(vanishing_via_elimination(A_ZERO_LOCUS, S).ideal, IL),
    }
    Y = enumerate_YQ(Qp, S)
    V = zero_locus(IL, S)
    checks["|Y|=5,|V|=10"] = (len(Y), len(V)) == (5, 10)
    bad = [k for k, v in checks.items() if not v]
    record(3, not bad, f"H2, q=11, stacked Q': |Y_Q'|={len(Y)} |V_Q'|={len(V)}" + (f" failed: {bad}" if bad else ""))


def test_criterion_4_cross_method():
    disagreements = []
    oracle_runs = 0
    for name, S, Q in instance_pool(2024, 200):
        general = vanishing_via_elimination(Q, S, general=True).ideal
        simple = vanishing_via_elimination(Q, S).ideal
        lat = vanishing_via_lattice(Q, S).ideal
        ok = ideal_eq(general, simple) and ideal_eq(simple, lat)
        Y = enumerate_YQ(Q, S)
        if len(Y) <= 32:
            oracle_runs += 1
            ok = ok and ideal_eq(lat, ideal_of_points(Y, S))
        if not ok:
            disagreements.append((name, S.q, Q))
    record(4, not disagreements, f"200 instances, {oracle_runs} point-oracle checks, {len(disagreements)} disagreements")


def test_criterion_5_condition_equivalence():
    violations = []
    held = 0
    for name, S, Q in instance_pool(2024, 200):
        c = condition_holds(Q, S)
        held += c
        if c != lattice_eq(lattice_L_thm(Q, S), lattice_L1(Q, S)):
            violations.append((name, S.q, Q))
    record(5, not violations, f"200 instances ({held} with condition), {len(violations)} violations")


def test_criterion_6_degenerate():
    rng = random.Random(6)
    bad = []
    for _ in range(100):
        name = rng.choice(sorted(VARIETIES))
        q = rng.choice([3, 5, 7])
        S = setup_for(name, q)
        qd = [rng.randint(0, q - 2) for _ in range(S.r)]
        D = [[qd[i] if i == j else 0 for j in range(S.r)] for i in range(S.r)]
        L = degenerate_lattice(qd, S)
        ok = lattice_eq(L, lattice_L1(D, S))
        ok = ok and ideal_eq(lattice_ideal(L, S), vanishing_via_elimination(D, S).ideal)
        if not ok:
            bad.append((name, q, qd))
    record(6, not bad, f"100 diagonal Q, {len(bad)} failures")


def test_criterion_7_corollaries():
    bad = []
    for name, q in itertools.product(sorted(VARIETIES), FIXTURE_QS):
        S = setup_for(name, q)
        Lb = kernel_lattice(S.beta)
        I = identity(S.r)
        T = enumerate_torus(S)
        ok = lattice_L_thm(I, S) == lattice_scale(q - 1, Lb) and lattice_L1(I, S) == lattice_scale(q - 1, Lb)
        ok = ok and ideal_eq(vanishing_via_lattice(I, S).ideal, ideal_of_points(T, S, max_points=len(T)))
        Y = enumerate_YQ(S.beta, S)
        ok = ok and lattice_L1(S.beta, S) == Lb and lattice_L_thm(S.beta, S) == Lb
        ok = ok and Y.tolist() == [[0] * S.r]
        if not ok:
            bad.append((name, q))
    n = len(VARIETIES) * len(FIXTURE_QS)
    record(7, not bad, f"identity and beta corollaries on {n} fixtures, failures: {bad}")


def test_criterion_8_sum_identity():
    rng = random.Random(8)
    bad = []
    unsaturated_only = 0
    loci_differ = 0
    for _ in range(50):
        name = rng.choice(sorted(VARIETIES))
        q = rng.choice([3, 5, 7, 11])
        S = setup_for(name, q)
        Q = [[rng.randint(0, q - 2) for _ in range(S.r)] for _ in range(rng.randint(1, 2))]
        Qh = stack(Q, S.beta)
        LQ = kernel_lattice(Qh)
        scaled = lattice_scale(q - 1, kernel_lattice(S.beta))
        IL = lattice_ideal(LQ + scaled, S)
        summed = ideal_sum(lattice_ideal(LQ, S), lattice_ideal(scaled, S))
        if not ideal_eq(IL, summed):
            bad.append((name, q, Q))
            unsaturated_only += ideal_eq(IL, saturate_vars(summed))
        loci_differ += zero_locus(lattice_ideal(LQ, S), S) != zero_locus(IL, S)
    record(
        8,
        not bad,
        f"50 homogeneous Q, {len(bad)} violations of the unsaturated sum identity"
        f" ({unsaturated_only} of them hold after saturation; torus zero loci differ in {loci_differ})",
    )


def test_criterion_9_infrastructure():
    rng = random.Random(9)
    snf_bad = 0
    for _ in range(500):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        M = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)], n)
        D, P, K = snf(M)
        diag = [D[i, i] for i in range(min(m, n))]
        nz = [v for v in diag if v]
        ok = P @ M @ K == D and abs(det([list(r) for r in P.rows])) == 1 and abs(det([list(r) for r in K.rows])) == 1
        ok = ok and all(D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
        ok = ok and all(b % a == 0 for a, b in zip(nz, nz[1:])) and nz == diag[: len(nz)]
        snf_bad += not ok

    gb_bad = 0
    R = PolyRing.standard(setup_for("H2", 11).field, 4)
    order = MonomialOrder.grevlex(4)
    done = 0
    while done < 100:
        gens = [to_binomial([rng.randint(-3, 3) for _ in range(4)], R) for _ in range(rng.randint(2, 4))]
        gens = [g for g in gens if g]
        if not gens:
            continue
        done += 1
        ref = buchberger(gens, order).elements
        for _ in range(3):
            perm = gens[:]
            rng.shuffle(perm)
            gb_bad += buchberger(perm, order).elements != ref

    count_bad = []
    for name, q in itertools.product(sorted(VARIETIES), (2, 3, 4, 5, 7)):
        S = setup_for(name, q)
        if len(enumerate_torus(S)) != (q - 1) ** S.n:
            count_bad.append((name, q))
    ok = not snf_bad and not gb_bad and not count_bad
    record(9, ok, f"SNF 500 matrices ({snf_bad} bad), GB permutation 100 ideals ({gb_bad} bad), |T_X| counts ({len(count_bad)} bad)")


def test_criterion_10_codes():
    S = setup_for("H2", 11)
    I = vanishing_via_lattice(Q_1234, S).ideal
    # infinitely many alpha have |S_alpha| <= 6 (every (0, b) has only x2^b); use the box [0, q-1]^2
    box = itertools.product(range(S.q), repeat=2)
    alphas = [a for a in box if 1 <= len(monomials_of_degree(a, S)) <= 6]
    bad = []
    slowest = 0.0
    for a in alphas:
        t0 = time.perf_counter()
        c = build_code(Q_1234, a, S)
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        ok = c.k == len(c.basis) - ideal_slice_dim(I, a, S)
        ok = ok and c.d is not None and c.d <= c.n - c.k + 1 and dt < 10
        if not ok:
            bad.append(a)
    record(10, not bad, f"{len(alphas)} codes on Y_Q for H2, q=11, Q=[1,2,3,4], slowest {slowest:.3f}s, failures: {bad}")
