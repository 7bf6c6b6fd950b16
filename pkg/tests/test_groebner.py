import itertools
import random

import pytest

from toric_vanishing.gf import make_field
from toric_vanishing.groebner import (
    Ideal,
    buchberger,
    eliminate,
    ideal_eq,
    ideal_intersect,
    ideal_sum,
    normal_form,
    saturate_vars,
    spoly,
)
from toric_vanishing.limits import BudgetExceeded, budget
from toric_vanishing.polyring import MonomialOrder, PolyRing, to_binomial

F11 = make_field(11)
S4 = PolyRing.standard(F11, 4)
H2_GENS = ["x1^2*x2 - x4", "x1^5 - x3^5"]


def ideal(ring, *polys):
    return Ideal(ring, [ring.parse(p) for p in polys])


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def check_reduced_gb(G, order):
    """Independent check: S-pairs reduce to zero, monic, auto-reduced."""
    els = list(G.elements)
    lms = [g.leading_monomial(order) for g in els]
    for f, g in itertools.combinations(els, 2):
        assert normal_form(spoly(f, g, order), els, order).is_zero()
    for i, g in enumerate(els):
        assert g.leading_coeff(order) == 1
        for e in g.terms:
            for j, lm in enumerate(lms):
                if j != i:
                    assert not divides(lm, e)


def test_normal_form_examples():
    g = S4.parse("x1^2*x2 - x4")
    lex = MonomialOrder.lex(4)
    assert normal_form(g, [g], lex).is_zero()
    R = PolyRing(F11, ["y"])
    y = R.parse("y")
    assert normal_form(y**11, [R.parse("y^10 - 1")], MonomialOrder.lex(1)) == y
    G = buchberger(ideal(S4, *H2_GENS), lex)
    assert normal_form(S4.parse("x1^5"), G.elements, lex) == S4.parse("x3^5")


def test_buchberger_examples():
    R = PolyRing(F11, ["x", "y", "z"])
    lex = MonomialOrder.lex(3)
    f = R.parse("3*x^2*y + y")
    assert buchberger(Ideal(R, [f]), lex).elements == (f.monic(lex),)
    G = buchberger(ideal(R, "x - y", "y - z"), lex)
    assert sorted(G.strings()) == ["x - z", "y - z"]


def test_eliminate_examples():
    R = PolyRing(F11, ["x", "y"])
    assert eliminate(ideal(R, "x - y"), [1]).is_zero()
    R = PolyRing(F11, ["t", "x", "y"])
    E = eliminate(ideal(R, "x - t", "y - t^2"), [0])
    assert [g.monic() for g in E.generators] == [E.ring.parse("x^2 - y").monic()]


def test_saturate_examples():
    S2 = PolyRing.standard(F11, 2)
    assert ideal_eq(saturate_vars(ideal(S2, "x1^2 - x1*x2")), ideal(S2, "x1 - x2"))
    I = ideal(S4, *H2_GENS)
    assert ideal_eq(saturate_vars(I), I)
    assert saturate_vars(Ideal(S4)).is_zero()


def test_ideal_ops_examples():
    I = ideal(S4, *H2_GENS)
    assert ideal_eq(I, I)
    assert not ideal_eq(ideal(S4, "x1^5 - x3^5"), ideal(S4, "x1^10 - x3^10"))
    R = PolyRing(F11, ["x", "y"])
    assert ideal_eq(ideal_intersect(ideal(R, "x"), ideal(R, "y")), ideal(R, "x*y"))
    assert ideal_eq(ideal_sum(ideal(R, "x"), ideal(R, "y")), ideal(R, "x", "y"))


def test_budget_error():
    R = PolyRing(F11, ["x", "y", "z"])
    I = ideal(R, "x^3 - y*z", "y^3 - x*z", "z^3 - x*y")
    with budget(max_reductions=3):
        with pytest.raises(BudgetExceeded):
            buchberger(I, MonomialOrder.lex(3))
    # the cap is scoped to the context
    buchberger(I, MonomialOrder.lex(3))


def random_binomial_ideal(rng, ring, k):
    gens = []
    for _ in range(k):
        m = [rng.randint(-3, 3) for _ in range(ring.nvars)]
        f = to_binomial(m, ring)
        if f:
            gens.append(f)
    return gens


@pytest.mark.parametrize("kind", ["lex", "grevlex"])
def test_gb_postconditions_random(kind):
    rng = random.Random(3 if kind == "lex" else 4)
    order = getattr(MonomialOrder, kind)(4)
    for _ in range(15):
        gens = random_binomial_ideal(rng, S4, rng.randint(1, 3))
        if not gens:
            continue
        G = buchberger(gens, order)
        check_reduced_gb(G, order)
        for g in gens:
            assert normal_form(g, G.elements, order).is_zero()


def test_permutation_uniqueness():
    rng = random.Random(5)
    order = MonomialOrder.grevlex(4)
    for _ in range(15):
        gens = random_binomial_ideal(rng, S4, 3)
        if not gens:
            continue
        G = buchberger(gens, order)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, order).elements == G.elements


def test_membership_two_orders():
    rng = random.Random(6)
    for _ in range(10):
        gens = random_binomial_ideal(rng, S4, 2)
        if not gens:
            continue
        Ga = buchberger(gens, MonomialOrder.lex(4))
        Gb = buchberger(gens, MonomialOrder.grevlex(4))
        for _ in range(5):
            f = S4.monomial([rng.randint(0, 3) for _ in range(4)]) - S4.monomial([rng.randint(0, 3) for _ in range(4)])
            a = normal_form(f, Ga.elements, Ga.order).is_zero()
            b = normal_form(f, Gb.elements, Gb.order).is_zero()
            assert a == b
        # combinations of generators are always members
        f = gens[0] * S4.parse("x1 + 2*x3")
        assert normal_form(f, Ga.elements, Ga.order).is_zero()


def test_eliminate_is_subset():
    rng = random.Random(9)
    R = PolyRing.standard(F11, 5)
    for _ in range(8):
        gens = random_binomial_ideal(rng, R, 3)
        if not gens:
            continue
        I = Ideal(R, gens)
        E = eliminate(I, [0, 1], order="elim")
        G = I.gb()
        for g in E.generators:
            lifted = R.poly({(0, 0) + e: c for e, c in g.terms.items()})
            assert normal_form(lifted, G.elements, G.order).is_zero()


def test_lex_and_elim_agree():
    R = PolyRing(F11, ["t", "x", "y", "z"])
    I = ideal(R, "x - t^2", "y - t^3", "z - t^5")
    a = eliminate(I, [0], order="lex")
    b = eliminate(I, [0], order="elim")
    assert ideal_eq(a, b)
