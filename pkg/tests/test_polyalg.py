import itertools
import random
from fractions import Fraction

import pytest

from polyoideals import (
    GridPoint,
    Monomial,
    MonomialOrder,
    ParseError,
    PolyRing,
    PreconditionError,
    QQ,
    build_ring,
    field_from_spec,
    order_compare,
)
from polyoideals.polyalg import MONOMIAL_ONE, PrimeField, Variable, aux_var, x_var
from tests.conftest import STAIR3_UNIVERSE


def all_monomials(nvars, max_degree):
    out = []
    for degs in itertools.product(range(max_degree + 1), repeat=nvars):
        if sum(degs) <= max_degree:
            out.append(Monomial(tuple((r, e) for r, e in enumerate(degs) if e)))
    return out


@pytest.mark.parametrize("kind,block", [("lex", 0), ("grevlex", 0), ("elim", 1)])
def test_order_axioms_by_exhaustion(kind, block):
    order = MonomialOrder(kind, 3, block=block)
    monos = all_monomials(3, 3)
    one = MONOMIAL_ONE
    for m1 in monos:
        c = order.compare(m1, m1)
        assert c == 0
        if m1 != one:
            assert order.compare(m1, one) > 0, "1 is the minimum"
    for m1, m2 in itertools.combinations(monos, 2):
        c12 = order.compare(m1, m2)
        c21 = order.compare(m2, m1)
        assert c12 in (-1, 1) and c21 == -c12, "total and antisymmetric"
    small = all_monomials(3, 2)
    for m1, m2 in itertools.combinations(small, 2):
        c = order.compare(m1, m2)
        for m in small:
            assert order.compare(m1 * m, m2 * m) == c, "multiplicative"
    # transitivity via sorting consistency
    keyed = sorted(monos, key=order.key)
    for a, b in zip(keyed, keyed[1:]):
        assert order.compare(a, b) <= 0


def test_order_compare_examples(fig2):
    ring = build_ring(fig2, "qq", "lex")
    m21 = ring.monomial({x_var(GridPoint(2, 1)): 1})
    m12 = ring.monomial({x_var(GridPoint(1, 2)): 1})
    assert order_compare(ring.order, m21, m12) > 0
    assert order_compare(ring.order, m21, m21) == 0


def test_grevlex_tiebreak_is_graded(fig2):
    ring = build_ring(fig2, "qq", "grevlex")
    deg2 = ring.monomial({x_var(GridPoint(4, 3)): 1, x_var(GridPoint(1, 1)): 1})
    deg1 = ring.monomial({x_var(GridPoint(4, 3)): 1})
    assert order_compare(ring.order, deg2, deg1) > 0


# --- fields -------------------------------------------------------------------


def test_field_from_spec():
    assert field_from_spec("qq") is QQ
    assert field_from_spec("fp").p == 32003
    assert field_from_spec("fp:7").p == 7
    with pytest.raises(ParseError):
        field_from_spec("fp:8")
    with pytest.raises(ParseError):
        field_from_spec("real")


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.div(1, 3) == 5
    assert F.coerce(Fraction(1, 2)) == 4
    assert F.render(6) == "-1"


# --- polynomial arithmetic ------------------------------------------------------


def random_poly(ring, rng, max_terms=4, max_exp=2):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        powers = {}
        for v in ring.variables:
            e = rng.randint(0, max_exp)
            if e:
                powers[v] = e
        coeff = rng.randint(-4, 4)
        terms.append((coeff, powers))
    return ring.polynomial(terms)


@pytest.mark.parametrize("field_spec", ["qq", "fp:32003"])
def test_ring_axioms_randomized(field_spec):
    ring = PolyRing(
        [aux_var("s", k) for k in range(3)],
        field_from_spec(field_spec),
        MonomialOrder("grevlex", 3),
    )
    rng = random.Random(42)
    for _ in range(60):
        f, g, h = (random_poly(ring, rng) for _ in range(3))
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f - f).is_zero
        assert f * ring.one == f
        assert f + ring.zero == f


def test_difference_of_squares(single):
    ring = build_ring(single)
    xa = x_var(GridPoint(1, 1))
    xc = x_var(GridPoint(2, 2))
    lhs = ring.polynomial([(1, {xa: 1}), (-1, {xc: 1})]) * ring.polynomial(
        [(1, {xa: 1}), (1, {xc: 1})]
    )
    rhs = ring.polynomial([(1, {xa: 2}), (-1, {xc: 2})])
    assert lhs == rhs


def test_normalization_invariants(fig2):
    ring = build_ring(fig2)
    f = ring.polynomial([(2, {x_var(GridPoint(1, 1)): 1}), (-2, {x_var(GridPoint(1, 1)): 1})])
    assert f.is_zero and f.terms == ()
    g = ring.polynomial([(1, {x_var(GridPoint(1, 2)): 1}), (1, {x_var(GridPoint(4, 3)): 1})])
    keys = [ring.order.key(m) for m, _ in g.terms]
    assert keys == sorted(keys, reverse=True)


# --- ring construction -----------------------------------------------------------


def test_build_ring_fig2_ranking(fig2):
    ring = build_ring(fig2, "qq", "lex")
    assert str(ring.variables[0]) == "x_(4,3)"
    assert str(ring.variables[-1]) == "x_(1,1)"
    assert len(ring.variables) == 13


def test_build_ring_stair3_universe_matches_session(stair3):
    ring = build_ring(stair3, "qq", "grevlex")
    assert [str(v) for v in ring.variables] == STAIR3_UNIVERSE


def test_convex_ring_rejects_closed_path(closed16):
    with pytest.raises(PreconditionError):
        build_ring(closed16, "qq", "convex")


def test_convex_ring_rejects_non_convex_weakly_connected(fig3a):
    # row 1 has cells at columns 1, 2, 4: not row convex
    with pytest.raises(PreconditionError):
        build_ring(fig3a, "qq", "convex")


def test_convex_ring_validates_on_convex_inputs(fig2, twelve, stair3):
    for P in (fig2, twelve, stair3):
        ring = build_ring(P, "qq", "convex")
        assert ring.order.name == "convex"


def test_convex_ring_soundness_random():
    # for random convex weakly connected collections, the validated ring makes
    # the inner 2-minors a reduced basis with squarefree quadratic leads
    import random

    from polyoideals import CellCollection, classify, inner_intervals, inner_minor
    from polyoideals.groebner import is_reduced_groebner_basis

    rng = random.Random(61)
    built = 0
    while built < 25:
        n = rng.randint(2, 7)
        cells = {(rng.randint(1, 4), rng.randint(1, 4))}
        while len(cells) < n:
            i, j = rng.choice(list(cells))
            di, dj = rng.choice(
                [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
            )
            cells.add((i + di, j + dj))
        P = CellCollection(sorted(cells))
        cls = classify(P)
        if not (cls.weakly_connected and cls.convex):
            continue
        ring = build_ring(P, "qq", "convex")
        gens = [inner_minor(iv, ring) for iv in inner_intervals(P)]
        assert all(g.lead_monomial.degree == 2 and g.lead_monomial.is_squarefree
                   for g in gens)
        assert is_reduced_groebner_basis(gens)
        built += 1


def test_unknown_order_kind(fig2):
    with pytest.raises(PreconditionError):
        build_ring(fig2, "qq", "weird")


def test_variable_outside_ring_rejected(single, fig2):
    ring = build_ring(single)
    with pytest.raises(PreconditionError):
        ring.monomial({x_var(GridPoint(9, 9)): 1})


# --- rendering -------------------------------------------------------------------


def test_variable_rendering():
    assert str(x_var(GridPoint(4, 3))) == "x_(4,3)"
    assert str(aux_var("h", 2)) == "h_2"
    assert str(Variable("w", (1,))) == "w_1"


def test_polynomial_rendering(single):
    ring = build_ring(single)
    p = ring.polynomial([
        (1, {x_var(GridPoint(2, 2)): 1, x_var(GridPoint(1, 1)): 1}),
        (-1, {x_var(GridPoint(2, 1)): 1, x_var(GridPoint(1, 2)): 1}),
    ])
    assert str(p) == "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)"
    assert str(ring.zero) == "0"
    assert str(ring.one) == "1"
    q = ring.polynomial([(3, {x_var(GridPoint(1, 1)): 2})])
    assert str(q) == "3x_(1,1)^2"
