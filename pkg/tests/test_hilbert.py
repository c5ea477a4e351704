import pytest

from polyoideals import (
    IdealHandle,
    MonomialOrder,
    PolyRing,
    PreconditionError,
    QQ,
    build_ring,
    hilbert_numerator,
    initial_ideal,
    polyo_ideal,
    reduced_hilbert_series,
)
from polyoideals.hilbert import count_standard_monomials
from polyoideals.polyalg import Monomial, aux_var


def mono(*pairs):
    return Monomial(tuple(pairs))


# --- numerator recursion ------------------------------------------------------------


def test_empty_ideal_numerator():
    assert hilbert_numerator([], 4) == [1]


def test_unit_ideal_numerator():
    assert hilbert_numerator([mono()], 4) == [0]


def test_single_quadric_numerator():
    # <x0 x1> in 4 variables: 1 - T^2
    assert hilbert_numerator([mono((0, 1), (1, 1))], 4) == [1, 0, -1]


def test_pure_powers_numerator():
    # <x0, x1^3>: (1 - T)(1 - T^3)
    assert hilbert_numerator([mono((0, 1)), mono((1, 3))], 5) == [1, -1, 0, -1, 1]


def test_numerator_redundant_generators_ignored():
    gens = [mono((0, 1), (1, 1)), mono((0, 2), (1, 1))]
    assert hilbert_numerator(gens, 4) == hilbert_numerator([gens[0]], 4)


def test_numerator_rejects_non_monomials(single):
    ring = build_ring(single)
    with pytest.raises(PreconditionError):
        hilbert_numerator([ring.one], 4)


def series_counts(numerator, nvars, max_degree):
    """Expand numerator/(1-T)^nvars by convolution with binomial coefficients."""
    from math import comb

    out = []
    for d in range(max_degree + 1):
        total = 0
        for k, c in enumerate(numerator):
            if k <= d:
                total += c * comb(nvars - 1 + d - k, d - k)
        out.append(total)
    return out


def test_expansion_matches_standard_monomial_count():
    gens = [mono((0, 1), (1, 1)), mono((1, 1), (2, 1)), mono((0, 1), (3, 2))]
    n = hilbert_numerator(gens, 4)
    assert series_counts(n, 4, 6) == count_standard_monomials(gens, 4, 6)


# --- reduced series ------------------------------------------------------------------


def test_zero_ideal_series():
    ring = PolyRing([aux_var("s", k) for k in range(5)], QQ, MonomialOrder("grevlex", 5))
    series = reduced_hilbert_series(IdealHandle(ring, []))
    assert series.numerator == (1,) and series.denominator_exponent == 5


def test_single_cell_series(single):
    series = reduced_hilbert_series(polyo_ideal(single))
    assert series.numerator == (1, 1)
    assert series.denominator_exponent == 3
    leads = initial_ideal(polyo_ideal(single))
    assert series.expand(6) == count_standard_monomials(leads, 4, 6)


def test_series_order_invariance(single, stair3, block22, fig2):
    for P in (single, stair3, block22, fig2):
        lex = reduced_hilbert_series(polyo_ideal(P, term_order="lex"))
        grevlex = reduced_hilbert_series(polyo_ideal(P, term_order="grevlex"))
        assert lex == grevlex


def test_series_expansion_matches_standard_monomials(fig2, block22):
    for P in (fig2, block22):
        I = polyo_ideal(P)
        series = reduced_hilbert_series(I)
        leads = initial_ideal(I)
        nvars = len(I.ring.variables)
        assert series.expand(6) == count_standard_monomials(leads, nvars, 6)


def test_series_normalization(fig2):
    series = reduced_hilbert_series(polyo_ideal(fig2))
    assert series.numerator[0] == 1
    assert sum(series.numerator) != 0
    assert series.numerator_at_one() == sum(series.numerator)


def test_series_rejects_inhomogeneous(single):
    ring = build_ring(single)
    f = ring.variable(ring.variables[0]) + ring.one
    with pytest.raises(PreconditionError):
        reduced_hilbert_series(IdealHandle(ring, [f]))


def test_series_text(fig2):
    series = reduced_hilbert_series(polyo_ideal(fig2))
    text = str(series)
    assert text.startswith("(1 ") and "(1 - T)^" in text
