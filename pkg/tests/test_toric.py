import itertools
import random

import pytest

from polyoideals import (
    CellCollection,
    GridPoint,
    PreconditionError,
    alpha,
    classify,
    detect_holes,
    f_sets,
    ideal_equal,
    member,
    minimal_generators,
    polyo_ideal,
    polyo_toric,
    toric_compare,
    vertex_set,
)
from polyoideals.toric import alpha_substitution_images
from polyoideals.polyalg import Polynomial


# --- filter sets ------------------------------------------------------------------


def test_f_sets_empty_without_holes(fig2):
    assert f_sets(fig2, ()) == ()


def test_f_sets_closed_path(closed16):
    (F,) = f_sets(closed16, (GridPoint(2, 3),))
    assert F == frozenset({
        GridPoint(1, 2), GridPoint(1, 3), GridPoint(2, 1),
        GridPoint(2, 2), GridPoint(2, 3),
    })


def test_f_set_below_all_vertices_is_empty(fig2):
    (F,) = f_sets(fig2, (GridPoint(0, 0),))
    assert F == frozenset()


# --- the alpha map -----------------------------------------------------------------


def test_alpha_single_cell(single):
    assign = alpha(single)
    assert len(assign.h_intervals) == 2 and len(assign.v_intervals) == 2
    h, v, ws = assign.supports(GridPoint(1, 1))
    assert assign.h_intervals[h].fixed == 1  # bottom row
    assert assign.v_intervals[v].fixed == 1  # left column
    assert ws == ()


def test_alpha_fig2_vertex(fig2):
    assign = alpha(fig2)
    h, v, ws = assign.supports(GridPoint(2, 2))
    assert (assign.h_intervals[h].fixed, assign.h_intervals[h].lo,
            assign.h_intervals[h].hi) == (2, 1, 4)
    assert (assign.v_intervals[v].fixed, assign.v_intervals[v].lo,
            assign.v_intervals[v].hi) == (2, 1, 4)
    assert ws == ()


def test_alpha_closed_path_hole_weight(closed16):
    assign = alpha(closed16)
    assert assign.hole_corners == (GridPoint(2, 3),)
    _, _, ws = assign.supports(GridPoint(1, 2))
    assert ws == (0,)
    _, _, ws = assign.supports(GridPoint(6, 5))
    assert ws == ()


def test_alpha_requires_weak_connectivity():
    P = CellCollection([(1, 1), (5, 5)])
    with pytest.raises(PreconditionError):
        alpha(P)


# --- the kernel --------------------------------------------------------------------


def brute_single_cell_kernel(single):
    """Oracle: all degree-2 pure-difference binomials in the 4 vertex variables
    whose alpha-images agree as products (equal h-, v- and w-multisets)."""
    assign = alpha(single)
    vs = list(vertex_set(single))

    def image(a, b):
        ha, va, wa = assign.supports(a)
        hb, vb, wb = assign.supports(b)
        return (tuple(sorted((ha, hb))), tuple(sorted((va, vb))),
                tuple(sorted(wa + wb)))

    out = []
    for (a, b), (c, d) in itertools.combinations(
        itertools.combinations_with_replacement(vs, 2), 2
    ):
        if image(a, b) == image(c, d):
            out.append(({a, b}, {c, d}))
    return out


def test_single_cell_kernel_matches_bruteforce(single):
    J = polyo_toric(single)
    assert len(J.generators) == 1
    assert str(J.generators[0]) == "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)"
    oracle = brute_single_cell_kernel(single)
    assert len(oracle) == 1
    assert oracle[0] == ({GridPoint(1, 1), GridPoint(2, 2)},
                         {GridPoint(1, 2), GridPoint(2, 1)})


def test_polyo_toric_rejects_disconnected():
    P = CellCollection([(1, 1), (5, 5)])
    with pytest.raises(PreconditionError):
        polyo_toric(P)


def test_inner_minors_vanish_under_alpha(fig2, fig3a, closed16):
    # I is contained in the kernel: every generator maps to zero
    for P in (fig2, fig3a, closed16):
        I = polyo_ideal(P)
        assign = alpha(P)
        target, images = alpha_substitution_images(P, assign, I.ring)
        for g in I.generators:
            assert g.substitute(images, target).is_zero


def test_toric_generators_balance_under_alpha(fig3a, closed16):
    # each kernel generator is a binomial whose two monomials share one image
    for P in (fig3a, closed16):
        J = polyo_toric(P)
        assign = alpha(P)
        target, images = alpha_substitution_images(P, assign, J.ring)
        for g in J.generators:
            assert len(g.terms) == 2
            assert g.is_homogeneous()
            assert g.substitute(images, target).is_zero


def test_degree_two_part_equals_inner_minors(closed16):
    # the kernel's quadratic minimal generators and the inner 2-minors span
    # the same degree-2 piece (mutual membership)
    I = polyo_ideal(closed16, term_order="grevlex")
    J = polyo_toric(closed16, term_order="grevlex")
    j_quadrics = [g for g in minimal_generators(J) if g.total_degree() == 2]
    assert len(j_quadrics) == len(I.generators) == 36
    for q in j_quadrics:
        assert member(q, I)
    for g in I.generators:
        assert member(g, J)


def test_explicit_hole_override_matches_auto(closed16):
    auto = polyo_toric(closed16)
    explicit = polyo_toric(closed16, holes=[(2, 3)])
    assert ideal_equal(auto, explicit)


# --- comparison ---------------------------------------------------------------------


def test_compare_single_cell(single):
    cmp = toric_compare(single)
    assert cmp.equal and cmp.theorem_applies and cmp.extra_generators == ()


def test_compare_fig3a(fig3a):
    cmp = toric_compare(fig3a)
    assert cmp.equal is True
    assert cmp.theorem_applies is True
    assert cmp.extra_generators == ()


def test_compare_closed_path(closed16):
    cmp = toric_compare(closed16)
    assert cmp.equal is False
    assert cmp.theorem_applies is False
    assert len(cmp.extra_generators) == 1
    assert cmp.extra_generators[0].total_degree() == 4
    assert cmp.hole_corners == (GridPoint(2, 3),)


def random_simple_weakly_connected(rng, max_cells=8):
    while True:
        n = rng.randint(1, max_cells)
        cells = {(rng.randint(1, 6), rng.randint(1, 6))}
        while len(cells) < n:
            i, j = rng.choice(list(cells))
            di, dj = rng.choice(
                [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
            )
            cells.add((i + di, j + dj))
        P = CellCollection(sorted(cells))
        cls = classify(P)
        if cls.weakly_connected and cls.simple:
            return P


def test_theorem_regression_small_sample():
    rng = random.Random(33)
    for _ in range(12):
        P = random_simple_weakly_connected(rng)
        cmp = toric_compare(P)
        assert cmp.theorem_applies
        assert cmp.equal, f"kernel mismatch for {P!r}"


def test_nontrivial_hole_detection_feeds_compare(fig5):
    # one hole, so the theorem hypothesis fails even though it is a polyomino
    cmp = toric_compare(fig5)
    assert detect_holes(fig5)[0].corner == GridPoint(3, 3)
    assert cmp.theorem_applies is False
