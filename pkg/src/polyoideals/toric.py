"""The toric ideal attached to a weakly connected collection of cells.

Each vertex is sent to the product of the auxiliary variables of the maximal
horizontal and vertical edge intervals containing it, times one w-variable for
every hole whose lower-left filter set contains the vertex.  The kernel of the
induced ring map is computed by eliminating the auxiliary block, and compared
against the inner 2-minor ideal to decide primality questions.
"""

from dataclasses import dataclass, field as dataclass_field

from . import geometry, polyalg
from .errors import PolyoError, PreconditionError
from .groebner import IdealHandle, eliminate, ideal_equal, minimal_generators
from .polyalg import MonomialOrder, PolyRing, aux_var, x_var


def f_sets(P, hole_corners):
    """Per hole corner e = (i_k, j_k), the vertices (i, j) of P with i <= i_k, j <= j_k."""
    vs = P.vertices
    out = []
    for e in hole_corners:
        out.append(frozenset(p for p in vs if p.i <= e.i and p.j <= e.j))
    return tuple(out)


@dataclass(frozen=True)
class AlphaAssignment:
    """Per-vertex exponent data of the monomial map defining the toric ideal."""

    h_intervals: tuple  # maximal horizontal edge intervals, ordered
    v_intervals: tuple  # maximal vertical edge intervals, ordered
    hole_corners: tuple  # GridPoints
    filters: tuple  # frozenset of vertices per hole
    assignment: dict = dataclass_field(hash=False)  # vertex -> (h_idx, v_idx, (w_idx...))

    def supports(self, vertex):
        return self.assignment[vertex]


def alpha(P, hole_corners=None):
    """The monomial-map exponents for every vertex of P.

    Every vertex lies in exactly one maximal interval of each direction; a
    violation indicates an internal geometry error.
    """
    if not geometry.classify(P).weakly_connected:
        raise PreconditionError("the toric construction requires a weakly connected collection")
    if hole_corners is None:
        hole_corners = tuple(h.corner for h in geometry.detect_holes(P))
    else:
        hole_corners = tuple(
            p if isinstance(p, geometry.GridPoint) else geometry.GridPoint(*p)
            for p in hole_corners
        )
    h_intervals = geometry.maximal_edge_intervals(P, "horizontal")
    v_intervals = geometry.maximal_edge_intervals(P, "vertical")
    filters = f_sets(P, hole_corners)
    assignment = {}
    for p in P.vertices:
        h_hits = [k for k, iv in enumerate(h_intervals) if iv.contains_vertex(p)]
        v_hits = [k for k, iv in enumerate(v_intervals) if iv.contains_vertex(p)]
        if len(h_hits) != 1 or len(v_hits) != 1:
            raise PolyoError(
                f"vertex {p} lies in {len(h_hits)} horizontal / {len(v_hits)} vertical "
                "maximal edge intervals; expected exactly one of each"
            )
        ws = tuple(k for k, f in enumerate(filters) if p in f)
        assignment[p] = (h_hits[0], v_hits[0], ws)
    return AlphaAssignment(
        h_intervals=h_intervals,
        v_intervals=v_intervals,
        hole_corners=hole_corners,
        filters=filters,
        assignment=assignment,
    )


def _elimination_setup(P, assign, field):
    """Ring K[h.., v.., w.., x..] with the auxiliary block leading, plus the
    binomials x_a - alpha(a)."""
    n_h = len(assign.h_intervals)
    n_v = len(assign.v_intervals)
    n_w = len(assign.hole_corners)
    aux = (
        [aux_var("h", k + 1) for k in range(n_h)]
        + [aux_var("v", k + 1) for k in range(n_v)]
        + [aux_var("w", k + 1) for k in range(n_w)]
    )
    xs = [x_var(p) for p in P.vertices]
    variables = aux + xs
    ring = PolyRing(
        variables, field, MonomialOrder("elim", len(variables), block=len(aux))
    )
    gens = []
    for p in P.vertices:
        h_idx, v_idx, ws = assign.assignment[p]
        image = {aux_var("h", h_idx + 1): 1, aux_var("v", v_idx + 1): 1}
        for w in ws:
            image[aux_var("w", w + 1)] = image.get(aux_var("w", w + 1), 0) + 1
        gens.append(ring.polynomial([(1, {x_var(p): 1}), (-1, image)]))
    return ring, aux, gens


def alpha_substitution_images(P, assign, target_ring):
    """Images of the x-variables of ``target_ring`` as monomials of the auxiliary
    polynomial ring; used to check that binomials vanish under the toric map."""
    n_h = len(assign.h_intervals)
    n_v = len(assign.v_intervals)
    n_w = len(assign.hole_corners)
    aux = (
        [aux_var("h", k + 1) for k in range(n_h)]
        + [aux_var("v", k + 1) for k in range(n_v)]
        + [aux_var("w", k + 1) for k in range(n_w)]
    )
    aux_ring = PolyRing(aux, target_ring.field, MonomialOrder("grevlex", len(aux)))
    images = {}
    for p in P.vertices:
        h_idx, v_idx, ws = assign.assignment[p]
        powers = {aux_var("h", h_idx + 1): 1, aux_var("v", v_idx + 1): 1}
        for w in ws:
            powers[aux_var("w", w + 1)] = powers.get(aux_var("w", w + 1), 0) + 1
        images[target_ring.rank[x_var(p)]] = aux_ring.polynomial([(1, powers)])
    return aux_ring, images


def polyo_toric(P, holes=None, field_spec="qq", term_order="lex", deadline=None):
    """Generators of the kernel of the toric map, in the x-variable ring of P.

    ``holes`` overrides the auto-detected hole corners (pass () to assert no
    holes).  The result ring matches ``build_ring(P, field_spec, term_order)``
    so it compares directly against ``polyo_ideal``.
    """
    field = field_spec if not isinstance(field_spec, str) else polyalg.field_from_spec(field_spec)
    assign = alpha(P, holes)
    ring, aux, gens = _elimination_setup(P, assign, field)
    big = IdealHandle(ring, gens)
    restricted = eliminate(big, aux, deadline=deadline)
    if term_order == "grevlex":
        # the elimination subring is exactly the grevlex x-ring
        return restricted
    target = polyalg.build_ring(P, field, term_order)
    rehoused = [
        polyalg.Polynomial(target, g.terms).monic() for g in restricted.generators
    ]
    return IdealHandle(target, rehoused)


@dataclass(frozen=True)
class ToricComparison:
    """Outcome of comparing the inner 2-minor ideal with the toric kernel."""

    equal: bool
    extra_generators: tuple  # minimal generators of the kernel of degree >= 3
    theorem_applies: bool  # P simple and weakly connected (forces equality)
    inner_minor_count: int
    toric_generator_count: int
    hole_corners: tuple


def toric_compare(P, field_spec="qq", holes=None, deadline=None):
    """Compare I = ideal of inner 2-minors with J = toric kernel of P.

    Runs in the grevlex x-ring (equality of ideals does not depend on the
    order).  ``extra_generators`` lists the degree >= 3 minimal generators of
    J when the ideals differ.
    """
    from . import ideals

    cls = geometry.classify(P)
    if not cls.weakly_connected:
        raise PreconditionError("toric comparison requires a weakly connected collection")
    corners = (
        tuple(h.corner for h in geometry.detect_holes(P)) if holes is None else tuple(holes)
    )
    J = polyo_toric(P, holes=corners, field_spec=field_spec, term_order="grevlex",
                    deadline=deadline)
    I = ideals.polyo_ideal(P, field_spec=field_spec, ring_choice=1, term_order="grevlex")
    equal = ideal_equal(I, J, deadline=deadline)
    extra = ()
    if not equal:
        extra = tuple(
            g for g in minimal_generators(J, deadline=deadline) if g.total_degree() >= 3
        )
    return ToricComparison(
        equal=equal,
        extra_generators=extra,
        theorem_applies=cls.simple and cls.weakly_connected,
        inner_minor_count=len(I.generators),
        toric_generator_count=len(J.generators),
        hole_corners=corners,
    )
