"""Constructors for the inner 2-minor ideal and the attached matrix.

``polyo_ideal`` builds the binomial ideal generated by the inner 2-minors of a
cell collection; ``polyo_matrix`` builds the variable-or-zero matrix over the
smallest containing interval, whose inner 2-minors recover the same ideal.
"""

from dataclasses import dataclass

from . import geometry, polyalg
from .errors import PreconditionError, RingMismatchError
from .groebner import IdealHandle


def inner_minor(interval, ring):
    """The binomial x_a x_b - x_c x_d of a proper interval.

    a, b are the diagonal corners, c, d the anti-diagonal ones; the sign is
    fixed so the diagonal product carries +1.
    """
    if not interval.is_proper:
        raise PreconditionError(f"interval {interval.a}..{interval.b} is not proper")
    c, d = interval.anti_diagonal
    names = [polyalg.x_var(p) for p in (interval.a, interval.b, c, d)]
    for v in names:
        if v not in ring.rank:
            raise PreconditionError(f"{v} is not a variable of the ring")
    xa, xb, xc, xd = names
    return ring.polynomial([(1, {xa: 1, xb: 1}), (-1, {xc: 1, xd: 1})])


def polyo_ideal(P, field_spec="qq", ring_choice=1, term_order="lex"):
    """The ideal generated by all inner 2-minors of P.

    ``ring_choice`` 1 uses the vertex-ranked ring with ``term_order`` (lex by
    default, grevlex available); 2 uses the convex-collection ring, which
    requires a weakly connected convex collection.
    """
    if ring_choice not in (1, 2):
        raise PreconditionError("ring_choice must be 1 or 2")
    if ring_choice == 2:
        ring = polyalg.build_ring(P, field_spec, "convex")
    else:
        if term_order not in ("lex", "grevlex"):
            raise PreconditionError("term_order must be lex or grevlex")
        ring = polyalg.build_ring(P, field_spec, term_order)
    gens = [inner_minor(iv, ring) for iv in geometry.inner_intervals(P)]
    return IdealHandle(ring, gens)


@dataclass(frozen=True)
class PolyoMatrix:
    """Matrix over the smallest interval containing P: x_(i,j) at vertices, else 0.

    ``entries`` are stored top row first (the row at j = s), matching the
    rendered layout.
    """

    base: geometry.Interval  # [(p,q), (r,s)]
    entries: tuple  # tuple of rows, each a tuple of GridPoint | None

    @property
    def row_count(self):
        return len(self.entries)

    @property
    def column_count(self):
        return len(self.entries[0])

    def entry(self, i, j):
        """Entry at grid position (i, j): a GridPoint or None."""
        row = self.base.b.j - j
        col = i - self.base.a.i
        if not (0 <= row < self.row_count and 0 <= col < self.column_count):
            raise PreconditionError(f"({i},{j}) outside the matrix interval")
        return self.entries[row][col]

    def entry_strings(self):
        return tuple(
            tuple("0" if p is None else str(polyalg.x_var(p)) for p in row)
            for row in self.entries
        )

    def render(self):
        rows = self.entry_strings()
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        lines = []
        for r in rows:
            body = " ".join(s.ljust(w) for s, w in zip(r, widths))
            lines.append(f"| {body} |")
        return "\n".join(lines)


def polyo_matrix(P):
    """The matrix M(P) with M(P)[i,j] = x_(i,j) iff (i,j) is a vertex of P."""
    box = P.bounding_box
    vs = P.vertex_set_frozen
    rows = []
    for j in range(box.b.j, box.a.j - 1, -1):  # top row first
        row = []
        for i in range(box.a.i, box.b.i + 1):
            p = geometry.GridPoint(i, j)
            row.append(p if p in vs else None)
        rows.append(tuple(row))
    return PolyoMatrix(base=box, entries=tuple(rows))


def matrix_minors(M, P, ring=None, all_minors=False):
    """2x2 minors of M(P).

    By default only the minors over the inner intervals of P (these equal the
    generators of ``polyo_ideal``).  ``all_minors=True`` exposes the literal
    all-row/column-pairs reading; minors hitting a zero entry are skipped, and
    no equality with the ideal is claimed for that variant.
    """
    if M.base != P.bounding_box:
        raise RingMismatchError("matrix was not built from this collection")
    if ring is None:
        ring = polyalg.build_ring(P)
    if not all_minors:
        return tuple(inner_minor(iv, ring) for iv in geometry.inner_intervals(P))
    out = []
    box = M.base
    for ai in range(box.a.i, box.b.i):
        for bi in range(ai + 1, box.b.i + 1):
            for aj in range(box.a.j, box.b.j):
                for bj in range(aj + 1, box.b.j + 1):
                    corners = [
                        M.entry(ai, aj), M.entry(bi, bj), M.entry(ai, bj), M.entry(bi, aj)
                    ]
                    if any(p is None for p in corners):
                        continue
                    a, b, c, d = (polyalg.x_var(p) for p in corners)
                    out.append(ring.polynomial([(1, {a: 1, b: 1}), (-1, {c: 1, d: 1})]))
    return tuple(out)
