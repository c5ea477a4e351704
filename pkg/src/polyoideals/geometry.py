"""Combinatorial geometry of collections of unit cells in the integer grid.

Vertices, edges, inner intervals, maximal edge intervals, hole detection and
classification (polyomino / weakly connected / convex / simple).  Everything
is an immutable value; coordinates may be negative.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import ParseError, PreconditionError

COORD_BOUND = 10**6


@dataclass(frozen=True, order=True)
class GridPoint:
    """Lattice point (i, j); i is the column, j the row.

    Comparison is the total vertex order used throughout: (i, j) > (k, l)
    iff i > k, or i = k and j > l.
    """

    i: int
    j: int

    def shifted(self, di, dj):
        return GridPoint(self.i + di, self.j + dj)

    def __str__(self):
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Cell:
    """Unit cell identified by its lower-left corner."""

    a: GridPoint

    @property
    def lower_left(self):
        return self.a

    @property
    def upper_right(self):
        return self.a.shifted(1, 1)

    @property
    def upper_left(self):
        return self.a.shifted(0, 1)

    @property
    def lower_right(self):
        return self.a.shifted(1, 0)

    @property
    def corners(self):
        a = self.a
        return (a, a.shifted(1, 0), a.shifted(0, 1), a.shifted(1, 1))


@dataclass(frozen=True, order=True)
class Interval:
    """Interval [a, b] of the grid with a <= b componentwise."""

    a: GridPoint
    b: GridPoint

    def __post_init__(self):
        if self.a.i > self.b.i or self.a.j > self.b.j:
            raise ParseError(f"interval corners out of order: {self.a}..{self.b}")

    @property
    def is_proper(self):
        return self.a.i < self.b.i and self.a.j < self.b.j

    @property
    def anti_diagonal(self):
        """Corners c = (a.i, b.j) and d = (b.i, a.j)."""
        return (GridPoint(self.a.i, self.b.j), GridPoint(self.b.i, self.a.j))

    def cells(self):
        """Lower-left corners of the cells inside the interval."""
        for i in range(self.a.i, self.b.i):
            for j in range(self.a.j, self.b.j):
                yield Cell(GridPoint(i, j))


@dataclass(frozen=True)
class EdgeInterval:
    """Maximal run of collinear unit edges; span endpoints are vertex coordinates."""

    direction: str  # "horizontal" | "vertical"
    fixed: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.direction not in ("horizontal", "vertical"):
            raise ParseError(f"bad edge direction {self.direction!r}")
        if self.lo >= self.hi:
            raise ParseError("edge interval span must increase")

    @property
    def vertices(self):
        if self.direction == "horizontal":
            return tuple(GridPoint(i, self.fixed) for i in range(self.lo, self.hi + 1))
        return tuple(GridPoint(self.fixed, j) for j in range(self.lo, self.hi + 1))

    def contains_vertex(self, p):
        if self.direction == "horizontal":
            return p.j == self.fixed and self.lo <= p.i <= self.hi
        return p.i == self.fixed and self.lo <= p.j <= self.hi


@dataclass(frozen=True)
class Hole:
    """Bounded edge-connected component of the cell complement."""

    cells: tuple  # tuple[Cell]
    corner: GridPoint  # minimum vertex of the hole under the vertex order


@dataclass(frozen=True)
class Classification:
    is_polyomino: bool
    weakly_connected: bool
    row_convex: bool
    column_convex: bool
    convex: bool
    simple: bool
    hole_count: int
    component_count: int


class CellCollection:
    """Finite duplicate-free set of cells; the input object of every pipeline."""

    def __init__(self, cells):
        cells = [c if isinstance(c, Cell) else Cell(GridPoint(*c)) for c in cells]
        if not cells:
            raise ParseError("a cell collection must contain at least one cell")
        seen = set()
        for c in cells:
            if c in seen:
                raise ParseError(f"duplicate cell at {c.a}")
            seen.add(c)
            if abs(c.a.i) > COORD_BOUND or abs(c.a.j) > COORD_BOUND:
                raise ParseError(f"cell coordinate out of bounds at {c.a}")
        self._cells = tuple(sorted(seen))
        self._cell_set = frozenset(seen)

    @classmethod
    def from_corner_pairs(cls, pairs, dedupe=False):
        """Build from ((lower-left), (upper-right)) pairs, validating unit cells."""
        cells = []
        for lo, hi in pairs:
            lo = GridPoint(*lo) if not isinstance(lo, GridPoint) else lo
            hi = GridPoint(*hi) if not isinstance(hi, GridPoint) else hi
            if hi != lo.shifted(1, 1):
                raise ParseError(
                    f"not a unit cell: [{lo}, {hi}] (upper right must be lower left + (1,1))"
                )
            cells.append(Cell(lo))
        if dedupe:
            cells = sorted(set(cells))
        return cls(cells)

    @property
    def cells(self):
        return self._cells

    @property
    def rank(self):
        """Number of cells."""
        return len(self._cells)

    def __contains__(self, cell):
        if isinstance(cell, GridPoint):
            cell = Cell(cell)
        return cell in self._cell_set

    def __iter__(self):
        return iter(self._cells)

    def __len__(self):
        return len(self._cells)

    def __eq__(self, other):
        return isinstance(other, CellCollection) and self._cells == other._cells

    def __hash__(self):
        return hash(self._cells)

    def __repr__(self):
        pts = ", ".join(str(c.a) for c in self._cells)
        return f"CellCollection[{pts}]"

    @cached_property
    def vertices(self):
        """All cell corners, duplicate-free, sorted descending by the vertex order."""
        vs = set()
        for c in self._cells:
            vs.update(c.corners)
        return tuple(sorted(vs, reverse=True))

    @cached_property
    def vertex_set_frozen(self):
        return frozenset(self.vertices)

    @cached_property
    def bounding_box(self):
        """Smallest interval [(p,q), (r,s)] containing the collection."""
        ii = [c.a.i for c in self._cells]
        jj = [c.a.j for c in self._cells]
        return Interval(GridPoint(min(ii), min(jj)), GridPoint(max(ii) + 1, max(jj) + 1))

    def translated(self, di, dj):
        return CellCollection([Cell(c.a.shifted(di, dj)) for c in self._cells])


def vertex_set(P):
    """Vertices of P, sorted descending by the vertex order (the variable ranking)."""
    return P.vertices


def inner_intervals(P):
    """All proper intervals whose cells lie entirely in P, sorted by diagonal corners."""
    cs = {(c.a.i, c.a.j) for c in P}
    box = P.bounding_box
    # prefix[i][j] = number of P-cells with corner in [p..i) x [q..j)
    w = box.b.i - box.a.i
    h = box.b.j - box.a.j
    prefix = [[0] * (h + 1) for _ in range(w + 1)]
    for i in range(w):
        for j in range(h):
            here = 1 if (box.a.i + i, box.a.j + j) in cs else 0
            prefix[i + 1][j + 1] = here + prefix[i][j + 1] + prefix[i + 1][j] - prefix[i][j]

    def full(ai, aj, bi, bj):
        # all cells of [a,b] present?  coordinates relative to box.a
        want = (bi - ai) * (bj - aj)
        got = prefix[bi][bj] - prefix[ai][bj] - prefix[bi][aj] + prefix[ai][aj]
        return got == want

    out = []
    for ai in range(w):
        for aj in range(h):
            for bi in range(ai + 1, w + 1):
                for bj in range(aj + 1, h + 1):
                    if full(ai, aj, bi, bj):
                        out.append(
                            Interval(
                                GridPoint(box.a.i + ai, box.a.j + aj),
                                GridPoint(box.a.i + bi, box.a.j + bj),
                            )
                        )
    out.sort(key=lambda iv: (iv.a, iv.b))
    return tuple(out)


def _horizontal_edges(P):
    """Horizontal unit edges of E(P) as (j, i) = segment (i,j)-(i+1,j)."""
    edges = set()
    for c in P:
        i, j = c.a.i, c.a.j
        edges.add((j, i))
        edges.add((j + 1, i))
    return edges


def _vertical_edges(P):
    edges = set()
    for c in P:
        i, j = c.a.i, c.a.j
        edges.add((i, j))
        edges.add((i + 1, j))
    return edges


def maximal_edge_intervals(P, direction):
    """Maximal horizontal (or vertical) edge intervals of P, sorted by (fixed, lo)."""
    if direction not in ("horizontal", "vertical"):
        raise PreconditionError(f"unknown direction {direction!r}")
    edges = _horizontal_edges(P) if direction == "horizontal" else _vertical_edges(P)
    by_line = {}
    for fixed, start in edges:
        by_line.setdefault(fixed, []).append(start)
    out = []
    for fixed in sorted(by_line):
        starts = sorted(by_line[fixed])
        lo = prev = starts[0]
        for s in starts[1:]:
            if s == prev + 1:
                prev = s
                continue
            out.append(EdgeInterval(direction, fixed, lo, prev + 1))
            lo = prev = s
        out.append(EdgeInterval(direction, fixed, lo, prev + 1))
    return tuple(out)


def detect_holes(P):
    """Bounded edge-connected components of the cell complement, sorted by corner.

    Flood-fills the complement inside the bounding box padded by one ring of
    cells; components touching the padding are the unbounded outside.
    """
    cs = {(c.a.i, c.a.j) for c in P}
    box = P.bounding_box
    lo_i, hi_i = box.a.i - 1, box.b.i  # lower-left corners of the padded cell range
    lo_j, hi_j = box.a.j - 1, box.b.j
    comp = {
        (i, j)
        for i in range(lo_i, hi_i + 1)
        for j in range(lo_j, hi_j + 1)
        if (i, j) not in cs
    }
    seen = set()
    holes = []
    for start in sorted(comp):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        blob = []
        touches_pad = False
        while stack:
            i, j = stack.pop()
            blob.append((i, j))
            if i in (lo_i, hi_i) or j in (lo_j, hi_j):
                touches_pad = True
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in comp and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if not touches_pad:
            cells = tuple(sorted(Cell(GridPoint(i, j)) for i, j in blob))
            corner = min(v for c in cells for v in c.corners)
            holes.append(Hole(cells=cells, corner=corner))
    holes.sort(key=lambda hole: hole.corner)
    return tuple(holes)


def _component_count(P, share):
    """Connected components of the cells under the given adjacency predicate."""
    cells = list(P)
    n = len(cells)
    seen = set()
    count = 0
    for s in range(n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            k = stack.pop()
            for m in range(n):
                if m not in seen and share(cells[k], cells[m]):
                    seen.add(m)
                    stack.append(m)
    return count


def classify(P):
    """Classification flags of P; convexity is evaluated literally per row/column."""
    edge_adjacent = lambda c, d: abs(c.a.i - d.a.i) + abs(c.a.j - d.a.j) == 1
    vertex_share = lambda c, d: bool(set(c.corners) & set(d.corners))
    components = _component_count(P, edge_adjacent)
    weakly = _component_count(P, vertex_share) == 1

    rows, cols = {}, {}
    for c in P:
        rows.setdefault(c.a.j, set()).add(c.a.i)
        cols.setdefault(c.a.i, set()).add(c.a.j)
    row_convex = all(max(xs) - min(xs) + 1 == len(xs) for xs in rows.values())
    col_convex = all(max(ys) - min(ys) + 1 == len(ys) for ys in cols.values())

    hole_count = len(detect_holes(P))
    return Classification(
        is_polyomino=components == 1,
        weakly_connected=weakly,
        row_convex=row_convex,
        column_convex=col_convex,
        convex=row_convex and col_convex,
        simple=hole_count == 0,
        hole_count=hole_count,
        component_count=components,
    )
