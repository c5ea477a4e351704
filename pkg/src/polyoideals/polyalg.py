"""Exact sparse multivariate polynomial arithmetic with pluggable monomial orders.

Coefficients live in Q (``fractions.Fraction``) or a prime field F_p; no
floating point anywhere.  Variables are tagged by grid point (``x``) or by the
auxiliary families used for toric and edge-ring computations (``h``, ``v``,
``w``, ``s``, ``t``).  A ring fixes an ordered variable universe together with
one monomial order; monomials are sparse (rank, exponent) tuples over that
universe.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import geometry
from .errors import ParseError, PreconditionError, RingMismatchError

DEFAULT_PRIME = 32003


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The rationals, with canonical reduced Fractions."""

    name = "QQ"

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise ParseError(f"cannot coerce {value!r} into QQ")

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def render(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p for a prime p; elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.name = f"ZZ/{p}"
        self.zero = 0
        self.one = 1

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ParseError(f"denominator not invertible mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        raise ParseError(f"cannot coerce {value!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def render(self, a):
        # centered representative so binomials print as +/-1
        return str(a - self.p if a > self.p // 2 else a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def field_from_spec(spec):
    """Parse a field spec: "qq", "fp" (default prime 32003) or "fp:<prime>"."""
    if spec is None:
        return QQ
    s = str(spec).strip().lower()
    if s in ("qq", "q", "rational", "rationals"):
        return QQ
    if s == "fp":
        return PrimeField(DEFAULT_PRIME)
    if s.startswith("fp:"):
        try:
            return PrimeField(int(s[3:]))
        except ValueError:
            raise ParseError(f"bad prime in field spec {spec!r}")
    raise ParseError(f"unknown field spec {spec!r} (use qq, fp or fp:<prime>)")


# ---------------------------------------------------------------------------
# variables


@dataclass(frozen=True, order=True)
class Variable:
    """Tagged ring variable: x_(i,j) grid variables or auxiliary h/v/w/s/t."""

    kind: str
    key: tuple

    def __str__(self):
        if self.kind == "x":
            return f"x_({self.key[0]},{self.key[1]})"
        return f"{self.kind}_{self.key[0]}"


def x_var(point):
    if isinstance(point, geometry.GridPoint):
        return Variable("x", (point.i, point.j))
    return Variable("x", (point[0], point[1]))


def aux_var(kind, index):
    return Variable(kind, (index,))


# ---------------------------------------------------------------------------
# monomials: sparse ((rank, exponent), ...) ascending by rank


class Monomial:
    __slots__ = ("exps", "degree", "_hash")

    def __init__(self, exps):
        self.exps = exps
        self.degree = sum(e for _, e in exps)
        self._hash = hash(exps)

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((r, e) for r, e in d.items() if e)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self.exps == other.exps

    def __mul__(self, other):
        # merge of two rank-sorted sparse vectors
        a, b = self.exps, other.exps
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            ra, ea = a[i]
            rb, eb = b[j]
            if ra < rb:
                out.append(a[i]); i += 1
            elif rb < ra:
                out.append(b[j]); j += 1
            else:
                out.append((ra, ea + eb)); i += 1; j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial(tuple(out))

    def divides(self, other):
        a, b = self.exps, other.exps
        j = 0
        for r, e in a:
            while j < len(b) and b[j][0] < r:
                j += 1
            if j == len(b) or b[j][0] != r or b[j][1] < e:
                return False
        return True

    def __floordiv__(self, other):
        """self / other; requires divisibility."""
        a, b = self.exps, other.exps
        i = j = 0
        out = []
        while i < len(a):
            ra, ea = a[i]
            if j < len(b) and b[j][0] == ra:
                ea -= b[j][1]
                j += 1
                if ea < 0:
                    raise ValueError("monomial division with remainder")
            elif j < len(b) and b[j][0] < ra:
                raise ValueError("monomial division with remainder")
            if ea:
                out.append((ra, ea))
            i += 1
        if j < len(b):
            raise ValueError("monomial division with remainder")
        return Monomial(tuple(out))

    def lcm(self, other):
        a, b = self.exps, other.exps
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            ra, ea = a[i]
            rb, eb = b[j]
            if ra < rb:
                out.append(a[i]); i += 1
            elif rb < ra:
                out.append(b[j]); j += 1
            else:
                out.append((ra, max(ea, eb))); i += 1; j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial(tuple(out))

    def coprime(self, other):
        a, b = self.exps, other.exps
        i = j = 0
        while i < len(a) and j < len(b):
            ra, rb = a[i][0], b[j][0]
            if ra == rb:
                return False
            if ra < rb:
                i += 1
            else:
                j += 1
        return True

    def exponent(self, rank):
        for r, e in self.exps:
            if r == rank:
                return e
        return 0

    @property
    def is_squarefree(self):
        return all(e == 1 for _, e in self.exps)

    def ranks(self):
        return tuple(r for r, _ in self.exps)

    def __repr__(self):
        return f"Monomial({self.exps})"


MONOMIAL_ONE = Monomial(())


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Total multiplicative well-order on monomials over a fixed universe.

    ``kind`` is "lex" or "grevlex" over the ring's variable ranking (rank 0
    is the largest variable), or "elim:<k>" which compares the leading block
    of the first k ranks grevlex-first so that eliminating those variables is
    sound.  ``name`` keeps the user-facing label (e.g. "convex" rings reuse
    lex/grevlex internally).
    """

    def __init__(self, kind, nvars, block=0, name=None):
        if kind not in ("lex", "grevlex", "elim"):
            raise PreconditionError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.nvars = nvars
        self.block = block
        self.name = name or (f"elim:{block}" if kind == "elim" else kind)
        self._memo = {}

    def key(self, m):
        k = self._memo.get(m)
        if k is None:
            k = self._key(m)
            self._memo[m] = k
        return k

    def _key(self, m):
        if self.kind == "lex":
            return tuple((-r, e) for r, e in m.exps)
        if self.kind == "grevlex":
            return _grevlex_key(m.exps)
        head = tuple(p for p in m.exps if p[0] < self.block)
        tail = tuple(p for p in m.exps if p[0] >= self.block)
        return (_grevlex_key(head), _grevlex_key(tail))

    def compare(self, m1, m2):
        if m1 == m2:
            return 0
        return 1 if self.key(m1) > self.key(m2) else -1

    def sort_terms(self, items):
        """Sort (monomial, coefficient) pairs descending."""
        return sorted(items, key=lambda t: self.key(t[0]), reverse=True)


def _grevlex_key(exps):
    deg = sum(e for _, e in exps)
    return (deg, tuple((-r, -e) for r, e in reversed(exps)))


def order_compare(order, m1, m2):
    """-1, 0 or 1 as m1 <, =, > m2 under the order."""
    return order.compare(m1, m2)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Normalized term list: strictly decreasing monomials, no zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        """terms: iterable of (Monomial, coefficient), already coerced; merged here."""
        merged = {}
        field = ring.field
        for m, c in terms:
            acc = field.add(merged.get(m, field.zero), c)
            if acc == field.zero:
                merged.pop(m, None)
            else:
                merged[m] = acc
        self.ring = ring
        self.terms = tuple(ring.order.sort_terms(merged.items()))

    @property
    def is_zero(self):
        return not self.terms

    @property
    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lead_coefficient(self):
        return self.terms[0][1]

    def total_degree(self):
        return max((m.degree for m, _ in self.terms), default=0)

    def is_homogeneous(self):
        degs = {m.degree for m, _ in self.terms}
        return len(degs) <= 1

    def _require_same_ring(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def __add__(self, other):
        self._require_same_ring(other)
        return Polynomial(self.ring, list(self.terms) + list(other.terms))

    def __sub__(self, other):
        self._require_same_ring(other)
        field = self.ring.field
        return Polynomial(
            self.ring,
            list(self.terms) + [(m, field.neg(c)) for m, c in other.terms],
        )

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, [(m, field.neg(c)) for m, c in self.terms])

    def __mul__(self, other):
        self._require_same_ring(other)
        field = self.ring.field
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((m1 * m2, field.mul(c1, c2)))
        return Polynomial(self.ring, out)

    def scale(self, coeff, mono=MONOMIAL_ONE):
        field = self.ring.field
        coeff = field.coerce(coeff)
        if coeff == field.zero:
            return self.ring.zero
        return Polynomial(self.ring, [(m * mono, field.mul(c, coeff)) for m, c in self.terms])

    def monic(self):
        if self.is_zero:
            return self
        lc = self.lead_coefficient
        if lc == self.ring.field.one:
            return self
        field = self.ring.field
        return Polynomial(self.ring, [(m, field.div(c, lc)) for m, c in self.terms])

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(self.terms)

    def substitute(self, images, target_ring):
        """Map each variable rank to a target polynomial and evaluate.

        ``images``: dict rank -> Polynomial in target_ring.
        """
        out = target_ring.zero
        for m, c in self.terms:
            term = target_ring.constant(c)
            for r, e in m.exps:
                img = images[r]
                for _ in range(e):
                    term = term * img
            out = out + term
        return out

    def __str__(self):
        return self.ring.render_polynomial(self)

    def __repr__(self):
        return f"<{self}>"


class PolyRing:
    """Ordered variable universe + coefficient field + monomial order."""

    def __init__(self, variables, field, order):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise PreconditionError("ring variables must be distinct")
        self.field = field
        self.order = order
        if order.nvars != len(self.variables):
            raise PreconditionError("order universe size mismatch")
        self.rank = {v: r for r, v in enumerate(self.variables)}
        self.zero = Polynomial(self, [])
        self.one = Polynomial(self, [(MONOMIAL_ONE, field.one)])

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
            and self.order.kind == other.order.kind
            and self.order.block == other.order.block
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order.kind, self.order.block))

    def variable(self, var):
        """The variable as a polynomial."""
        if var not in self.rank:
            raise PreconditionError(f"{var} is not a variable of this ring")
        return Polynomial(self, [(Monomial(((self.rank[var], 1),)), self.field.one)])

    def monomial(self, powers):
        """Monomial from {Variable: exponent}."""
        d = {}
        for var, e in powers.items():
            if var not in self.rank:
                raise PreconditionError(f"{var} is not a variable of this ring")
            if e:
                d[self.rank[var]] = d.get(self.rank[var], 0) + e
        return Monomial.from_dict(d)

    def constant(self, value):
        c = self.field.coerce(value)
        if c == self.field.zero:
            return self.zero
        return Polynomial(self, [(MONOMIAL_ONE, c)])

    def polynomial(self, terms):
        """terms: iterable of (coefficient, {Variable: exp})."""
        out = []
        for c, powers in terms:
            out.append((self.monomial(powers), self.field.coerce(c)))
        return Polynomial(self, out)

    def render_monomial(self, m):
        if m.degree == 0:
            return "1"
        parts = []
        for r, e in m.exps:
            name = str(self.variables[r])
            parts.append(name if e == 1 else f"{name}^{e}")
        return "".join(parts)

    def render_polynomial(self, f):
        if f.is_zero:
            return "0"
        chunks = []
        for m, c in f.terms:
            cs = self.field.render(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            body = self.render_monomial(m)
            if body == "1":
                text = mag
            elif mag == "1":
                text = body
            else:
                text = f"{mag}{body}"
            if not chunks:
                chunks.append(f"-{text}" if neg else text)
            else:
                chunks.append(f"-{text}" if neg else f"+{text}")
        return "".join(chunks)


# ---------------------------------------------------------------------------
# ring construction for a cell collection


def _ranked_x_universe(P):
    return tuple(x_var(p) for p in P.vertices)  # vertices are sorted descending


def build_ring(P, field_spec="qq", order_kind="lex"):
    """Polynomial ring attached to a cell collection.

    ``order_kind``: "lex" | "grevlex" over the descending vertex ranking, or
    "convex" for the order under which the inner 2-minors form a reduced
    Groebner basis (requires a weakly connected and convex collection; the
    construction is validated and the build fails rather than mis-order).
    """
    field = field_spec if not isinstance(field_spec, str) else field_from_spec(field_spec)
    universe = _ranked_x_universe(P)
    if order_kind in ("lex", "grevlex"):
        return PolyRing(universe, field, MonomialOrder(order_kind, len(universe)))
    if order_kind == "convex":
        return _build_convex_ring(P, field, universe)
    raise PreconditionError(f"unknown order kind {order_kind!r}")


def _build_convex_ring(P, field, universe):
    cls = geometry.classify(P)
    if not (cls.weakly_connected and cls.convex):
        raise PreconditionError(
            "the convex-collection ring requires a weakly connected convex collection"
        )
    from . import groebner  # cycle: the validation runs Buchberger
    from . import ideals

    intervals = geometry.inner_intervals(P)
    for base_kind in ("grevlex", "lex"):
        ring = PolyRing(
            universe, field, MonomialOrder(base_kind, len(universe), name="convex")
        )
        gens = [ideals.inner_minor(iv, ring) for iv in intervals]
        if not gens:
            return ring
        if groebner.is_reduced_groebner_basis(gens) and all(
            g.lead_monomial.degree == 2 and g.lead_monomial.is_squarefree for g in gens
        ):
            return ring
    raise PreconditionError(
        "could not validate a quadratic squarefree Groebner order for this collection"
    )
