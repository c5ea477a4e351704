"""Buchberger engine: normal forms, reduced Groebner bases, ideal membership
and equality, elimination, initial ideals and minimal generators.

Pair management follows the Gebauer-Moeller installation (product and chain
criteria); selection uses the normal strategy (smallest lcm degree first) with
deterministic tie-breaks, so the unique reduced basis is reached the same way
every run.

Systems whose generators are pure differences of monomials (every binomial
ideal in this package) stay pure differences through the whole algorithm, so
they run on a dedicated monomial-rewriting engine; the generic division path
handles everything else.  Both reach the same unique reduced basis.
"""

import heapq

from .errors import PreconditionError, ResourceLimitExceeded, RingMismatchError
from .polyalg import MONOMIAL_ONE, Monomial, Polynomial, PolyRing, MonomialOrder

DEFAULT_PAIR_BUDGET = 2_000_000


class IdealHandle:
    """A generator set in a fixed ring, with a lazily computed reduced basis.

    The cached basis is written once; recomputation is idempotent because the
    reduced Groebner basis is unique for the ring's order.
    """

    def __init__(self, ring, generators, groebner=None):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator outside the handle's ring")
            if not g.is_zero:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = tuple(groebner) if groebner is not None else None

    def groebner_basis(self, deadline=None, pair_budget=None):
        if self._gb is None:
            self._gb = buchberger_reduced(
                self.generators, self.ring, deadline=deadline, pair_budget=pair_budget
            )
        return self._gb

    def __repr__(self):
        return f"IdealHandle({len(self.generators)} generators, {len(self.ring.variables)} vars)"


def normal_form(f, reducers, track=False):
    """Remainder of f under the division algorithm by the reducer sequence.

    Deterministic: the leading (leftmost) term is reduced first, reducers are
    tried in sequence order.  With ``track=True`` also returns the quotients,
    so that f = sum(q_i * g_i) + remainder.
    """
    if not reducers:
        raise PreconditionError("normal_form requires at least one reducer")
    ring = f.ring
    for g in reducers:
        if g.ring != ring:
            raise RingMismatchError("reducer outside the polynomial's ring")
    field = ring.field
    order = ring.order
    leads = [(g.lead_monomial, g.lead_coefficient) for g in reducers]
    work = dict(f.terms)
    remainder = {}
    quotients = [dict() for _ in reducers] if track else None
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for idx, (lm, lc) in enumerate(leads):
            if lm.divides(m):
                q = m // lm
                factor = field.div(c, lc)
                for mg, cg in reducers[idx].terms[1:]:
                    key = q * mg
                    acc = field.sub(work.get(key, field.zero), field.mul(factor, cg))
                    if acc == field.zero:
                        work.pop(key, None)
                    else:
                        work[key] = acc
                if track:
                    qd = quotients[idx]
                    qd[q] = field.add(qd.get(q, field.zero), factor)
                break
        else:
            remainder[m] = c
    rem = Polynomial(ring, remainder.items())
    if track:
        return rem, [Polynomial(ring, qd.items()) for qd in quotients]
    return rem


def s_polynomial(f, g):
    lcm = f.lead_monomial.lcm(g.lead_monomial)
    field = f.ring.field
    a = f.scale(field.div(field.one, f.lead_coefficient), lcm // f.lead_monomial)
    b = g.scale(field.div(field.one, g.lead_coefficient), lcm // g.lead_monomial)
    return a - b


def _gm_update(G, pairs, h, order):
    """Gebauer-Moeller pair update: add h to G, prune pairs by the product and
    chain criteria (Becker-Weispfenning installation)."""
    lm_h = h.lead_monomial
    C = [(g, lm_h.lcm(g.lead_monomial)) for g in G]
    D = []
    while C:
        g, lcm_hg = C.pop()
        if lm_h.coprime(g.lead_monomial) or (
            not any(l.divides(lcm_hg) for _, l in C)
            and not any(l.divides(lcm_hg) for _, l in D)
        ):
            D.append((g, lcm_hg))
    # product criterion: coprime-lead pairs reduce to zero, drop them
    E = [(g, l) for g, l in D if not lm_h.coprime(g.lead_monomial)]
    # chain criterion against the old pair set
    kept = []
    for f, g, lcm_fg in pairs:
        if (
            not lm_h.divides(lcm_fg)
            or f.lead_monomial.lcm(lm_h) == lcm_fg
            or lm_h.lcm(g.lead_monomial) == lcm_fg
        ):
            kept.append((f, g, lcm_fg))
    kept.extend((h, g, l) for g, l in E)
    G = [g for g in G if not lm_h.divides(g.lead_monomial)]
    G.append(h)
    return G, kept


def buchberger_reduced(F, ring=None, deadline=None, pair_budget=None):
    """The unique reduced Groebner basis of <F> under the ring's order.

    Monic, inter-reduced, sorted by leading monomial descending.  Raises
    ResourceLimitExceeded when the deadline or S-pair budget runs out.
    """
    F = [f for f in F if not f.is_zero]
    if ring is None:
        if not F:
            raise PreconditionError("cannot infer the ring of an empty system")
        ring = F[0].ring
    if not F:
        return ()
    order = ring.order
    budget = pair_budget if pair_budget is not None else DEFAULT_PAIR_BUDGET

    diffs = _as_pure_differences(F, ring)
    if diffs is not None:
        return _binomial_buchberger(diffs, ring, deadline, budget)

    G = []
    pairs = []
    for f in sorted(F, key=lambda p: order.key(p.lead_monomial)):
        if deadline is not None:
            deadline.check()
        h = normal_form(f, G).monic() if G else f.monic()
        if not h.is_zero:
            G, pairs = _gm_update(G, pairs, h, order)

    processed = 0
    while pairs:
        if deadline is not None:
            deadline.check()
        processed += 1
        if processed > budget:
            raise ResourceLimitExceeded("S-pair budget exhausted")
        best = min(
            range(len(pairs)),
            key=lambda k: (pairs[k][2].degree, order.key(pairs[k][2])),
        )
        f, g, _ = pairs.pop(best)
        h = normal_form(s_polynomial(f, g), G)
        if not h.is_zero:
            G, pairs = _gm_update(G, pairs, h.monic(), order)

    return _inter_reduce(G, ring)


def _as_pure_differences(F, ring):
    """Return [(lead, tail), ...] if every generator is monic-equivalent to a
    difference of two monomials, else None.  Such systems are closed under
    S-polynomials and reduction, with all coefficients staying +/-1."""
    field = ring.field
    out = []
    for f in F:
        if len(f.terms) != 2:
            return None
        (m1, c1), (m2, c2) = f.terms
        if field.add(c1, c2) != field.zero:
            return None
        out.append((m1, m2))
    return out


class _RewriteSystem:
    """Monomial rewriting by a set of pure differences, indexed for division.

    Each rule sends its lead to its tail; a rewrite walk strictly decreases in
    the order, so it terminates.  Rules are bucketed by the smallest rank of
    the lead: a divisor's support is contained in the target's, so its least
    rank is one of the target's ranks.  Normal forms are cached per epoch (the
    rule set's version), since adding or retiring a rule can invalidate them.
    """

    __slots__ = ("leads", "tails", "alive", "buckets", "epoch", "_cache")

    def __init__(self):
        self.leads = []
        self.tails = []
        self.alive = []
        self.buckets = {}
        self.epoch = 0
        self._cache = {}

    def add(self, lead, tail):
        idx = len(self.leads)
        self.leads.append(lead)
        self.tails.append(tail)
        self.alive.append(True)
        self.buckets.setdefault(lead.exps[0][0], []).append(idx)
        self.epoch += 1
        self._cache = {}
        return idx

    def retire(self, idx):
        self.alive[idx] = False
        # no cache flush: retired leads are divisible by a live lead, so every
        # rewrite they enabled is still available through the survivor

    def find_divisor(self, m):
        buckets = self.buckets
        leads = self.leads
        alive = self.alive
        for r, _ in m.exps:
            bucket = buckets.get(r)
            if not bucket:
                continue
            for idx in bucket:
                if alive[idx] and leads[idx].divides(m):
                    return idx
        return None

    def rewrite(self, m):
        cache = self._cache
        seen = []
        while True:
            hit = cache.get(m)
            if hit is not None:
                m = hit
                break
            idx = self.find_divisor(m)
            if idx is None:
                break
            seen.append(m)
            m = (m // self.leads[idx]) * self.tails[idx]
        for s in seen:
            cache[s] = m
        return m


def _binomial_buchberger(diffs, ring, deadline, budget):
    """Reduced Groebner basis of a pure-difference binomial system.

    The computation never leaves pure differences, so no coefficient
    arithmetic is needed and the result is the same over every field.
    """
    order = ring.order
    key = order.key
    rules = _RewriteSystem()
    pairs = {}  # pair id -> (i, j, lcm)
    pair_index = {}  # rank -> set of pair ids whose lcm uses the rank
    heap = []  # (lcm degree, pair id)
    next_pair_id = 0

    def gm_update(i_new):
        """Gebauer-Moeller update after inserting rule i_new.

        Pairs with equal lcm collapse to one representative (a coprime one if
        available, so the product criterion can drop the class); a
        representative survives only if no other new lcm properly divides it;
        old pairs fall to the chain criterion.
        """
        nonlocal next_pair_id
        lm_h = rules.leads[i_new]
        leads = rules.leads
        by_lcm = {}
        for g in range(i_new):
            if rules.alive[g]:
                by_lcm.setdefault(lm_h.lcm(leads[g]), []).append(g)
        reps = []
        for lcm_hg, gs in by_lcm.items():
            rep = next((g for g in gs if lm_h.coprime(leads[g])), gs[0])
            reps.append((lcm_hg, rep))
        # proper divisibility implies strictly smaller degree, so a degree
        # sort suffices for the domination scan
        reps.sort(key=lambda t: t[0].degree)
        kept = []
        for lcm_hg, g in reps:
            dominated = False
            deg = lcm_hg.degree
            target = lcm_hg.exps
            for other, _ in kept:
                if other.degree >= deg:
                    break
                a = other.exps
                j = 0
                ok = True
                for r, e in a:
                    while j < len(target) and target[j][0] < r:
                        j += 1
                    if j == len(target) or target[j][0] != r or target[j][1] < e:
                        ok = False
                        break
                if ok:
                    dominated = True
                    break
            if not dominated:
                kept.append((lcm_hg, g))
        # chain criterion on old pairs; only pairs whose lcm uses every rank of
        # lm_h can be divisible, so scan the smallest rank bucket
        bucket = None
        for r, _ in lm_h.exps:
            ids = pair_index.get(r)
            if ids is None:
                bucket = set()
                break
            if bucket is None or len(ids) < len(bucket):
                bucket = ids
        for pid in list(bucket or ()):
            entry = pairs.get(pid)
            if entry is None:
                bucket.discard(pid)  # stale index entry
                continue
            i, j, lcm_ij = entry
            if (
                lm_h.divides(lcm_ij)
                and leads[i].lcm(lm_h) != lcm_ij
                and lm_h.lcm(leads[j]) != lcm_ij
            ):
                del pairs[pid]
        for lcm_hg, g in kept:
            if lm_h.coprime(leads[g]):
                continue
            pairs[next_pair_id] = (g, i_new, lcm_hg)
            for r, _ in lcm_hg.exps:
                pair_index.setdefault(r, set()).add(next_pair_id)
            heapq.heappush(heap, (lcm_hg.degree, next_pair_id))
            next_pair_id += 1
        for g in range(i_new):
            if rules.alive[g] and lm_h.divides(leads[g]):
                rules.retire(g)

    def insert(u, v):
        """Rewrite both monomials and insert the surviving difference."""
        u = rules.rewrite(u)
        v = rules.rewrite(v)
        if u == v:
            return
        if key(u) < key(v):
            u, v = v, u
        gm_update(rules.add(u, v))

    for m1, m2 in sorted(diffs, key=lambda d: key(d[0].lcm(d[1]))):
        if deadline is not None:
            deadline.check()
        insert(m1, m2)

    processed = 0
    while heap:
        if deadline is not None and processed % 64 == 0:
            deadline.check()
        _, pid = heapq.heappop(heap)
        entry = pairs.pop(pid, None)
        if entry is None:
            continue  # pruned by the chain criterion
        processed += 1
        if processed > budget:
            raise ResourceLimitExceeded("S-pair budget exhausted")
        i, j, lcm_ij = entry
        u = (lcm_ij // rules.leads[i]) * rules.tails[i]
        v = (lcm_ij // rules.leads[j]) * rules.tails[j]
        insert(u, v)

    # inter-reduce: leads are already minimal; rewriting only decreases, so a
    # tail's rewrite chain can never meet its own (strictly larger) lead
    basis = []
    for idx in range(len(rules.leads)):
        if rules.alive[idx]:
            basis.append((rules.leads[idx], rules.rewrite(rules.tails[idx])))
    one = ring.field.one
    neg_one = ring.field.neg(one)
    polys = [
        Polynomial(ring, [(lead, one), (tail, neg_one)]) for lead, tail in basis
    ]
    polys.sort(key=lambda p: key(p.lead_monomial), reverse=True)
    return tuple(polys)


def _inter_reduce(G, ring):
    """Minimalize leads, then tail-reduce every element; sort descending."""
    order = ring.order
    G = sorted(G, key=lambda p: order.key(p.lead_monomial))
    minimal = []
    for g in G:
        lm = g.lead_monomial
        if not any(other.lead_monomial.divides(lm) for other in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic() if others else g.monic())
    reduced.sort(key=lambda p: order.key(p.lead_monomial), reverse=True)
    return tuple(reduced)


def is_reduced_groebner_basis(F, deadline=None):
    """True iff F is monic-equivalent, inter-reduced and every S-pair reduces to zero."""
    F = [f.monic() for f in F if not f.is_zero]
    if not F:
        return True
    for i, f in enumerate(F):
        for m, _ in f.terms:
            for j, g in enumerate(F):
                if i != j and g.lead_monomial.divides(m):
                    return False
    for i in range(len(F)):
        if deadline is not None:
            deadline.check()
        for j in range(i + 1, len(F)):
            if F[i].lead_monomial.coprime(F[j].lead_monomial):
                continue  # product criterion
            if not normal_form(s_polynomial(F[i], F[j]), F).is_zero:
                return False
    return True


def member(f, ideal, deadline=None):
    """Ideal membership via normal form against the cached reduced basis."""
    if f.ring != ideal.ring:
        raise RingMismatchError("membership test across different rings")
    if f.is_zero:
        return True
    gb = ideal.groebner_basis(deadline=deadline)
    if not gb:
        return False
    return normal_form(f, gb).is_zero


def ideal_equal(I, J, deadline=None):
    """True iff the two handles generate the same ideal (same ring and order)."""
    if I.ring != J.ring:
        raise RingMismatchError("ideal comparison requires a common ring")
    return I.groebner_basis(deadline=deadline) == J.groebner_basis(deadline=deadline)


def initial_ideal(I, deadline=None):
    """Minimal generating monomials of the ideal of leading terms of I."""
    gb = I.groebner_basis(deadline=deadline)
    leads = [g.lead_monomial for g in gb]
    # reduced basis => leads are already pairwise non-dividing
    return tuple(sorted(leads, key=I.ring.order.key, reverse=True))


def eliminate(I, block_vars, deadline=None):
    """Intersection of I with the subring omitting ``block_vars``.

    The handle's ring must be ordered by an elimination order whose leading
    block is exactly ``block_vars``.  The result lives in the restricted ring
    (inner grevlex order) and carries its reduced basis.
    """
    ring = I.ring
    order = ring.order
    block_ranks = {ring.rank[v] for v in block_vars}
    if order.kind != "elim" or block_ranks != set(range(order.block)):
        raise PreconditionError(
            "eliminate requires the ring's elimination order to lead with the block"
        )
    gb = I.groebner_basis(deadline=deadline)
    keep_vars = ring.variables[order.block:]
    sub_ring = PolyRing(
        keep_vars, ring.field, MonomialOrder("grevlex", len(keep_vars))
    )
    shift = order.block
    kept = []
    for g in gb:
        if any(r < shift for r, _ in g.lead_monomial.exps):
            continue
        terms = []
        for m, c in g.terms:
            if any(r < shift for r, _ in m.exps):
                raise PreconditionError("elimination order violated by a trailing term")
            terms.append((Monomial(tuple((r - shift, e) for r, e in m.exps)), c))
        kept.append(Polynomial(sub_ring, terms))
    kept.sort(key=lambda p: sub_ring.order.key(p.lead_monomial), reverse=True)
    return IdealHandle(sub_ring, kept, groebner=kept)


def minimal_generators(I, deadline=None):
    """A minimal homogeneous generating set, computed degree by degree.

    A candidate is dropped iff it lies in the ideal generated by lower-degree
    members plus the already-kept members of its own degree.
    """
    ring = I.ring
    order = ring.order
    for g in I.generators:
        if not g.is_homogeneous():
            raise PreconditionError("minimal_generators requires homogeneous generators")
    by_degree = {}
    for g in I.generators:
        by_degree.setdefault(g.total_degree(), []).append(g)
    kept = []
    kept_gb = None
    for d in sorted(by_degree):
        candidates = sorted(by_degree[d], key=lambda p: order.key(p.lead_monomial))
        for f in candidates:
            if deadline is not None:
                deadline.check()
            if kept_gb is not None and normal_form(f, kept_gb).is_zero:
                continue
            kept.append(f)
            kept_gb = buchberger_reduced(kept, ring, deadline=deadline)
    return tuple(kept)
