"""Hilbert series of the quotient by a homogeneous ideal, via its initial ideal.

The numerator over (1 - T)^nvars is computed by the classical pivot recursion
on monomial ideals; the reduced form cancels every (1 - T) factor so the
numerator does not vanish at T = 1.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .groebner import initial_ideal
from .polyalg import Monomial


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(T) / (1 - T)^denominator_exponent in reduced form."""

    numerator: tuple  # integer coefficients, constant term first
    denominator_exponent: int

    def numerator_at_one(self):
        """The multiplicity of the quotient ring."""
        return sum(self.numerator)

    def numerator_text(self):
        return _poly_text(self.numerator)

    def __str__(self):
        return f"({self.numerator_text()})/(1 - T)^{self.denominator_exponent}"

    def expand(self, degree):
        """Coefficients of the series up to the given degree."""
        out = [0] * (degree + 1)
        d = self.denominator_exponent
        for k, c in enumerate(self.numerator):
            if k > degree:
                break
            for t in range(k, degree + 1):
                out[t] += c * _binom(d - 1 + t - k, t - k)
        return out


def _binom(n, k):
    if k < 0 or n < 0:
        return 0
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


def _poly_text(coeffs):
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        mag = abs(c)
        body = "T" if k == 1 else f"T^{k}"
        term = body if mag == 1 else f"{mag}{body}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
    ]


def _poly_shift(a):
    return [0] + list(a)


def _poly_mul_one_minus_tk(a, k):
    """a(T) * (1 - T^k)."""
    out = list(a) + [0] * k
    for i, c in enumerate(a):
        out[i + k] -= c
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (m.degree, m.exps))
    out = []
    for m in gens:
        if not any(g.divides(m) for g in out):
            out.append(m)
    return out


def hilbert_numerator(monomials, nvars, deadline=None):
    """Integer coefficients N such that HS(S/M) = N(T) / (1-T)^nvars.

    ``monomials`` generate the monomial ideal M (need not be minimal).  The
    pivot variable is the most frequent one among the current generators,
    ties broken by rank.
    """
    for m in monomials:
        if not isinstance(m, Monomial):
            raise PreconditionError("hilbert_numerator expects monomials")
    memo = {}

    def rec(gens):
        if deadline is not None:
            deadline.check()
        if not gens:
            return [1]
        if any(g.degree == 0 for g in gens):
            return [0]
        key = tuple(g.exps for g in gens)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if all(len(g.exps) == 1 for g in gens):
            # pure powers of distinct variables: N = prod (1 - T^e)
            out = [1]
            for g in gens:
                out = _poly_mul_one_minus_tk(out, g.degree)
            memo[key] = out
            return out
        counts = {}
        for g in gens:
            if len(g.exps) > 1:
                for r, _ in g.exps:
                    counts[r] = counts.get(r, 0) + 1
        pivot = min(counts, key=lambda r: (-counts[r], r))
        x = Monomial(((pivot, 1),))
        # M + <x>: x plus the generators not using the pivot
        left = _minimalize([g for g in gens if g.exponent(pivot) == 0] + [x])
        # M : x: divide the pivot out of each generator once
        right = _minimalize(
            [g // x if g.exponent(pivot) else g for g in gens]
        )
        out = _poly_add(rec(left), _poly_shift(rec(right)))
        while out and out[-1] == 0:
            out.pop()
        memo[key] = out
        return out

    return list(rec(_minimalize(monomials)))


def reduced_hilbert_series(I, deadline=None):
    """Reduced Hilbert series of ring/I for a homogeneous ideal handle."""
    for g in I.generators:
        if not g.is_homogeneous():
            raise PreconditionError("reduced_hilbert_series requires a homogeneous ideal")
    nvars = len(I.ring.variables)
    leads = initial_ideal(I, deadline=deadline)
    numerator = hilbert_numerator(leads, nvars, deadline=deadline)
    exponent = nvars
    while numerator and sum(numerator) == 0:
        # exact division by (1 - T) via cumulative sums
        sums = []
        acc = 0
        for c in numerator:
            acc += c
            sums.append(acc)
        assert sums[-1] == 0
        numerator = sums[:-1]
        exponent -= 1
        while numerator and numerator[-1] == 0:
            numerator.pop()
    return HilbertSeries(numerator=tuple(numerator), denominator_exponent=exponent)


def count_standard_monomials(leads, nvars, max_degree):
    """Brute-force count, by degree, of monomials outside the lead ideal.

    Independent oracle for the series expansion; exponential, small inputs only.
    """
    counts = [0] * (max_degree + 1)

    def walk(d, rank, remaining, acc):
        if remaining == 0:
            m = Monomial(tuple(acc))
            if not any(l.divides(m) for l in leads):
                counts[d] += 1
            return
        if rank == nvars:
            return
        for e in range(remaining, -1, -1):
            walk(d, rank + 1, remaining - e, acc + [(rank, e)] if e else acc)

    for d in range(max_degree + 1):
        walk(d, 0, d, [])
    return counts
