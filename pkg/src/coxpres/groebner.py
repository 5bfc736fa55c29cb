"""Buchberger-based ideal arithmetic.

Normal forms, reduced Groebner bases, ideal equality, elimination,
saturation, Krull dimension and toric (lattice) kernels of monomial maps.
All computations are exact over the rationals and deterministic.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .intlinalg import IntMatrix, kernel_basis
from .polyring import (EliminationBlock, Polynomial, PolyRing, divides,
                       exps_lcm, exps_sub)

DEFAULT_PAIR_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """Raised when a Groebner run consumes more S-pairs than allowed."""

    def __init__(self, pairs: int, budget: int):
        super().__init__(
            f"Groebner pair budget exhausted: {pairs} pairs processed, budget {budget}; "
            f"raise the budget to continue")
        self.pairs = pairs
        self.budget = budget


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order=None) -> Polynomial:
    """Full remainder of f on division by `basis`.

    No term of the result is divisible by any leading term of the basis,
    and f minus the result lies in the ideal the basis generates.
    """
    ring = f.ring
    if order is not None and order != ring.order:
        raise ValueError("order does not match the ring")
    key = ring.order.key
    red = [(g.leading_exps(), g.leading_coeff(), g) for g in basis if g]
    if len(red) != len(basis):
        raise ValueError("zero polynomial in divisor list")
    work = f.terms
    rem: list = []
    while work:
        e, c = work[0]
        hit = next(((le, lc, g) for le, lc, g in red if divides(le, e)), None)
        if hit is None:
            rem.append((e, c))
            work = work[1:]
            continue
        le, lc, g = hit
        mult = g.term_mul(exps_sub(e, le), c / lc)
        # head cancels by construction
        work = _sub_terms(key, work, mult.terms)
    return Polynomial(ring, tuple(rem))


def _sub_terms(key, a, b):
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ea, ca = a[i]
        eb, cb = b[j]
        if ea == eb:
            c = ca - cb
            if c:
                out.append((ea, c))
            i += 1
            j += 1
        elif key(ea) > key(eb):
            out.append(a[i])
            i += 1
        else:
            out.append((eb, -cb))
            j += 1
    out.extend(a[i:])
    out.extend((e, -c) for e, c in b[j:])
    return tuple(out)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    l = exps_lcm(ef, eg)
    return (f.term_mul(exps_sub(l, ef), 1 / cf)
            - g.term_mul(exps_sub(l, eg), 1 / cg))


def groebner_basis(gens: Iterable[Polynomial], ring: Optional[PolyRing] = None,
                   budget: int = DEFAULT_PAIR_BUDGET) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Normal selection strategy (smallest lcm first) with the product and
    chain criteria; the result is monic, pairwise tail-reduced and unique
    for the ring's order. Raises BudgetExceeded past `budget` S-pairs.
    """
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer ring from empty generator list")
        ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise ValueError("generators span several rings")
    if not gens:
        return ()
    key = ring.order.key

    basis: list[Polynomial] = []
    lms: list = []
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push_pairs(j):
        ej = lms[j]
        for i in range(j):
            l = exps_lcm(lms[i], ej)
            heapq.heappush(heap, (sum(l), key(l), i, j))
            pending.add((i, j))

    for g in sorted(gens, key=lambda p: key(p.leading_exps())):
        r = normal_form(g, basis) if basis else g
        if r:
            basis.append(r.monic())
            lms.append(r.leading_exps())
            push_pairs(len(basis) - 1)

    processed = 0
    while heap:
        _, lkey, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = lms[i], lms[j]
        l = exps_lcm(li, lj)
        # product criterion: coprime leading monomials
        if all(a + b == m for a, b, m in zip(li, lj, l)):
            continue
        # chain criterion: some k divides the lcm and both companion
        # pairs were already treated
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not divides(lms[k], l):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 not in pending and p2 not in pending:
                skip = True
                break
        if skip:
            continue
        processed += 1
        if processed > budget:
            raise BudgetExceeded(processed, budget)
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r:
            basis.append(r.monic())
            lms.append(r.leading_exps())
            push_pairs(len(basis) - 1)

    return _reduce_basis(ring, basis)


def _reduce_basis(ring, basis: list[Polynomial]) -> tuple[Polynomial, ...]:
    key = ring.order.key
    # minimal: ascending by leading monomial, keep only fresh leads
    keep: list[Polynomial] = []
    for g in sorted(basis, key=lambda p: key(p.leading_exps())):
        lg = g.leading_exps()
        if not any(divides(h.leading_exps(), lg) for h in keep):
            keep.append(g)
    # reduced: tail-reduce every survivor against the others
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others) if others else g
        if r:
            out.append(r.monic())
    out.sort(key=lambda p: key(p.leading_exps()))
    return tuple(out)


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Ideal presentation: ambient ring, generators, cached reduced basis."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator outside ambient ring")
        self._gb: Optional[tuple[Polynomial, ...]] = None

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens in {self.ring!r})"

    def groebner(self, budget: int = DEFAULT_PAIR_BUDGET) -> tuple[Polynomial, ...]:
        if self._gb is None:
            self._gb = groebner_basis(self.gens, self.ring, budget=budget)
        return self._gb

    def contains(self, f: Polynomial, budget: int = DEFAULT_PAIR_BUDGET) -> bool:
        return not normal_form(f, self.groebner(budget)) if f else True

    def is_whole_ring(self, budget: int = DEFAULT_PAIR_BUDGET) -> bool:
        gb = self.groebner(budget)
        return len(gb) == 1 and sum(gb[0].leading_exps()) == 0


def ideal_equal(a: Ideal, b: Ideal, budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """Whether two presentations generate the same ideal."""
    if a.ring != b.ring:
        raise ValueError("ambient mismatch")
    return a.groebner(budget) == b.groebner(budget)


def eliminate(a: Ideal, k: int, budget: int = DEFAULT_PAIR_BUDGET) -> Ideal:
    """Intersect with the subring that omits the first k variables.

    The variables to eliminate must occupy the first k table positions.
    The result lives in the smaller ring under the default grevlex order.
    """
    from .polyring import GREVLEX
    ring = a.ring
    if not 0 <= k <= ring.nvars:
        raise ValueError("bad elimination block size")
    elim_ring = PolyRing(ring.names, EliminationBlock(k))
    gb = groebner_basis([elim_ring.from_terms(g.terms) for g in a.gens],
                        elim_ring, budget=budget)
    sub = PolyRing(ring.names[k:], GREVLEX)
    kept = []
    for g in gb:
        if all(all(x == 0 for x in e[:k]) for e, _ in g.terms):
            kept.append(sub.from_terms([(e[k:], c) for e, c in g.terms]))
    return Ideal(sub, kept)


def saturate(a: Ideal, f: Polynomial, budget: int = DEFAULT_PAIR_BUDGET) -> Ideal:
    """Saturation a : f^infinity via one auxiliary-variable elimination."""
    if not f:
        raise ValueError("cannot saturate by zero")
    ring = a.ring
    aux = "_w"
    while aux in ring.index:
        aux = "_" + aux
    big = PolyRing((aux,) + ring.names, EliminationBlock(1))

    def lift(p: Polynomial) -> Polynomial:
        return big.from_terms([((0,) + e, c) for e, c in p.terms])

    gens = [lift(g) for g in a.gens]
    gens.append(big.one() - big.var(aux) * lift(f))
    gb = groebner_basis(gens, big, budget=budget)
    kept = []
    for g in gb:
        if all(e[0] == 0 for e, _ in g.terms):
            kept.append(ring.from_terms([(e[1:], c) for e, c in g.terms]))
    return Ideal(ring, kept)


def krull_dimension(a: Ideal, budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """Dimension of the affine zero set.

    Equals the largest number of variables independent modulo the leading
    term ideal: no leading monomial of the reduced basis may be supported
    inside the chosen variable set.
    """
    gb = a.groebner(budget)
    n = a.ring.nvars
    if len(gb) == 1 and sum(gb[0].leading_exps()) == 0:
        raise ValueError("empty variety")
    supports = []
    for g in gb:
        s = frozenset(i for i, x in enumerate(g.leading_exps()) if x)
        supports.append(s)
    # minimal supports only
    supports = [s for s in supports
                if not any(t < s for t in supports)]
    supports = list(set(supports))
    return n - _min_hitting_set(supports)


def _min_hitting_set(sets: list[frozenset]) -> int:
    """Smallest number of elements meeting every set (memoized search)."""
    memo: dict = {}

    def solve(remaining: frozenset) -> int:
        if not remaining:
            return 0
        got = memo.get(remaining)
        if got is not None:
            return got
        pivot = min(remaining, key=len)
        out = min(1 + solve(frozenset(s for s in remaining if v not in s))
                  for v in sorted(pivot))
        memo[remaining] = out
        return out

    return solve(frozenset(sets))


def toric_kernel(e: IntMatrix, ring: Optional[PolyRing] = None,
                 budget: int = DEFAULT_PAIR_BUDGET) -> Ideal:
    """Kernel ideal of the monomial map whose exponent matrix is `e`.

    Column j of `e` is the exponent vector of the image of source
    variable j. The result is the lattice ideal: binomials from a kernel
    basis, saturated by every source variable in turn.
    """
    m = e.cols
    if ring is None:
        ring = PolyRing(tuple(f"x{i+1}" for i in range(m)))
    if ring.nvars != m:
        raise ValueError("ring size does not match exponent matrix")
    kb = kernel_basis(e)
    gens = []
    for row in kb.entries:
        plus = tuple(x if x > 0 else 0 for x in row)
        minus = tuple(-x if x < 0 else 0 for x in row)
        gens.append(ring.from_terms([(plus, Fraction(1)), (minus, Fraction(-1))]))
    ideal = Ideal(ring, [g for g in gens if g])
    if not ideal.gens:
        return ideal
    touched = sorted({i for g in ideal.gens for i in g.support_vars()})
    for i in touched:
        ideal = saturate(ideal, ring.var(ring.names[i]), budget=budget)
    return ideal
