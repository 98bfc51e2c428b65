"""Brute-force reference implementations.

Everything here works on explicit element sets and imports nothing from the
engine except the ring arithmetic, so agreement with the engine is evidence
rather than a tautology.  Multiplicative sets are only asked for membership.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations, product as cartesian
from typing import Callable, Iterable, Iterator

from .errors import BudgetError, UnsupportedError
from .rings import PolyRing, RingSpec, monomials_up_to

CANDIDATE_LIMIT = 1 << 24


@dataclass(frozen=True)
class EnumerationBudget:
    max_dims: dict = field(default_factory=lambda: {2: 6, 3: 4})
    default_max_dim: int = 3
    max_ring_size: int = 64
    time_budget: float | None = None

    def max_dim(self, p: int) -> int:
        return self.max_dims.get(p, self.default_max_dim)


DEFAULT_BUDGET = EnumerationBudget()


@dataclass(frozen=True)
class OracleAmbient:
    """Polynomials of degree <= d, or a whole finite ring when ``d`` is None."""

    ring: RingSpec
    d: int | None = None

    @property
    def graded(self) -> bool:
        return self.d is not None

    def monomials(self) -> tuple:
        return tuple(reversed(monomials_up_to(self.ring.nvars, self.d)))

    def elements(self) -> list:
        if self.graded:
            mons = self.monomials()
            return [self.ring.poly(dict(zip(mons, cs))) for cs in cartesian(range(self.ring.p), repeat=len(mons))]
        return list(self.ring.elements())

    def contains(self, a) -> bool:
        if not self.graded:
            return True
        return a.is_zero or a.degree <= self.d


def _membership(W) -> Callable:
    return W.contains if hasattr(W, "contains") else W


def _gaussian_binomial(n: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


class _Clock:
    def __init__(self, budget: EnumerationBudget):
        self.deadline = None if budget.time_budget is None else time.monotonic() + budget.time_budget

    def tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetError("oracle time budget exhausted")


def _check_budget(amb: OracleAmbient, budget: EnumerationBudget):
    if amb.graded:
        n, p = len(amb.monomials()), amb.ring.p
        if n > budget.max_dim(p):
            raise BudgetError(f"ambient dimension {n} exceeds the oracle budget {budget.max_dim(p)} over GF({p})")
        total = sum(_gaussian_binomial(n, k, p) for k in range(n + 1))
        if total > CANDIDATE_LIMIT:
            raise BudgetError(f"{total} candidate subspaces exceed 2^24")
    else:
        if not amb.ring.is_finite:
            raise UnsupportedError(f"{amb.ring} is infinite; give a degree bound")
        if amb.ring.size > budget.max_ring_size:
            raise BudgetError(f"{amb.ring} has {amb.ring.size} elements > {budget.max_ring_size}")


# ---------------------------------------------------------------------------
# subgroups


def _echelon_forms(n: int, p: int) -> Iterator[list[list[int]]]:
    """Every reduced row echelon matrix with ``n`` columns, row-count first."""
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivots]
            for vals in cartesian(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, c in enumerate(pivots):
                    rows[i][c] = 1
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                yield rows


def _row_span(ring: PolyRing, mons: tuple, rows: list[list[int]]) -> frozenset:
    p = ring.p
    out = set()
    for coeffs in cartesian(range(p), repeat=len(rows)):
        v = [0] * len(mons)
        for c, r in zip(coeffs, rows):
            for j, a in enumerate(r):
                v[j] += c * a
        out.add(ring.poly(dict(zip(mons, v))))
    return frozenset(out)


def _generated(ring: RingSpec, H: frozenset, g) -> frozenset:
    out = set(H)
    frontier = list(H)
    while frontier:
        nxt = []
        for a in frontier:
            b = ring.add(a, g)
            if b not in out:
                out.add(b)
                nxt.append(b)
        frontier = nxt
    return frozenset(out)


def enumerate_subgroups(amb: OracleAmbient, budget: EnumerationBudget = DEFAULT_BUDGET) -> Iterator[frozenset]:
    """All additive subgroups of the ambient, each as a frozenset of elements."""
    _check_budget(amb, budget)
    clock = _Clock(budget)
    if amb.graded:
        mons = amb.monomials()
        for rows in _echelon_forms(len(mons), amb.ring.p):
            clock.tick()
            yield _row_span(amb.ring, mons, rows)
        return
    ring = amb.ring
    elems = sorted(ring.elements(), key=repr)
    found = {frozenset([ring.zero()])}
    frontier = list(found)
    while frontier:
        clock.tick()
        nxt = []
        for H in frontier:
            for g in elems:
                if g not in H:
                    K = _generated(ring, H, g)
                    if K not in found:
                        found.add(K)
                        nxt.append(K)
        frontier = nxt
    yield from sorted(found, key=lambda H: (len(H), sorted(map(repr, H))))


# ---------------------------------------------------------------------------
# saturation pairs


def _pairs(amb: OracleAmbient, W) -> dict:
    """Map each product ``w*x`` (inside the ambient) to the list of its ``x``."""
    ring = amb.ring
    member = _membership(W)
    elems = amb.elements()
    table: dict = {}
    if amb.graded:
        by_deg: dict = {}
        for a in elems:
            by_deg.setdefault(-1 if a.is_zero else a.degree, []).append(a)
        ws = [w for w in elems if not w.is_zero and member(w)]
        for w in ws:
            for k, xs in by_deg.items():
                if k < 0 or w.degree + k > amb.d:
                    continue
                for x in xs:
                    table.setdefault(ring.mul(w, x), []).append(x)
        return table
    ws = [w for w in elems if member(w)]
    for w in ws:
        for x in elems:
            table.setdefault(ring.mul(w, x), []).append(x)
    return table


def is_factroid_elementwise(F: frozenset, table: dict) -> bool:
    for y in F:
        for x in table.get(y, ()):
            if x not in F:
                return False
    return True


def enumerate_factroids(amb: OracleAmbient, W, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[frozenset]:
    """The subgroups ``F`` such that ``w*x`` in ``F`` with ``w`` in ``W`` forces ``x`` in ``F``."""
    table = _pairs(amb, W)
    return [F for F in enumerate_subgroups(amb, budget) if is_factroid_elementwise(F, table)]


def _additive_closure(ring: RingSpec, S: Iterable) -> frozenset:
    S = list(S)
    out = {ring.zero()}
    frontier = [ring.zero()]
    while frontier:
        nxt = []
        for a in frontier:
            for s in S:
                for b in (ring.add(a, s), ring.sub(a, s)):
                    if b not in out:
                        out.add(b)
                        nxt.append(b)
        frontier = nxt
    return frozenset(out)


def naive_closure(S: Iterable, W, amb: OracleAmbient | None = None, ring: RingSpec | None = None,
                  budget: EnumerationBudget = DEFAULT_BUDGET) -> frozenset:
    """Literal fixed point: add every ``x`` with ``w*x`` in the set, then close under subtraction.

    Without an explicit ambient a polynomial ambient of degree ``max deg S``
    (or the whole finite ring) is used.
    """
    ring = ring or (amb.ring if amb else W.ring)
    S = [ring.coerce(s) for s in S]
    if amb is None:
        if isinstance(ring, PolyRing):
            amb = OracleAmbient(ring, max((s.degree for s in S if not s.is_zero), default=0))
        else:
            amb = OracleAmbient(ring)
    if amb.graded:
        n = len(amb.monomials())
        if amb.ring.p ** n > 1 << 16:
            raise BudgetError(f"{amb.ring.p}^{n} ambient elements exceed the closure budget")
    elif not ring.is_finite or ring.size > 1 << 12:
        raise BudgetError(f"{ring} is too large for the naive closure")
    table = _pairs(amb, W)
    cur = _additive_closure(ring, S)
    while True:
        extra = {x for y in cur for x in table.get(y, ())}
        nxt = _additive_closure(ring, cur | extra) if not extra <= cur else cur
        if nxt == cur:
            return cur
        cur = nxt


# ---------------------------------------------------------------------------
# integers


def _divisors(g: int) -> list[int]:
    small, large = [], []
    q = 1
    while q * q <= g:
        if g % q == 0:
            small.append(q)
            if q * q != g:
                large.append(g // q)
        q += 1
    return small + large[::-1]


def naive_closure_int(g: int, gens: Iterable[int], max_steps: int = 10_000) -> int:
    """``[g]`` in ``Z`` for the monoid generated by ``gens``, by iterated colons.

    Each step replaces ``g`` by the gcd of ``g`` and the generators of
    ``(gZ : h)`` for each generator ``h``; the generator of ``(gZ : h)`` is
    found by scanning the divisors of ``g``.
    """
    g = abs(g)
    gens = [h for h in gens if h not in (0, 1, -1)]
    if g == 0:
        return 0
    for _ in range(max_steps):
        new = g
        for h in gens:
            x = next(x for x in _divisors(g) if (h * x) % g == 0)
            new = math.gcd(new, x)
        if new == g:
            return g
        g = new
    raise BudgetError("integer closure did not stabilize")


__all__ = [
    "EnumerationBudget",
    "OracleAmbient",
    "enumerate_subgroups",
    "enumerate_factroids",
    "naive_closure",
    "naive_closure_int",
    "is_factroid_elementwise",
    "DEFAULT_BUDGET",
]
