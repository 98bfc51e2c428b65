"""T-regular factroids, the G^W construction and W-Egyptian fractions.

``G^W(S)`` is the union over ``h`` in ``W`` of ``([hS]^W : h)``.  The union is
infinite, so membership is a semi-decision: :func:`g_membership` searches
``h`` up to a degree (or absolute value) bound and either returns a
certified witness or reports that nothing was found.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import subspace as sp
from .errors import DomainError, UnsupportedError
from .factroid import closure
from .mulsets import MultSet
from .rings import Integers, Poly, PolyRing, RingSpec
from .subspace import FpSubspace, SubgroupRep

MEMBER = "member"
NOT_FOUND = "not-found"


@dataclass
class GMembership:
    ring: RingSpec
    element: object
    status: str
    h: object = None
    certificate: SubgroupRep | None = None
    searched_degrees: int = 0
    candidates_tried: int = 0

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    def to_json(self) -> dict:
        fmt = self.ring.format_element
        out = {
            "element": fmt(self.element),
            "status": self.status,
            "searched_degrees": self.searched_degrees,
            "candidates_tried": self.candidates_tried,
            "witness_h": None if self.h is None else fmt(self.h),
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
            if isinstance(self.certificate, FpSubspace):
                out["certificate_dim"] = self.certificate.dim
        return out


@dataclass
class EgyptianWitness:
    ring: RingSpec
    denominators: list
    target: tuple

    def to_json(self) -> dict:
        fmt = self.ring.format_element
        return {
            "ring": str(self.ring),
            "denominators": [fmt(w) for w in self.denominators],
            "target": [fmt(self.target[0]), fmt(self.target[1])],
        }


# ---------------------------------------------------------------------------
# G-membership


def _h_candidates(W: MultSet, H: int):
    ring = W.ring
    if isinstance(ring, PolyRing):
        yield from W.monic_members(0, H)
    elif isinstance(ring, Integers):
        for h in range(1, H + 1):
            if W.contains(h):
                yield h
            elif W.contains(-h):
                yield -h
    elif ring.is_finite:
        yield from W.members()
    else:
        raise UnsupportedError(f"G-membership over {ring}")


def g_membership(x, S: Sequence, W: MultSet, H: int) -> GMembership:
    """Search ``h`` in ``W`` (degree, or absolute value, at most ``H``) with ``hx`` in ``[hS]^W``.

    Candidates are tried in increasing degree, then graded-lex order, so the
    reported witness is the first one in that order.
    """
    if H < 0:
        raise DomainError("search bound must be >= 0")
    ring = W.ring
    x = ring.coerce(x)
    S = [ring.coerce(s) for s in S]
    graded = isinstance(ring, PolyRing)
    d = max((s.degree for s in S if not s.is_zero), default=0) if graded else None
    tried = 0
    for h in _h_candidates(W, H):
        tried += 1
        hS = [ring.mul(h, s) for s in S]
        hx = ring.mul(h, x)
        if graded:
            bound = h.degree + d
            if not hx.is_zero and hx.degree > bound:
                continue
            F = closure(hS, W, bound=bound).result
        else:
            F = closure(hS, W).result
        if F.contains(hx):
            return GMembership(ring, x, MEMBER, h, F, H, tried)
    return GMembership(ring, x, NOT_FOUND, None, None, H, tried)


def verify_membership(result: GMembership, S: Sequence, W: MultSet) -> bool:
    """Recompute the certificate of a Member result from scratch."""
    if not result.is_member:
        return False
    ring = W.ring
    h = result.h
    hS = [ring.mul(h, ring.coerce(s)) for s in S]
    if isinstance(ring, PolyRing):
        d = max((ring.coerce(s).degree for s in S if not ring.coerce(s).is_zero), default=0)
        F = closure(hS, W, bound=h.degree + d).result
    else:
        F = closure(hS, W).result
    return F == result.certificate and F.contains(ring.mul(h, result.element))


# ---------------------------------------------------------------------------
# T-regularity


@dataclass
class TRegularResult:
    regular: bool
    h: object = None
    x: object = None

    def __bool__(self):
        return self.regular


def t_regular_check(F: SubgroupRep, T: Sequence, W: MultSet) -> TRegularResult:
    """Whether ``([hF]^W : h) = F`` for every ``h`` in ``T``; else a pair ``(h, x)``."""
    ring = F.ring
    for h in T:
        h = ring.coerce(h)
        if ring.is_zero(h):
            raise DomainError("T-regularity is tested for nonzero h only")
        if isinstance(F, FpSubspace):
            bound = F.ambient.d + h.degree
            hF = [ring.mul(h, b) for b in F.basis()]
            C = closure(hF, W, bound=bound).result if hF else sp.zero_subgroup(sp.ambient(ring, bound))
            P = sp.mul_preimage(C, h)
            Fb = F.reembed(bound)
            if P != Fb:
                # report the first offending basis vector reduced modulo F
                amb = Fb.ambient
                v = next(r for r in (Fb._reduce(b) for b in P.rows) if any(r))
                return TRegularResult(False, h, amb.poly(v))
        else:
            hF = [ring.mul(h, a) for a in _generators(F)]
            C = closure(hF, W).result
            P = sp.mul_preimage(C, h)
            if P != F:
                x = next(a for a in _generators(P) if not F.contains(a))
                return TRegularResult(False, h, x)
    return TRegularResult(True)


def _generators(F: SubgroupRep) -> list:
    if isinstance(F, sp.CyclicInt):
        return [F.g]
    if isinstance(F, sp.CyclicMod):
        return [F.g % F.n]
    return sorted(F.element_set(), key=repr)


# ---------------------------------------------------------------------------
# Egyptian fractions


def egyptian_decide(a, b, W: MultSet, H: int) -> GMembership:
    """Decide (up to ``H``) whether ``a/b`` is a sum of reciprocals of members of ``W``."""
    ring = W.ring
    b = ring.coerce(b)
    if not W.contains(b):
        raise DomainError(f"denominator {ring.format_element(b)} is not in {W.describe()}")
    return g_membership(a, [b], W, H)


def witness_verify(w: EgyptianWitness, W: MultSet | None = None) -> bool:
    """Check ``sum 1/w_i = a/b`` by clearing denominators exactly."""
    ring = w.ring
    dens = [ring.coerce(d) for d in w.denominators]
    if not dens:
        raise DomainError("a witness needs at least one denominator")
    if any(ring.is_zero(d) for d in dens):
        raise DomainError("zero denominator")
    if W is not None and not all(W.contains(d) for d in dens):
        return False
    a, b = (ring.coerce(t) for t in w.target)
    lhs = ring.mul(a, ring.prod(dens))
    terms = [ring.prod(dens[:i] + dens[i + 1 :]) for i in range(len(dens))]
    rhs = ring.mul(b, _sum(ring, terms))
    return ring.eq(lhs, rhs)


def _sum(ring: RingSpec, items):
    out = ring.zero()
    for t in items:
        out = ring.add(out, t)
    return out


def greedy_unit_fractions(q, distinct: bool = False) -> EgyptianWitness:
    """Greedy expansion of a positive rational into unit fractions.

    The integer part is written as repeated ``1/1`` terms.  With
    ``distinct=True`` every denominator is used at most once.
    """
    q = Fraction(q)
    if q <= 0:
        raise DomainError("greedy expansion needs a positive rational")
    target = (q.numerator, q.denominator)
    rest = q
    dens: list[int] = []
    if distinct:
        n = 1
        while rest:
            n = max(n, math.ceil(1 / rest))
            dens.append(n)
            rest -= Fraction(1, n)
            n += 1
    else:
        while rest >= 1:
            dens.append(1)
            rest -= 1
        while rest:
            n = -(-rest.denominator // rest.numerator)
            dens.append(n)
            rest -= Fraction(1, n)
    return EgyptianWitness(Integers(), dens, target)


# ---------------------------------------------------------------------------
# the exhaustive split check behind the dimension-6 closure


def is_irreducible(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree up to ``deg f / 2``."""
    ring = f.ring
    if f.is_zero or f.degree == 0:
        return False
    for g in ring.monic_polys(1, f.degree // 2):
        if ring.try_exact_divide(f, g) is not None:
            return False
    return True


def is_product_in(f: Poly, V: FpSubspace) -> bool:
    """Whether ``f`` is a product of elements of ``V`` (up to a scalar)."""
    ring = f.ring

    def rec(g: Poly) -> bool:
        if g.degree <= V.ambient.d and V.contains(g):
            return True
        for d in ring.monic_polys(1, min(g.degree - 1, V.ambient.d)):
            if not V.contains(d):
                continue
            q = ring.try_exact_divide(g, d)
            if q is not None and rec(q):
                return True
        return False

    return rec(f)


@dataclass
class SplitCheck:
    checked: int
    irreducible: list = field(default_factory=list)
    split: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def split_or_irreducible_check(f: Poly, V: FpSubspace) -> SplitCheck:
    """For each ``u`` in ``V``: ``u + f`` is irreducible or a product of elements of ``V``.

    When this holds (and ``V`` is itself saturated) every colon of an
    element of ``V + span{f}`` stays inside ``V + span{f}``.
    """
    ring = f.ring
    out = SplitCheck(0)
    for u in V.elements():
        g = ring.add(u, f)
        out.checked += 1
        if is_irreducible(g):
            out.irreducible.append(g)
        elif is_product_in(g, V):
            out.split.append(g)
        else:
            out.failures.append(g)
    return out


__all__ = [
    "GMembership",
    "EgyptianWitness",
    "TRegularResult",
    "SplitCheck",
    "g_membership",
    "verify_membership",
    "t_regular_check",
    "egyptian_decide",
    "witness_verify",
    "greedy_unit_fractions",
    "is_irreducible",
    "is_product_in",
    "split_or_irreducible_check",
    "MEMBER",
    "NOT_FOUND",
]
