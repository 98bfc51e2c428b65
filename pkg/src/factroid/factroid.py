"""Saturations, F1 steps, factroid closures, W(F), A(F) and colons.

Polynomial closures are computed inside the space of polynomials of degree
at most ``d``, ``d`` the largest degree of a generator.  A closure generated
in degree <= d never leaves that space, so the truncation is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sympy import divisors

from . import subspace as sp
from .errors import DegreeOverflowError, DomainError, RingMismatchError, UnsupportedError
from .mulsets import MultSet
from .rings import (
    EvalVarToZero,
    Inclusion,
    Integers,
    IntegersMod,
    Poly,
    PolyRing,
    PrimeField,
    Product,
    ProjectionLeft,
    ProjectionRight,
    QuotientMap,
    RingHom,
    RingSpec,
    monomials_up_to,
)
from .subspace import CyclicInt, CyclicMod, FpSubspace, PairExplicit, PairProduct, SubgroupRep

# W(F) reports list every monic representative; refuse beyond this many
WOF_LIMIT = 1 << 14


@dataclass
class ClosureResult:
    result: SubgroupRep
    iterations: int
    stabilized: bool
    degree_bound: int | None
    trace: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "result": self.result.to_json(),
            "iterations": self.iterations,
            "stabilized": self.stabilized,
            "degree_bound": self.degree_bound,
        }
        if isinstance(self.result, FpSubspace):
            out["dim"] = self.result.dim
            out["basis"] = out["result"]["basis"]
        if self.trace:
            out["trace"] = self.trace
        return out


# ---------------------------------------------------------------------------
# helpers


def _poly_degree(ring: PolyRing, gens) -> int:
    degs = [ring.coerce(g).degree for g in gens if not ring.coerce(g).is_zero]
    return max(degs, default=0)


def _check_ring(W: MultSet, ring: RingSpec):
    if W.ring != ring:
        raise RingMismatchError(f"multiplicative set lives in {W.ring}, subgroup in {ring}")


def _as_subgroup(S, ring: RingSpec, bound: int | None = None) -> SubgroupRep:
    """Turn an element list into a subgroup (a bounded span for polynomials)."""
    if isinstance(S, SubgroupRep):
        if bound is not None and isinstance(S, FpSubspace) and bound != S.ambient.d:
            return S.reembed(bound)
        return S
    gens = [ring.coerce(s) for s in S]
    if isinstance(ring, PolyRing):
        d = _poly_degree(ring, gens)
        if bound is not None:
            if bound < d:
                raise DegreeOverflowError(f"generators reach degree {d} > bound {bound}")
            d = bound
        return sp.span(sp.ambient(ring, d), gens)
    return sp.span(ring, gens)


def _explicit(F: SubgroupRep) -> PairExplicit:
    if isinstance(F, PairExplicit):
        return F
    return PairExplicit(F.ring, frozenset(F.elements()))


def _split_point(m: int) -> int:
    # colons by w of degree <= t, multiple tests on x of degree <= m - t - 1
    return max(0, (m - 1) // 2)


# ---------------------------------------------------------------------------
# saturation and F1


def saturate(S, W: MultSet, bound: int | None = None) -> set:
    """Elements ``x`` with ``w*x`` in ``S`` for some ``w`` in ``W``.

    ``S`` is an element list or a subgroup.  For polynomial rings only ``x``
    and ``w`` of degree <= ``bound`` are considered; ``Z`` needs no bound
    when ``S`` is a finite list.
    """
    ring = W.ring
    if isinstance(S, SubgroupRep):
        _check_ring(W, S.ring)
        if isinstance(S, FpSubspace):
            d = S.ambient.d if bound is None else min(bound, S.ambient.d)
            out = set(S.elements())
            for w in W.monic_members(1, d):
                out |= set(sp.mul_preimage(S, w).elements())
            return {x for x in out if x.is_zero or x.degree <= d}
        if not ring.is_finite:
            raise UnsupportedError("saturating an infinite subgroup needs an element list")
        out = set()
        members = W.members()
        for s in S.elements():
            for w in members:
                out |= ring.solve_linear(w, s)
        return out
    elems = [ring.coerce(s) for s in S]
    out = set()
    if isinstance(ring, PolyRing):
        if bound is None:
            bound = _poly_degree(ring, elems)
        for s in elems:
            if s.is_zero:
                out.add(s)
                continue
            for m in W.ring.monic_polys(0, min(bound, s.degree)):
                q = ring.try_exact_divide(s, m)
                if q is None or q.degree > bound:
                    continue
                for c in range(1, ring.p):
                    if W.contains(ring.scale(m, c)):
                        out.add(ring.scale(q, pow(c, -1, ring.p)))
        return out
    if isinstance(ring, Integers):
        for s in elems:
            if s == 0:
                out.add(0)
                continue
            for dv in divisors(abs(s)):
                for w in (dv, -dv):
                    if W.contains(w):
                        out.add(s // w)
        return out
    if ring.is_finite:
        members = W.members()
        for s in elems:
            for w in members:
                out |= ring.solve_linear(w, s)
        return out
    raise UnsupportedError(f"saturation over {ring}")


def f1_step(F: SubgroupRep, W: MultSet) -> SubgroupRep:
    """The subgroup generated by the ``W``-saturation of ``F``."""
    _check_ring(W, F.ring)
    if isinstance(F, FpSubspace):
        return _f1_poly(F, W)
    if isinstance(F, CyclicInt):
        if F.g == 0:
            return F
        return CyclicInt(F.g // W.saturating_divisor(F.g))
    if isinstance(F, CyclicMod):
        g = F.g
        for w in W.members():
            g = math.gcd(g, F.g // math.gcd(F.g, w))
        return CyclicMod(F.ring, g)
    if isinstance(F, (PairExplicit, PairProduct)) and F.is_finite:
        ring = F.ring
        elems = set(F.element_set())
        for s in F.element_set():
            for w in W.members():
                elems |= ring.solve_linear(w, s)
        return sp.span(ring, elems)
    raise UnsupportedError(f"F1 step for {type(F).__name__} over {F.ring}")


def _f1_poly(F: FpSubspace, W: MultSet) -> FpSubspace:
    amb = F.ambient
    if not F.rows:
        return F
    m = F.max_degree
    vecs = list(F.rows)
    if W.is_whole_reg():
        t = _split_point(m)
        for w in amb.ring.monic_polys(1, t):
            vecs.extend(sp.mul_preimage(F, w).rows)
        G = sp.from_vectors(amb, vecs)
        for x in amb.ring.monic_polys(0, m - t - 1):
            if G.membership(x) == sp.NON_MEMBER and sp.meets_multiples(F, x):
                G = sp.from_vectors(amb, G.rows + (amb.vector(x),))
        return G
    for w in W.monic_members(1, m):
        vecs.extend(sp.mul_preimage(F, w).rows)
    return sp.from_vectors(amb, vecs)


def is_factroid(F: SubgroupRep, W: MultSet) -> bool:
    return f1_step(F, W) == F


# ---------------------------------------------------------------------------
# closures


def closure(S, W: MultSet, bound: int | None = None, trace: bool = False) -> ClosureResult:
    """The smallest ``W``-factroid containing ``S``.

    ``S`` is a list of ring elements or a subgroup.  For polynomial rings the
    ambient bound defaults to the largest generator degree; ``bound`` may
    raise it.
    """
    ring = W.ring
    if isinstance(ring, Product) and not ring.is_finite:
        raise UnsupportedError("closures over infinite products are not supported")
    if not isinstance(ring, (PolyRing, Integers, IntegersMod, PrimeField, Product)):
        raise UnsupportedError(f"closures over {ring}")
    F = _as_subgroup(S, ring, bound)
    _check_ring(W, F.ring)
    gen_degree = F.max_degree if isinstance(F, FpSubspace) else None
    steps = []
    iterations = 0
    limit = _iteration_limit(F)
    while True:
        G = f1_step(F, W)
        iterations += 1
        if trace:
            steps.append(G.to_json())
        if G == F:
            break
        F = G
        if iterations > limit:
            raise AssertionError("closure failed to stabilize within the ambient dimension")
    if isinstance(F, FpSubspace):
        # the graded degree bound: nothing above the generators' top degree
        if F.max_degree > gen_degree:
            raise AssertionError(f"closure left degree {gen_degree}: reached {F.max_degree}")
    return ClosureResult(
        F, iterations, True, F.ambient.d if isinstance(F, FpSubspace) else None, steps
    )


def _iteration_limit(F: SubgroupRep) -> int:
    if isinstance(F, FpSubspace):
        return F.ambient.dim + 1
    if isinstance(F, CyclicInt):
        return max(F.g, 1).bit_length() + 1
    if isinstance(F, CyclicMod):
        return F.n.bit_length() + 1
    return len(F.element_set()) + F.ring.size


def closure_int(g: int, W: MultSet) -> CyclicInt:
    """Closed form for ``[g]`` in ``Z``: strip every prime dividing a generator of ``W``."""
    if not isinstance(W.ring, Integers) or not hasattr(W, "gens"):
        raise UnsupportedError("closure_int needs a generated multiplicative set over Z")
    g = abs(g)
    if g == 0:
        return CyclicInt(0)
    for h in W.gens:
        q = math.gcd(g, abs(h))
        while q > 1:
            g //= q
            q = math.gcd(g, q)
    return CyclicInt(g)


# ---------------------------------------------------------------------------
# W(F), A(F) and colons


@dataclass
class WOfReport:
    ring: RingSpec
    subgroup: dict
    rule: str
    exceptional: list = field(default_factory=list)
    degree_bound: int | None = None
    member_degrees: list = field(default_factory=list)
    excluded_degrees: list = field(default_factory=list)
    mixed_degrees: list = field(default_factory=list)
    cofinite_rule: str | None = None
    members: list | None = None

    def is_member(self, a) -> bool:
        """Membership of any nonzero element, read off the report."""
        ring = self.ring
        a = ring.coerce(a)
        if isinstance(ring, PolyRing):
            if a.is_zero:
                return False
            if a.degree > self.degree_bound:
                return True
            rep = ring.format_element(ring.monic(a))
            for e in self.exceptional:
                if e["element"] == rep:
                    return e["member"]
            raise DegreeOverflowError(f"{rep} was not covered by the report")
        if isinstance(ring, Integers):
            n = self.subgroup["generator"]
            return a != 0 if n == 0 else math.gcd(a, n) == 1
        return ring.format_element(a) in self.members

    def to_json(self) -> dict:
        out = {
            "ring": str(self.ring),
            "subgroup": self.subgroup,
            "rule": self.rule,
        }
        if isinstance(self.ring, PolyRing):
            out.update(
                degree_bound=self.degree_bound,
                exceptional=self.exceptional,
                member_degrees=self.member_degrees,
                excluded_degrees=self.excluded_degrees,
                mixed_degrees=self.mixed_degrees,
                cofinite_rule=self.cofinite_rule,
            )
        if self.members is not None:
            out["members"] = self.members
        return out


def colon_contained(F: SubgroupRep, a) -> bool:
    """``(F : a) ⊆ F``."""
    ring = F.ring
    if ring.is_zero(ring.coerce(a)):
        return sp.is_subgroup_of(sp.whole(sp.ambient_of(F)), F) if ring.is_finite else False
    return sp.is_subgroup_of(sp.mul_preimage(F, a), F)


def w_of(F: SubgroupRep, max_degree: int | None = None) -> WOfReport:
    """``W(F) = {a : (F : a) ⊆ F}``."""
    ring = F.ring
    if isinstance(F, FpSubspace):
        return _w_of_poly(F, max_degree)
    if isinstance(F, CyclicInt):
        if F.g == 0:
            rule = "all nonzero"
        elif F.g == 1:
            rule = "all of Z"
        else:
            rule = f"{{g : gcd(g, {F.g}) = 1}}"
        return WOfReport(ring, F.to_json(), rule)
    if ring.is_finite:
        members = [a for a in ring.elements() if colon_contained(F, a)]
        fmt = ring.format_element
        return WOfReport(ring, F.to_json(), "explicit list", members=[fmt(a) for a in members])
    raise UnsupportedError(f"W(F) over {ring}")


def _w_of_poly(F: FpSubspace, max_degree: int | None) -> WOfReport:
    ring = F.ring
    d = F.ambient.d if max_degree is None else max_degree
    count = sum(ring.p ** len(monomials_up_to(ring.nvars, k)) for k in range(d + 1))
    if count > WOF_LIMIT:
        raise DomainError(f"W(F) report would list about {count} representatives; lower the degree")
    exceptional = []
    by_degree: dict[int, list[bool]] = {}
    for a in ring.monic_polys(0, d):
        member = colon_contained(F, a)
        exceptional.append({"element": ring.format_element(a), "degree": a.degree, "member": member})
        by_degree.setdefault(a.degree, []).append(member)
    full = [k for k, v in sorted(by_degree.items()) if all(v)]
    none = [k for k, v in sorted(by_degree.items()) if not any(v)]
    mixed = [k for k, v in sorted(by_degree.items()) if any(v) and not all(v)]
    if mixed:
        rule = f"degree-by-degree list up to {d}; all nonzero above {d}"
    elif none:
        rule = "all nonzero of degree " + ", ".join(f"!= {k}" for k in none)
    else:
        rule = "all nonzero"
    return WOfReport(
        ring,
        F.to_json(),
        rule,
        exceptional=exceptional,
        degree_bound=d,
        member_degrees=full,
        excluded_degrees=none,
        mixed_degrees=mixed,
        cofinite_rule=f"every nonzero element of degree > {d} is a member",
    )


@dataclass
class AOfReport:
    ring: RingSpec
    whole_ring: bool
    subring: SubgroupRep | None
    description: str

    def to_json(self):
        return {
            "ring": str(self.ring),
            "whole_ring": self.whole_ring,
            "subring": None if self.subring is None else self.subring.to_json(),
            "description": self.description,
        }


def a_of(F: SubgroupRep) -> AOfReport:
    """``A(F) = (F :_A F)``, the largest subring over which ``F`` is a module."""
    ring = F.ring
    if isinstance(F, FpSubspace):
        if not F.rows:
            return AOfReport(ring, True, None, "whole ring")
        A = sp.whole(F.ambient)
        for f in F.basis():
            A = sp.intersect(A, sp.mul_preimage(F, f))
        if A.max_degree == 0:
            desc = f"GF({ring.p})"
        else:
            desc = "span of " + ", ".join(ring.format_element(b) for b in A.basis())
        return AOfReport(ring, False, A, desc)
    if isinstance(F, (CyclicInt, CyclicMod)):
        # every subgroup of Z or Z/n is an ideal
        return AOfReport(ring, True, None, "whole ring")
    if ring.is_finite:
        elems = F.element_set()
        A = [a for a in ring.elements() if all(ring.mul(a, f) in elems for f in elems)]
        whole = len(A) == ring.size
        sub = sp.span(ring, A)
        return AOfReport(ring, whole, sub, "whole ring" if whole else "explicit subring")
    raise UnsupportedError(f"A(F) over {ring}")


def colon_by_set(F: SubgroupRep, T: Iterable) -> SubgroupRep:
    """``(F : T) = ∩_{t∈T} (F : t)``; the whole ambient for empty ``T``."""
    ring = F.ring
    out = sp.whole(sp.ambient_of(F))
    for t in T:
        t = ring.coerce(t)
        if ring.is_zero(t):
            continue
        out = sp.intersect(out, sp.mul_preimage(F, t))
    return out


def colon_into_ring(F: SubgroupRep, S: Iterable) -> SubgroupRep:
    """``(F :_A S) = {a : aS ⊆ F}`` with the module equal to the ring."""
    # a*s in F  <=>  a in (F : s), by commutativity
    return colon_by_set(F, S)


# ---------------------------------------------------------------------------
# transport along ring maps


def hom_preimage(h: RingHom, F: SubgroupRep, bound: int | None = None) -> SubgroupRep:
    """``h^{-1}(F)``; for polynomial sources truncated at degree ``bound``."""
    if isinstance(h, QuotientMap):
        if not isinstance(F, CyclicMod) or F.ring != h.target:
            raise RingMismatchError(f"expected a subgroup of {h.target}")
        return CyclicInt(F.g)
    if isinstance(h, (ProjectionLeft, ProjectionRight)):
        if F.ring != h.target:
            raise RingMismatchError(f"expected a subgroup of {h.target}")
        src = h.source
        if isinstance(h, ProjectionLeft):
            return PairProduct(src, F, _whole_of(src.right))
        return PairProduct(src, _whole_of(src.left), F)
    if isinstance(h, EvalVarToZero):
        return _eval_preimage(h, F, bound)
    if isinstance(h, Inclusion):
        return _inclusion_preimage(h, F, bound)
    raise UnsupportedError(f"preimage along {type(h).__name__}")


def _whole_of(ring: RingSpec) -> SubgroupRep:
    if isinstance(ring, PolyRing):
        raise UnsupportedError("a product factor that is a polynomial ring has no finite representation")
    return sp.whole(ring)


def _eval_preimage(h: EvalVarToZero, F: SubgroupRep, bound: int | None) -> FpSubspace:
    src = h.source
    if F.ring != h.target:
        raise RingMismatchError(f"expected a subgroup of {h.target}")
    if isinstance(F, FpSubspace):
        d = F.ambient.d if bound is None else bound
        lifted = [Inclusion(h.target, src)(b) for b in F.basis()]
    elif isinstance(F, CyclicMod):
        d = 0 if bound is None else bound
        lifted = [src.one()] if F.g == 1 else []
    else:
        raise UnsupportedError(f"preimage of {type(F).__name__}")
    amb = sp.ambient(src, d)
    i = h.index
    # kernel part: every monomial divisible by the evaluated variable
    kernel = [src.monomial(e) for e in amb.monomials if e[i] > 0]
    return sp.span(amb, [f for f in lifted if f.degree <= d] + kernel)


def _inclusion_preimage(h: Inclusion, F: SubgroupRep, bound: int | None) -> FpSubspace:
    if not isinstance(F, FpSubspace) or F.ring != h.target:
        raise RingMismatchError(f"expected a bounded subspace of {h.target}")
    d = F.ambient.d if bound is None else bound
    src_amb = sp.ambient(h.source, d)
    embedded = sp.span(F.ambient, [h(m) for m in map(h.source.monomial, src_amb.monomials) if m.degree <= F.ambient.d])
    meet = sp.intersect(F, embedded)
    back = {h(h.source.monomial(e)).leading[0]: e for e in src_amb.monomials}
    out = []
    for b in meet.basis():
        out.append(h.source.poly({back[e]: c for e, c in b.terms.items()}))
    return sp.span(src_amb, out)


__all__ = [
    "ClosureResult",
    "WOfReport",
    "AOfReport",
    "saturate",
    "f1_step",
    "closure",
    "closure_int",
    "is_factroid",
    "w_of",
    "a_of",
    "colon_by_set",
    "colon_into_ring",
    "colon_contained",
    "hom_preimage",
]
