"""Ring-level classification.

Euclidean factroid lists, the unit-additive and sublocalizable predicates,
sublocalizations, the truncated unit-additive chain, and the product
decomposition test for subgroups of finite product rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import subspace as sp
from .errors import DomainError, UnsupportedError
from .factroid import is_factroid
from .mulsets import Reg
from .rings import Integers, IntegersMod, PolyRing, PrimeField, Product, RingSpec
from .subspace import CyclicInt, PairExplicit, PairProduct, SubgroupRep

# largest ring scanned element by element
FINITE_SCAN_LIMIT = 1 << 12


def euclidean_factroids(ring: RingSpec, d: int = 0) -> list[SubgroupRep]:
    """The ``reg``-factroids of ``Z``, or those of ``GF(p)[x]`` inside degree <= d."""
    if isinstance(ring, Integers):
        return [CyclicInt(0), CyclicInt(1)]
    if isinstance(ring, PolyRing) and ring.nvars == 1:
        if d < 0:
            raise DomainError("degree bound must be >= 0")
        amb = sp.ambient(ring, d)
        x = ring.gens()[0]
        out = [sp.zero_subgroup(amb)]
        out += [sp.span(amb, [x**k for k in range(n + 1)]) for n in range(d + 1)]
        W = Reg(ring)
        for F in out:
            assert is_factroid(F, W), F
        return out
    raise UnsupportedError(f"{ring} is not Z or a univariate polynomial ring over GF(p)")


# ---------------------------------------------------------------------------
# unit-additive and sublocalizable rings


@dataclass
class ClassificationReport:
    ring: RingSpec
    predicates: dict = field(default_factory=dict)
    sublocalization: SubgroupRep | None = None
    counterexample: tuple | None = None
    jacobson_is_nilradical: bool | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        fmt = self.ring.format_element
        return {
            "ring": str(self.ring),
            "predicates": dict(sorted(self.predicates.items())),
            "sublocalization": None if self.sublocalization is None else self.sublocalization.to_json(),
            "counterexample": None if self.counterexample is None else [fmt(u) for u in self.counterexample],
            "jacobson_is_nilradical": self.jacobson_is_nilradical,
            "notes": self.notes,
        }


def _units(ring: RingSpec) -> list:
    if isinstance(ring, Product) and not ring.is_finite:
        raise UnsupportedError(f"the unit group of {ring} is not enumerated")
    if ring.is_finite and ring.size > FINITE_SCAN_LIMIT:
        raise UnsupportedError(f"{ring} is too large to scan")
    return list(ring.units())


def _first_failure(ring: RingSpec, ok) -> tuple | None:
    for u, v in combinations_with_replacement(_units(ring), 2):
        if not ok(ring.add(u, v)):
            return (u, v)
    return None


def unit_additive_check(ring: RingSpec) -> ClassificationReport:
    """Every sum of two units is a unit or nilpotent (exhaustive over unit pairs)."""
    bad = _first_failure(ring, lambda s: ring.is_unit(s) or ring.is_nilpotent(s))
    return ClassificationReport(ring, {"unit_additive": bad is None}, counterexample=bad)


def _in_b(ring: RingSpec, a) -> bool:
    return ring.is_unit(a) or ring.in_jacobson(a)


def sublocalizable_check(ring: RingSpec) -> ClassificationReport:
    """Every sum of two units is a unit or lies in the Jacobson radical.

    Also checks the equivalent form: units together with the radical are
    closed under subtraction and multiplication.
    """
    bad = _first_failure(ring, lambda s: _in_b(ring, s))
    closed = _b_is_subring(ring)
    if closed != (bad is None):
        raise AssertionError(f"{ring}: unit-pair scan and subring test disagree")
    report = ClassificationReport(ring, {"sublocalizable": bad is None}, counterexample=bad)
    if bad is None:
        report.sublocalization = sublocalization(ring)
    return report


def _b_is_subring(ring: RingSpec) -> bool:
    if ring.is_finite:
        B = [a for a in ring.elements() if _in_b(ring, a)]
    elif isinstance(ring, (PolyRing, Integers)):
        # J = 0, so the candidate is the units with 0
        B = [ring.zero()] + list(ring.units())
    else:
        raise UnsupportedError(f"radical of {ring}")
    return all(_in_b(ring, ring.sub(a, b)) and _in_b(ring, ring.mul(a, b)) for a in B for b in B)


def local_check(ring: RingSpec) -> bool:
    """Non-units form an ideal, i.e. every element is a unit or in the radical."""
    if ring.is_finite:
        return all(_in_b(ring, a) for a in ring.elements())
    if isinstance(ring, (PolyRing, Integers)):
        return False
    raise UnsupportedError(f"locality of {ring}")


def jacobson_is_nilradical(ring: RingSpec) -> bool:
    if ring.is_finite:
        return all(ring.in_jacobson(a) == ring.is_nilpotent(a) for a in ring.elements())
    if isinstance(ring, (PolyRing, Integers)):
        return True
    raise UnsupportedError(f"radicals of {ring}")


def sublocalization(ring: RingSpec) -> SubgroupRep:
    """The additive span of all products of units, checked to equal units ∪ J."""
    if not _b_is_subring(ring):
        raise DomainError(f"{ring} is not sublocalizable")
    units = _units(ring)
    if isinstance(ring, PolyRing):
        # products of nonzero constants are constants; their span is GF(p)
        return sp.span(sp.ambient(ring, 0), units)
    if isinstance(ring, (IntegersMod, PrimeField)) or (isinstance(ring, Product) and ring.is_finite):
        B = _additive_multiplicative_closure(ring, units)
        expected = {a for a in ring.elements() if _in_b(ring, a)}
        if B != expected:
            raise AssertionError(f"{ring}: span of unit products differs from units ∪ J")
        return sp.span(ring, B)
    raise UnsupportedError(f"sublocalization of {ring}")


def _additive_multiplicative_closure(ring: RingSpec, units: list) -> set:
    seen = {ring.one()}
    frontier = [ring.one()]
    while frontier:
        nxt = []
        for a in frontier:
            cands = [ring.mul(a, u) for u in units] + [ring.add(a, b) for b in list(seen)]
            for b in cands:
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def classify(ring: RingSpec) -> ClassificationReport:
    """All ring-level predicates in one report."""
    ua = unit_additive_check(ring)
    sl = sublocalizable_check(ring)
    jn = jacobson_is_nilradical(ring)
    if ua.predicates["unit_additive"] != (sl.predicates["sublocalizable"] and jn):
        raise AssertionError(f"{ring}: unit-additive does not match sublocalizable with J = nilradical")
    return ClassificationReport(
        ring,
        {
            "unit_additive": ua.predicates["unit_additive"],
            "sublocalizable": sl.predicates["sublocalizable"],
            "local": local_check(ring),
        },
        sublocalization=sl.sublocalization,
        counterexample=ua.counterexample or sl.counterexample,
        jacobson_is_nilradical=jn,
    )


# ---------------------------------------------------------------------------
# the unit-additive chain


@dataclass
class UAChain:
    ring: RingSpec
    bound: int
    levels: list
    stabilized: bool

    @property
    def final(self) -> frozenset:
        return self.levels[-1]["V"]

    def to_json(self) -> dict:
        fmt = self.ring.format_element

        def show(s):
            return sorted(fmt(a) for a in s)

        return {
            "ring": str(self.ring),
            "bound": self.bound,
            "stabilized": self.stabilized,
            "truncated": not self.stabilized,
            "levels": [
                {"W": None if lv["W"] is None else show(lv["W"]), "V": show(lv["V"])} for lv in self.levels
            ],
        }


def ua_chain(ring: RingSpec, depth: int, bound: int) -> UAChain:
    """``V_0 = units``; ``W_i`` = nonzero sums from ``V_{i-1}``; ``V_i`` = reg-saturation of ``W_i``.

    Everything is truncated: absolute value <= bound over ``Z``, degree <=
    bound over polynomial rings.
    """
    if depth < 0:
        raise DomainError("depth must be >= 0")
    if bound < 0:
        raise DomainError("bound must be >= 0")
    if isinstance(ring, Integers):
        sums, saturate = _int_sums, _int_saturate
    elif isinstance(ring, PolyRing):
        sums, saturate = _poly_sums, _poly_saturate
    else:
        raise UnsupportedError(f"the chain is computed over Z and GF(p)[vars], not {ring}")
    V = frozenset(ring.units())
    levels = [{"W": None, "V": V}]
    stabilized = False
    for _ in range(depth):
        Wi = sums(ring, V, bound)
        Vi = saturate(ring, Wi, bound)
        levels.append({"W": Wi, "V": Vi})
        if Vi == V:
            stabilized = True
            break
        V = Vi
    return UAChain(ring, bound, levels, stabilized)


def _int_sums(ring, V, bound) -> frozenset:
    # finite sums whose partial sums stay within the bound
    seen = set(V)
    frontier = list(V)
    while frontier:
        nxt = []
        for a in frontier:
            for v in V:
                b = a + v
                if abs(b) <= bound and b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(a for a in seen if a != 0)


def _int_saturate(ring, Wi, bound) -> frozenset:
    out = set()
    for w in Wi:
        for q in range(1, abs(w) + 1):
            if w % q == 0:
                out.update((q, -q))
    return frozenset(a for a in out if abs(a) <= bound)


def _poly_sums(ring: PolyRing, V, bound) -> frozenset:
    # in characteristic p the additive monoid generated is the F_p-span
    amb = sp.ambient(ring, bound)
    S = sp.span(amb, [v for v in V if v.degree <= bound])
    if S.size > sp.PAIR_EXPLICIT_CAP:
        raise UnsupportedError("chain level too large to list; lower the bound")
    return frozenset(a for a in S.elements() if not a.is_zero)


def _poly_saturate(ring: PolyRing, Wi, bound) -> frozenset:
    out = set()
    for w in Wi:
        for m in ring.monic_polys(0, min(w.degree, bound)):
            if ring.try_exact_divide(w, m) is not None:
                out.update(ring.scale(m, c) for c in range(1, ring.p))
    return frozenset(out)


# ---------------------------------------------------------------------------
# product rings


@dataclass
class ProductVerdict:
    ring: Product
    is_product: bool
    left: SubgroupRep
    right: SubgroupRep

    def to_json(self):
        return {
            "ring": str(self.ring),
            "is_product": self.is_product,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


def product_structure(F: SubgroupRep) -> ProductVerdict:
    """Whether ``F`` equals ``pi_1(F) x pi_2(F)``."""
    ring = F.ring
    if not isinstance(ring, Product) or not ring.is_finite:
        raise UnsupportedError("product decomposition needs a finite product ring")
    if isinstance(F, PairProduct):
        return ProductVerdict(ring, True, F.left, F.right)
    elems = F.element_set()
    left = sp.span(ring.left, {a for a, _ in elems})
    right = sp.span(ring.right, {b for _, b in elems})
    is_prod = len(elems) == len(left.element_set()) * len(right.element_set())
    return ProductVerdict(ring, is_prod, left, right)


__all__ = [
    "ClassificationReport",
    "UAChain",
    "ProductVerdict",
    "euclidean_factroids",
    "unit_additive_check",
    "sublocalizable_check",
    "sublocalization",
    "local_check",
    "jacobson_is_nilradical",
    "classify",
    "ua_chain",
    "product_structure",
]
