"""Canonical representations of additive subgroups.

* :class:`FpSubspace` -- an F_p-subspace of the polynomials of degree <= d,
  stored as the unique reduced row echelon basis.  Columns are monomials in
  descending graded-lex order, so each row's pivot is its leading monomial.
* :class:`CyclicInt` -- ``gZ`` inside ``Z``.
* :class:`CyclicMod` -- ``gZ/nZ`` inside ``Z/n`` (or inside ``GF(p)``).
* :class:`PairExplicit` -- a subgroup of a finite product ring, as a set.
* :class:`PairProduct` -- ``F x G`` for subgroups of the two factors.

Every additive subgroup of an F_p-vector space is an F_p-subspace, so the
echelon form loses nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as cartesian
from typing import Iterable, Iterator

from . import linalg
from .errors import BudgetError, DegreeOverflowError, DomainError, RingMismatchError, UnsupportedError
from .rings import (
    Integers,
    IntegersMod,
    Poly,
    PolyRing,
    PrimeField,
    Product,
    RingSpec,
    monomials_up_to,
)

PAIR_EXPLICIT_CAP = 4096

MEMBER = "member"
NON_MEMBER = "non-member"
OUTSIDE_AMBIENT = "outside-ambient"


# ---------------------------------------------------------------------------
# ambient spaces


@dataclass(frozen=True)
class AmbientSpace:
    """Polynomials of total degree <= ``d`` in ``ring``."""

    ring: PolyRing
    d: int

    def __post_init__(self):
        if not isinstance(self.ring, PolyRing):
            raise UnsupportedError(f"ambient spaces are for polynomial rings, not {self.ring}")
        if self.d < 0:
            raise DomainError("degree bound must be >= 0")

    @property
    def p(self) -> int:
        return self.ring.p

    @cached_property
    def monomials(self) -> tuple:
        return tuple(reversed(monomials_up_to(self.ring.nvars, self.d)))

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def vector(self, f) -> tuple[int, ...]:
        f = self.ring.coerce(f)
        if f.degree > self.d:
            raise DegreeOverflowError(f"{f} has degree {f.degree} > bound {self.d}")
        v = [0] * self.dim
        for e, c in f.terms.items():
            v[self.index[e]] = c
        return tuple(v)

    def poly(self, v) -> Poly:
        return self.ring.poly({e: c for e, c in zip(self.monomials, v) if c})

    def times_monomials(self, w: Poly, k: int) -> list[tuple[int, ...]]:
        """Coordinates of ``w * m`` for each monomial ``m`` of degree <= k."""
        rows = []
        for m in reversed(monomials_up_to(self.ring.nvars, k)):
            v = [0] * self.dim
            for e, c in w.terms.items():
                v[self.index[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(tuple(v))
        return rows

    def describe(self) -> dict:
        return {"ring": str(self.ring), "degree_bound": self.d}


@lru_cache(maxsize=None)
def ambient(ring: PolyRing, d: int) -> AmbientSpace:
    return AmbientSpace(ring, d)


# ---------------------------------------------------------------------------
# representations


class SubgroupRep:
    ring: RingSpec

    def contains(self, x) -> bool:
        raise NotImplementedError

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def membership(self, x) -> str:
        return MEMBER if self.contains(x) else NON_MEMBER

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> Iterator:
        raise NotImplementedError

    def element_set(self) -> frozenset:
        return frozenset(self.elements())

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class FpSubspace(SubgroupRep):
    ambient: AmbientSpace
    rows: tuple[tuple[int, ...], ...]

    @property
    def ring(self) -> PolyRing:
        return self.ambient.ring

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, c in enumerate(r) if c) for r in self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return self.ambient.p ** self.dim

    @property
    def max_degree(self):
        """Largest degree of an element (``-inf`` for the zero subspace)."""
        if not self.rows:
            return float("-inf")
        return sum(self.ambient.monomials[self.pivots[0]])

    def basis(self) -> list[Poly]:
        return [self.ambient.poly(r) for r in self.rows]

    def _reduce(self, v) -> tuple[int, ...]:
        return linalg.reduce(v, self.rows, self.pivots, self.ambient.p)

    def membership(self, x) -> str:
        x = self.ring.coerce(x)
        if x.degree > self.ambient.d:
            return OUTSIDE_AMBIENT
        return MEMBER if not any(self._reduce(self.ambient.vector(x))) else NON_MEMBER

    def contains(self, x) -> bool:
        verdict = self.membership(x)
        if verdict == OUTSIDE_AMBIENT:
            raise DegreeOverflowError(f"{x} lies above the degree bound {self.ambient.d}")
        return verdict == MEMBER

    def is_subspace_of(self, other: "FpSubspace") -> bool:
        _same_ambient(self, other)
        return all(not any(other._reduce(r)) for r in self.rows)

    def elements(self) -> Iterator[Poly]:
        p = self.ambient.p
        n = self.ambient.dim
        for coeffs in cartesian(range(p), repeat=self.dim):
            v = [0] * n
            for c, r in zip(coeffs, self.rows):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, r)]
            yield self.ambient.poly(v)

    def reembed(self, d: int) -> "FpSubspace":
        """The same subspace viewed inside the degree-``d`` ambient space."""
        if d < self.max_degree:
            raise DegreeOverflowError(f"subspace has elements of degree {self.max_degree} > {d}")
        return span(ambient(self.ring, d), self.basis())

    def to_json(self) -> dict:
        fmt = self.ring.format_element
        return {
            "kind": "fp_subspace",
            **self.ambient.describe(),
            "monomials": [fmt(self.ring.monomial(e)) for e in self.ambient.monomials],
            "rows": [list(r) for r in self.rows],
            "basis": [fmt(b) for b in self.basis()],
            "dim": self.dim,
        }


@dataclass(frozen=True)
class CyclicInt(SubgroupRep):
    """``gZ`` with ``g >= 0``."""

    g: int

    def __post_init__(self):
        if self.g < 0:
            object.__setattr__(self, "g", -self.g)

    @property
    def ring(self) -> Integers:
        return Integers()

    @property
    def is_finite(self) -> bool:
        return self.g == 0

    def contains(self, x) -> bool:
        x = Integers().coerce(x)
        return x == 0 if self.g == 0 else x % self.g == 0

    def elements(self):
        if self.g:
            raise UnsupportedError(f"{self.g}Z is infinite; use its generator instead")
        return iter([0])

    def to_json(self):
        return {"kind": "cyclic_int", "ring": "Z", "generator": self.g}


@dataclass(frozen=True)
class CyclicMod(SubgroupRep):
    """``gZ/nZ`` with ``g | n``; ``g == n`` is the zero subgroup."""

    ring: RingSpec
    g: int

    def __post_init__(self):
        n = modulus(self.ring)
        object.__setattr__(self, "g", math.gcd(self.g, n))

    @property
    def n(self) -> int:
        return modulus(self.ring)

    @property
    def size(self) -> int:
        return self.n // self.g

    def contains(self, x) -> bool:
        return self.ring.coerce(x) % self.g == 0

    def elements(self):
        return iter(range(0, self.n, self.g))

    def to_json(self):
        return {"kind": "cyclic_mod", "ring": str(self.ring), "generator": self.g}


def modulus(ring: RingSpec) -> int:
    if isinstance(ring, IntegersMod):
        return ring.n
    if isinstance(ring, PrimeField):
        return ring.p
    raise UnsupportedError(f"{ring} is not Z/n or a prime field")


@dataclass(frozen=True)
class PairExplicit(SubgroupRep):
    """A subgroup of a finite product ring, listed element by element."""

    ring: Product
    elems: frozenset

    def __post_init__(self):
        if len(self.elems) > PAIR_EXPLICIT_CAP:
            raise BudgetError(f"explicit subgroup exceeds {PAIR_EXPLICIT_CAP} elements")

    def contains(self, x):
        return self.ring.coerce(x) in self.elems

    def elements(self):
        return iter(sorted(self.elems))

    def element_set(self):
        return self.elems

    @property
    def size(self):
        return len(self.elems)

    def __eq__(self, other):
        if isinstance(other, (PairExplicit, PairProduct)) and other.is_finite:
            return self.ring == other.ring and self.elems == other.element_set()
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.elems))

    def to_json(self):
        fmt = self.ring.format_element
        return {"kind": "pair_explicit", "ring": str(self.ring), "elements": [fmt(e) for e in sorted(self.elems)]}


@dataclass(frozen=True, eq=False)
class PairProduct(SubgroupRep):
    """``left x right`` inside a product ring."""

    ring: Product
    left: SubgroupRep
    right: SubgroupRep

    @property
    def is_finite(self):
        return self.left.is_finite and self.right.is_finite

    def contains(self, x):
        x = self.ring.coerce(x)
        return self.left.contains(x[0]) and self.right.contains(x[1])

    def elements(self):
        return cartesian(list(self.left.elements()), list(self.right.elements()))

    def __eq__(self, other):
        if isinstance(other, PairProduct):
            return (self.ring, self.left, self.right) == (other.ring, other.left, other.right)
        if isinstance(other, PairExplicit) and self.is_finite:
            return self.ring == other.ring and self.element_set() == other.elems
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.left, self.right))

    def to_json(self):
        return {"kind": "pair_product", "ring": str(self.ring), "left": self.left.to_json(), "right": self.right.to_json()}


# ---------------------------------------------------------------------------
# construction


def _same_ambient(F: FpSubspace, G: FpSubspace):
    if F.ambient != G.ambient:
        raise RingMismatchError(f"ambient mismatch: {F.ambient} vs {G.ambient}")


def from_vectors(amb: AmbientSpace, vectors: Iterable) -> FpSubspace:
    rows, _ = linalg.rref(list(vectors), amb.p)
    return FpSubspace(amb, tuple(rows))


def span(space, gens: Iterable) -> SubgroupRep:
    """Additive subgroup generated by ``gens``.

    ``space`` is an :class:`AmbientSpace` for polynomial rings and the ring
    itself otherwise.
    """
    gens = list(gens)
    if isinstance(space, AmbientSpace):
        return from_vectors(space, [space.vector(g) for g in gens])
    ring = space
    if isinstance(ring, Integers):
        g = 0
        for a in gens:
            g = math.gcd(g, ring.coerce(a))
        return CyclicInt(g)
    if isinstance(ring, (IntegersMod, PrimeField)):
        g = modulus(ring)
        for a in gens:
            g = math.gcd(g, ring.coerce(a))
        return CyclicMod(ring, g)
    if isinstance(ring, Product) and ring.is_finite:
        return PairExplicit(ring, _additive_closure(ring, gens))
    if isinstance(ring, PolyRing):
        raise UnsupportedError("polynomial subgroups need an AmbientSpace with a degree bound")
    raise UnsupportedError(f"subgroups of {ring}")


def _additive_closure(ring: RingSpec, gens) -> frozenset:
    elems = {ring.zero()}
    gens = [ring.coerce(g) for g in gens]
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = ring.add(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
                    if len(elems) > PAIR_EXPLICIT_CAP:
                        raise BudgetError(f"explicit subgroup exceeds {PAIR_EXPLICIT_CAP} elements")
        frontier = nxt
    return frozenset(elems)


def zero_subgroup(space) -> SubgroupRep:
    return span(space, [])


def whole(space) -> SubgroupRep:
    """The whole ambient: the degree-bounded space, or the whole finite ring, or Z."""
    if isinstance(space, AmbientSpace):
        return FpSubspace(space, tuple(tuple(int(i == j) for j in range(space.dim)) for i in range(space.dim)))
    if isinstance(space, Integers):
        return CyclicInt(1)
    if isinstance(space, (IntegersMod, PrimeField)):
        return CyclicMod(space, 1)
    if isinstance(space, Product) and space.is_finite:
        return PairExplicit(space, frozenset(space.elements()))
    raise UnsupportedError(f"whole ambient of {space}")


def ambient_of(F: SubgroupRep):
    return F.ambient if isinstance(F, FpSubspace) else F.ring


# ---------------------------------------------------------------------------
# operations


def contains(F: SubgroupRep, x) -> bool:
    return F.contains(x)


def membership(F: SubgroupRep, x) -> str:
    return F.membership(x)


def dim(F: SubgroupRep) -> int:
    if isinstance(F, FpSubspace):
        return F.dim
    if isinstance(F, CyclicMod) and isinstance(F.ring, PrimeField):
        return 0 if F.g == F.n else 1
    raise UnsupportedError("dimension is defined for F_p-subspaces only")


def elements(F: SubgroupRep) -> Iterator:
    return F.elements()


def subgroup_sum(F: SubgroupRep, G: SubgroupRep) -> SubgroupRep:
    if isinstance(F, FpSubspace) and isinstance(G, FpSubspace):
        _same_ambient(F, G)
        return from_vectors(F.ambient, F.rows + G.rows)
    if isinstance(F, CyclicInt) and isinstance(G, CyclicInt):
        return CyclicInt(math.gcd(F.g, G.g))
    if isinstance(F, CyclicMod) and isinstance(G, CyclicMod) and F.ring == G.ring:
        return CyclicMod(F.ring, math.gcd(F.g, G.g))
    if isinstance(F, PairProduct) and isinstance(G, PairProduct) and F.ring == G.ring:
        return PairProduct(F.ring, subgroup_sum(F.left, G.left), subgroup_sum(F.right, G.right))
    if _finite_pair(F) and _finite_pair(G) and F.ring == G.ring:
        return PairExplicit(F.ring, _additive_closure(F.ring, list(F.element_set() | G.element_set())))
    raise RingMismatchError("cannot add subgroups of different ambients")


def intersect(F: SubgroupRep, G: SubgroupRep) -> SubgroupRep:
    if isinstance(F, FpSubspace) and isinstance(G, FpSubspace):
        _same_ambient(F, G)
        if not F.rows or not G.rows:
            return zero_subgroup(F.ambient)
        # (a, b) with a.F = -b.G; the vectors a.F span the intersection
        null = linalg.left_nullspace(F.rows + G.rows, F.ambient.p)
        p, k = F.ambient.p, F.dim
        vecs = []
        for y in null:
            v = [0] * F.ambient.dim
            for c, r in zip(y[:k], F.rows):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, r)]
            vecs.append(v)
        return from_vectors(F.ambient, vecs)
    if isinstance(F, CyclicInt) and isinstance(G, CyclicInt):
        return CyclicInt(math.lcm(F.g, G.g))
    if isinstance(F, CyclicMod) and isinstance(G, CyclicMod) and F.ring == G.ring:
        return CyclicMod(F.ring, math.lcm(F.g, G.g))
    if isinstance(F, PairProduct) and isinstance(G, PairProduct) and F.ring == G.ring:
        return PairProduct(F.ring, intersect(F.left, G.left), intersect(F.right, G.right))
    if _finite_pair(F) and _finite_pair(G) and F.ring == G.ring:
        return PairExplicit(F.ring, F.element_set() & G.element_set())
    raise RingMismatchError("cannot intersect subgroups of different ambients")


def _finite_pair(F) -> bool:
    return isinstance(F, (PairExplicit, PairProduct)) and F.is_finite


def is_subgroup_of(F: SubgroupRep, G: SubgroupRep) -> bool:
    if isinstance(F, FpSubspace) and isinstance(G, FpSubspace):
        return F.is_subspace_of(G)
    if isinstance(F, CyclicInt) and isinstance(G, CyclicInt):
        return G.contains(F.g)
    if isinstance(F, CyclicMod) and isinstance(G, CyclicMod):
        return G.contains(F.g % F.n)
    if isinstance(F, PairProduct) and isinstance(G, PairProduct):
        return is_subgroup_of(F.left, G.left) and is_subgroup_of(F.right, G.right)
    return F.element_set() <= G.element_set()


def mul_preimage(F: SubgroupRep, w) -> SubgroupRep:
    """``(F : w) = {x : w*x in F}`` (inside the ambient of ``F``)."""
    ring = F.ring
    w = ring.coerce(w)
    if ring.is_zero(w):
        raise DomainError("colon by 0 is the whole module; pass a nonzero element")
    if isinstance(F, FpSubspace):
        return _poly_preimage(F, w)
    if isinstance(F, CyclicInt):
        return CyclicInt(F.g // math.gcd(F.g, w)) if F.g else CyclicInt(0)
    if isinstance(F, CyclicMod):
        return CyclicMod(F.ring, F.g // math.gcd(F.g, w))
    if _finite_pair(F):
        sols = set()
        for s in F.element_set():
            sols |= ring.solve_linear(w, s)
        return PairExplicit(ring, frozenset(sols))
    raise UnsupportedError(f"colon in {ring}")


def _poly_preimage(F: FpSubspace, w: Poly) -> FpSubspace:
    amb = F.ambient
    k = amb.d - w.degree
    if k < 0:
        return zero_subgroup(amb)
    src = amb.times_monomials(w, k)
    if not F.rows:
        return zero_subgroup(amb)
    null = linalg.left_nullspace(src + list(F.rows), amb.p)
    shift = amb.dim - len(src)
    vecs = [(0,) * shift + y[: len(src)] for y in null]
    return from_vectors(amb, vecs)


def meets_multiples(F: FpSubspace, x: Poly) -> bool:
    """True when some nonzero multiple of ``x`` lies in ``F``."""
    amb = F.ambient
    k = amb.d - x.degree
    if k < 0 or not F.rows:
        return False
    mult = amb.times_monomials(x, k)
    return linalg.rank(list(F.rows) + mult, amb.p) < F.dim + len(mult)


def to_json(F: SubgroupRep) -> dict:
    return F.to_json()


__all__ = [
    "AmbientSpace",
    "ambient",
    "SubgroupRep",
    "FpSubspace",
    "CyclicInt",
    "CyclicMod",
    "PairExplicit",
    "PairProduct",
    "span",
    "contains",
    "membership",
    "dim",
    "elements",
    "subgroup_sum",
    "intersect",
    "is_subgroup_of",
    "mul_preimage",
    "meets_multiples",
    "whole",
    "zero_subgroup",
    "to_json",
    "MEMBER",
    "NON_MEMBER",
    "OUTSIDE_AMBIENT",
]
