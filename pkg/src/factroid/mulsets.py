"""Finitely described multiplicative subsets of the supported rings.

A multiplicative set never contains 0: such sets are rejected when built,
since for them the whole module is the only factroid.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

from sympy import isprime

from .errors import DomainError, ParseError, UnsupportedError
from .rings import (
    Integers,
    IntegersMod,
    Poly,
    PolyRing,
    Product,
    QuotientMap,
    RingHom,
    RingSpec,
    glex_key,
    monomials_up_to,
)


def is_regular(ring: RingSpec, a) -> bool:
    """True when ``a`` is a nonzerodivisor of ``ring``."""
    if isinstance(ring, Product):
        a = ring.coerce(a)
        return is_regular(ring.left, a[0]) and is_regular(ring.right, a[1])
    if isinstance(ring, IntegersMod):
        return math.gcd(ring.coerce(a), ring.n) == 1
    return not ring.is_zero(a)


def poly_sort_key(f: Poly) -> tuple:
    """Sort key reproducing the order of :meth:`PolyRing.monic_polys`."""
    if f.is_zero:
        return (-1,)
    lead, _ = f.leading
    lower = [m for m in monomials_up_to(f.ring.nvars, sum(lead)) if glex_key(m) < glex_key(lead)]
    return (sum(lead), glex_key(lead), tuple(f.terms.get(m, 0) for m in reversed(lower)))


class MultSet:
    """Base class; subclasses describe one kind of multiplicative subset."""

    kind = ""

    def __init__(self, ring: RingSpec):
        self.ring = ring

    def contains(self, w) -> bool:
        raise NotImplementedError

    def __contains__(self, w) -> bool:
        return self.contains(w)

    def contains_associate(self, m) -> bool:
        """Some unit multiple of ``m`` lies in the set (polynomial rings: scalars)."""
        if isinstance(self.ring, PolyRing):
            return any(self.contains(self.ring.scale(m, c)) for c in range(1, self.ring.p))
        return self.contains(m)

    def monic_members(self, dmin: int, dmax: int) -> Iterator[Poly]:
        """Monic polynomials of degree in ``[dmin, dmax]`` with an associate in the set."""
        self._need_poly()
        for w in self.ring.monic_polys(dmin, dmax):
            if self.contains_associate(w):
                yield w

    def members(self) -> list:
        """All members; finite rings only."""
        if not self.ring.is_finite:
            raise UnsupportedError(f"cannot list a multiplicative set of infinite {self.ring}")
        return [a for a in self.ring.elements() if self.contains(a)]

    def saturating_divisor(self, g: int) -> int:
        """For ``Z``: lcm over members ``w`` of ``gcd(g, w)``, with ``g != 0``."""
        raise UnsupportedError(f"{self.describe()} has no closed form over Z")

    def is_whole_reg(self) -> bool:
        return False

    def _need_poly(self):
        if not isinstance(self.ring, PolyRing):
            raise UnsupportedError(f"{self.describe()}: polynomial ring expected, got {self.ring}")

    def describe(self) -> str:
        return self.kind

    def __repr__(self):
        return f"MultSet({self.ring}, {self.describe()})"


class Reg(MultSet):
    """All nonzerodivisors."""

    kind = "reg"

    def contains(self, w):
        return is_regular(self.ring, w)

    def is_whole_reg(self):
        return True

    def monic_members(self, dmin, dmax):
        self._need_poly()
        return self.ring.monic_polys(dmin, dmax)

    def saturating_divisor(self, g):
        return abs(g)


class Units(MultSet):
    kind = "units"

    def contains(self, w):
        return self.ring.is_unit(w)

    def monic_members(self, dmin, dmax):
        self._need_poly()
        if dmin <= 0 <= dmax:
            yield self.ring.one()

    def saturating_divisor(self, g):
        return 1


class MonoidGen(MultSet):
    """The multiplicative monoid generated by a finite list of elements."""

    kind = "gen"

    def __init__(self, ring: RingSpec, gens):
        super().__init__(ring)
        self.gens = tuple(ring.coerce(g) for g in gens)
        if ring.is_finite:
            self._finite = self._generate_finite()
            if any(ring.is_zero(w) for w in self._finite):
                raise DomainError(f"monoid generated by {self.describe()} contains 0")
        else:
            self._finite = None
            if isinstance(ring, Product):
                left_zero = any(ring.left.is_zero(g[0]) for g in self.gens)
                right_zero = any(ring.right.is_zero(g[1]) for g in self.gens)
                if not (ring.left.is_domain and ring.right.is_domain):
                    raise UnsupportedError("monoids over infinite products need domain factors")
                if left_zero and right_zero:
                    raise DomainError(f"monoid generated by {self.describe()} contains 0")
            elif any(ring.is_zero(g) for g in self.gens):
                raise DomainError("0 cannot generate a multiplicative set")
        self._contains = lru_cache(maxsize=None)(self._contains_uncached)

    def _generate_finite(self) -> frozenset:
        seen = {self.ring.one()}
        frontier = [self.ring.one()]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.gens:
                    b = self.ring.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)

    def contains(self, w):
        w = self.ring.coerce(w)
        if self._finite is not None:
            return w in self._finite
        return self._contains(w)

    def _contains_uncached(self, w) -> bool:
        ring = self.ring
        if isinstance(ring, Integers):
            if -1 in self.gens and w < 0:
                w = -w
            if w == 1:
                return True
            if w == 0:
                return False
            return any(
                abs(g) >= 2 and w % g == 0 and self._contains(w // g) for g in self.gens
            )
        if isinstance(ring, PolyRing):
            if w.is_zero:
                return False
            if w.degree == 0:
                return w.terms[(0,) * ring.nvars] in self._constant_monoid()
            for g in self.gens:
                if g.degree >= 1:
                    q = ring.try_exact_divide(w, g)
                    if q is not None and self._contains(q):
                        return True
            return False
        raise UnsupportedError(f"monoid membership over {ring}")

    def _constant_monoid(self) -> set[int]:
        consts = [g.terms[(0,) * self.ring.nvars] for g in self.gens if g.degree == 0]
        seen = {1}
        frontier = [1]
        while frontier:
            nxt = []
            for a in frontier:
                for c in consts:
                    b = a * c % self.ring.p
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def members(self):
        if self._finite is None:
            raise UnsupportedError(f"cannot list a multiplicative set of infinite {self.ring}")
        return sorted(self._finite, key=repr)

    def monic_members(self, dmin, dmax):
        self._need_poly()
        ring = self.ring
        nonconst = [ring.monic(g) for g in self.gens if g.degree >= 1]
        found = {ring.one()}
        frontier = [ring.one()]
        while frontier:
            nxt = []
            for a in frontier:
                for g in nonconst:
                    if a.degree + g.degree <= dmax:
                        b = ring.mul(a, g)
                        if b not in found:
                            found.add(b)
                            nxt.append(b)
            frontier = nxt
        for w in sorted(found, key=poly_sort_key):
            if dmin <= w.degree <= dmax:
                yield w

    def saturating_divisor(self, g):
        if not isinstance(self.ring, Integers):
            return super().saturating_divisor(g)
        big = math.prod(abs(h) for h in self.gens) ** max(abs(g).bit_length(), 1)
        return math.gcd(g, big)

    def describe(self):
        return "gen:{" + ";".join(self.ring.format_element(g) for g in self.gens) + "}"


class EvenDegreeNonzero(MultSet):
    """Nonzero polynomials of even degree in a univariate polynomial ring."""

    kind = "evendeg"

    def __init__(self, ring: RingSpec):
        super().__init__(ring)
        if not isinstance(ring, PolyRing) or ring.nvars != 1:
            raise UnsupportedError("evendeg needs a univariate polynomial ring")

    def contains(self, w):
        w = self.ring.coerce(w)
        return not w.is_zero and w.degree % 2 == 0

    def monic_members(self, dmin, dmax):
        for w in self.ring.monic_polys(dmin, dmax):
            if w.degree % 2 == 0:
                yield w


class ComplementOfIdeals(MultSet):
    """Complement of a union of prime ideals ``(p1) u ... u (pk)`` of Z or Z/n."""

    kind = "compl"

    def __init__(self, ring: RingSpec, gens):
        super().__init__(ring)
        self.gens = tuple(ring.coerce(g) for g in gens)
        if isinstance(ring, Integers):
            for g in self.gens:
                if g != 0 and not isprime(abs(g)):
                    raise DomainError(f"({g}) is not a prime ideal of Z")
        elif isinstance(ring, IntegersMod):
            for g in self.gens:
                if not isprime(g) or ring.n % g:
                    raise DomainError(f"({g}) is not a prime ideal of Z/{ring.n}")
        else:
            raise UnsupportedError("complements of ideals are supported over Z and Z/n only")

    def contains(self, w):
        w = self.ring.coerce(w)
        if w == 0:
            return False
        return all(g == 0 or w % g != 0 for g in self.gens)

    def saturating_divisor(self, g):
        if not isinstance(self.ring, Integers):
            return super().saturating_divisor(g)
        part = abs(g)
        for q in self.gens:
            if q:
                while part % q == 0:
                    part //= abs(q)
        return part

    def describe(self):
        return "compl:{" + ";".join(str(g) for g in self.gens) + "}"


class ExplicitFinite(MultSet):
    """A finite, multiplicatively closed list of elements."""

    kind = "explicit"

    def __init__(self, ring: RingSpec, elems):
        super().__init__(ring)
        self.elems = tuple(dict.fromkeys(ring.coerce(e) for e in elems))
        if not self.elems:
            raise DomainError("explicit multiplicative set is empty")
        if any(ring.is_zero(e) for e in self.elems):
            raise DomainError("explicit multiplicative set contains 0")
        listed = set(self.elems)
        for a in self.elems:
            for b in self.elems:
                if ring.mul(a, b) not in listed:
                    raise DomainError(
                        f"explicit set is not multiplicatively closed: "
                        f"{ring.format_element(a)}*{ring.format_element(b)}"
                    )

    def contains(self, w):
        return self.ring.coerce(w) in set(self.elems)

    def members(self):
        return list(self.elems)

    def monic_members(self, dmin, dmax):
        self._need_poly()
        reps = {self.ring.monic(e) for e in self.elems}
        for w in sorted(reps, key=poly_sort_key):
            if dmin <= w.degree <= dmax:
                yield w

    def saturating_divisor(self, g):
        out = 1
        for w in self.elems:
            out = math.lcm(out, math.gcd(g, w))
        return out

    def describe(self):
        return "explicit:{" + ";".join(self.ring.format_element(e) for e in self.elems) + "}"


class Preimage(MultSet):
    """``h^{-1}(W)`` for a ring homomorphism ``h`` into the ring of ``W``."""

    kind = "preimage"

    def __init__(self, hom: RingHom, target_set: MultSet):
        super().__init__(hom.source)
        if hom.target != target_set.ring:
            raise DomainError("multiplicative set does not live in the target of the map")
        self.hom = hom
        self.target_set = target_set

    def contains(self, w):
        return self.target_set.contains(self.hom(w))

    def saturating_divisor(self, g):
        if not isinstance(self.hom, QuotientMap):
            return super().saturating_divisor(g)
        # membership is periodic mod n and gcd(g, w) is periodic mod g
        period = math.lcm(self.hom.n, abs(g))
        out = 1
        for w in range(-period, period + 1):
            if w and self.contains(w):
                out = math.lcm(out, math.gcd(g, w))
        return out

    def describe(self):
        return f"preimage({type(self.hom).__name__},{self.target_set.describe()})"


def _split_braced(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == ";" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_mulset(ring: RingSpec, text: str) -> MultSet:
    """Parse ``reg``, ``units``, ``evendeg``, ``gen:{..}``, ``explicit:{..}``, ``compl:{..}``."""
    s = text.strip()
    if s == "reg":
        return Reg(ring)
    if s == "units":
        return Units(ring)
    if s == "evendeg":
        return EvenDegreeNonzero(ring)
    for prefix, cls in (("gen:", MonoidGen), ("explicit:", ExplicitFinite), ("compl:", ComplementOfIdeals)):
        if s.startswith(prefix):
            body = s[len(prefix) :].strip()
            if not (body.startswith("{") and body.endswith("}")):
                raise ParseError(f"expected braces in {text!r}")
            elems = [ring.parse_element(t) for t in _split_braced(body[1:-1])]
            if cls is MonoidGen and not elems:
                raise DomainError("gen:{} needs at least one generator")
            return cls(ring, elems)
    raise ParseError(f"unknown multiplicative set {text!r}")


__all__ = [
    "MultSet",
    "Reg",
    "Units",
    "MonoidGen",
    "EvenDegreeNonzero",
    "ComplementOfIdeals",
    "ExplicitFinite",
    "Preimage",
    "is_regular",
    "parse_mulset",
    "poly_sort_key",
]
