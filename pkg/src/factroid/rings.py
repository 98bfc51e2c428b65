"""Exact arithmetic for the supported commutative rings.

The roster is deliberately small: the integers, ``Z/n``, prime fields,
polynomial rings in at most four variables over a prime field, and pairs
of these.  Elements use plain Python values wherever possible:

* ``Z``, ``Z/n`` and ``GF(p)`` elements are ``int`` (residues in ``[0, n)``),
* polynomial elements are :class:`Poly`,
* product elements are 2-tuples.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Iterator

from sympy import factorint, isprime

from .errors import DomainError, ParseError, RingMismatchError, UnsupportedError

NEG_INF = float("-inf")

Monomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# monomials


def glex_key(e: Monomial) -> tuple[int, Monomial]:
    return (sum(e), e)


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, k: int) -> tuple[Monomial, ...]:
    """Monomials of total degree exactly ``k``, ascending in graded-lex order."""
    if nvars == 1:
        return ((k,),)
    out = []
    for first in range(k + 1):
        for rest in monomials_of_degree(nvars - 1, k - first):
            out.append((first,) + rest)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def monomials_up_to(nvars: int, d: int) -> tuple[Monomial, ...]:
    """Monomials of total degree at most ``d``, ascending in graded-lex order."""
    out: list[Monomial] = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(nvars, k))
    return tuple(out)


def radical(n: int) -> int:
    return math.prod(factorint(n)) if n > 1 else 1


# ---------------------------------------------------------------------------
# rings


class RingSpec:
    """Common interface of every supported ring."""

    is_domain = False
    is_finite = False

    # arithmetic ----------------------------------------------------------
    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, a):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return self.coerce(a) == self.coerce(b)

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("negative exponent")
        result, base = self.one(), self.coerce(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def prod(self, items: Iterable):
        out = self.one()
        for a in items:
            out = self.mul(out, a)
        return out

    # structure -----------------------------------------------------------
    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def is_nilpotent(self, a) -> bool:
        raise NotImplementedError

    def in_jacobson(self, a) -> bool:
        raise NotImplementedError

    def jacobson_radical(self) -> tuple:
        """Generators of the Jacobson radical as an ideal."""
        raise NotImplementedError

    def units(self) -> list:
        raise UnsupportedError(f"{self} has an infinite unit group")

    def elements(self) -> Iterator:
        raise UnsupportedError(f"{self} is infinite")

    @property
    def size(self) -> int:
        raise UnsupportedError(f"{self} is infinite")

    def try_exact_divide(self, a, b):
        raise NotImplementedError

    def solve_linear(self, b, a, bound: int | None = None) -> set:
        """All ``x`` with ``b*x == a``."""
        raise NotImplementedError

    def degree(self, a, euclidean: bool = False):
        raise UnsupportedError(f"{self} is not graded")

    # text ----------------------------------------------------------------
    def parse_element(self, text: str):
        return _ElementParser(text).parse(self)

    def format_element(self, a) -> str:
        return str(self.coerce(a))

    def __str__(self) -> str:
        return self.describe()

    def describe(self) -> str:
        raise NotImplementedError


def _check_int(a) -> int:
    if isinstance(a, bool) or not isinstance(a, int):
        raise RingMismatchError(f"expected an integer element, got {a!r}")
    return a


@dataclass(frozen=True)
class Integers(RingSpec):
    is_domain = True

    def describe(self) -> str:
        return "Z"

    def from_int(self, n):
        return _check_int(n)

    def coerce(self, a):
        return _check_int(a)

    def add(self, a, b):
        return _check_int(a) + _check_int(b)

    def neg(self, a):
        return -_check_int(a)

    def mul(self, a, b):
        return _check_int(a) * _check_int(b)

    def is_unit(self, a):
        return abs(_check_int(a)) == 1

    def is_nilpotent(self, a):
        return _check_int(a) == 0

    def in_jacobson(self, a):
        return _check_int(a) == 0

    def jacobson_radical(self):
        return (0,)

    def units(self):
        return [1, -1]

    def try_exact_divide(self, a, b):
        a, b = _check_int(a), _check_int(b)
        if b == 0:
            raise DomainError("division by zero in Z")
        q, r = divmod(a, b)
        return q if r == 0 else None

    def solve_linear(self, b, a, bound=None):
        a, b = _check_int(a), _check_int(b)
        if b == 0:
            if a != 0:
                return set()
            if bound is None:
                raise DomainError("0*x = 0 has infinitely many solutions in Z; give a bound")
            return set(range(-bound, bound + 1))
        q = self.try_exact_divide(a, b)
        return set() if q is None else {q}

    def degree(self, a, euclidean=False):
        if not euclidean:
            raise UnsupportedError("Z is not graded; pass euclidean=True for |a|")
        a = _check_int(a)
        return NEG_INF if a == 0 else abs(a)


@dataclass(frozen=True)
class IntegersMod(RingSpec):
    n: int
    is_finite = True

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"Z/n needs n >= 2, got {self.n}")

    def describe(self):
        return f"Z/{self.n}"

    def from_int(self, n):
        return _check_int(n) % self.n

    def coerce(self, a):
        a = _check_int(a)
        if not 0 <= a < self.n:
            raise RingMismatchError(f"{a} is not a reduced residue mod {self.n}")
        return a

    def add(self, a, b):
        return (self.coerce(a) + self.coerce(b)) % self.n

    def neg(self, a):
        return (-self.coerce(a)) % self.n

    def mul(self, a, b):
        return (self.coerce(a) * self.coerce(b)) % self.n

    def is_unit(self, a):
        return math.gcd(self.coerce(a), self.n) == 1

    def is_nilpotent(self, a):
        return self.coerce(a) % radical(self.n) == 0

    def in_jacobson(self, a):
        return self.is_nilpotent(a)

    def jacobson_radical(self):
        # Z/n is Artinian, so J equals the nilradical: generated by rad(n).
        return (radical(self.n) % self.n,)

    def units(self):
        return [a for a in range(self.n) if math.gcd(a, self.n) == 1]

    def elements(self):
        return iter(range(self.n))

    @property
    def size(self):
        return self.n

    def try_exact_divide(self, a, b):
        sols = self.solve_linear(b, a)
        return next(iter(sols)) if len(sols) == 1 else None

    def solve_linear(self, b, a, bound=None):
        a, b, n = self.coerce(a), self.coerce(b), self.n
        g = math.gcd(b, n)
        if a % g:
            return set()
        m = n // g
        x0 = (a // g) * pow(b // g, -1, m) % m if m > 1 else 0
        return {x0 + k * m for k in range(g)}


@dataclass(frozen=True)
class PrimeField(RingSpec):
    p: int
    is_domain = True
    is_finite = True

    def __post_init__(self):
        if not isprime(self.p):
            raise DomainError(f"GF({self.p}): {self.p} is not prime")

    def describe(self):
        return f"GF({self.p})"

    def from_int(self, n):
        return _check_int(n) % self.p

    def coerce(self, a):
        a = _check_int(a)
        if not 0 <= a < self.p:
            raise RingMismatchError(f"{a} is not a reduced element of GF({self.p})")
        return a

    def add(self, a, b):
        return (self.coerce(a) + self.coerce(b)) % self.p

    def neg(self, a):
        return (-self.coerce(a)) % self.p

    def mul(self, a, b):
        return (self.coerce(a) * self.coerce(b)) % self.p

    def inv(self, a):
        a = self.coerce(a)
        if a == 0:
            raise DomainError("division by zero in a field")
        return pow(a, -1, self.p)

    def is_unit(self, a):
        return self.coerce(a) != 0

    def is_nilpotent(self, a):
        return self.coerce(a) == 0

    def in_jacobson(self, a):
        return self.coerce(a) == 0

    def jacobson_radical(self):
        return (0,)

    def units(self):
        return list(range(1, self.p))

    def elements(self):
        return iter(range(self.p))

    @property
    def size(self):
        return self.p

    def try_exact_divide(self, a, b):
        return self.mul(a, self.inv(b))

    def solve_linear(self, b, a, bound=None):
        a, b = self.coerce(a), self.coerce(b)
        if b == 0:
            return set(range(self.p)) if a == 0 else set()
        return {self.mul(a, self.inv(b))}

    def degree(self, a, euclidean=False):
        return NEG_INF if self.coerce(a) == 0 else 0


@dataclass(frozen=True)
class PolyRing(RingSpec):
    """``GF(p)[v1, ..., vk]`` with graded-lex order, variables in declaration order."""

    p: int
    variables: tuple[str, ...]
    is_domain = True

    def __post_init__(self):
        if not isprime(self.p):
            raise DomainError(f"GF({self.p}): {self.p} is not prime")
        if not 1 <= len(self.variables) <= 4:
            raise DomainError("polynomial rings take between 1 and 4 variables")
        if len(set(self.variables)) != len(self.variables):
            raise DomainError("repeated variable name")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def describe(self):
        return f"GF({self.p})[{','.join(self.variables)}]"

    # construction ------------------------------------------------------------
    def poly(self, terms: dict[Monomial, int]) -> "Poly":
        clean = {}
        for e, c in terms.items():
            c %= self.p
            if c:
                clean[e] = c
        return Poly(self, clean)

    def monomial(self, e: Monomial, c: int = 1) -> "Poly":
        return self.poly({tuple(e): c})

    def var(self, name: str) -> "Poly":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r} for {self}") from None
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(tuple(e))

    def gens(self) -> list["Poly"]:
        return [self.var(v) for v in self.variables]

    def from_int(self, n):
        return self.poly({(0,) * self.nvars: _check_int(n)})

    def coerce(self, a):
        if isinstance(a, Poly):
            if a.ring != self:
                raise RingMismatchError(f"element of {a.ring} used in {self}")
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return self.from_int(a)
        raise RingMismatchError(f"{a!r} is not an element of {self}")

    # arithmetic --------------------------------------------------------------
    def add(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return self.poly(out)

    def neg(self, a):
        a = self.coerce(a)
        return self.poly({e: -c for e, c in a.terms.items()})

    def scale(self, a, c: int):
        a = self.coerce(a)
        return self.poly({e: c * v for e, v in a.terms.items()})

    def mul(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        out: dict[Monomial, int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self.poly(out)

    def is_unit(self, a):
        a = self.coerce(a)
        return a.degree == 0

    def is_nilpotent(self, a):
        return self.coerce(a).is_zero

    def in_jacobson(self, a):
        return self.coerce(a).is_zero

    def jacobson_radical(self):
        return (self.zero(),)

    def units(self):
        return [self.from_int(c) for c in range(1, self.p)]

    def degree(self, a, euclidean=False):
        return self.coerce(a).degree

    def monic(self, a) -> "Poly":
        """Scalar multiple of ``a`` whose graded-lex leading coefficient is 1."""
        a = self.coerce(a)
        if a.is_zero:
            return a
        return self.scale(a, pow(a.leading_coeff, -1, self.p))

    def try_exact_divide(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        if b.is_zero:
            raise DomainError("division by zero in a polynomial ring")
        lb, cb = b.leading
        inv = pow(cb, -1, self.p)
        rem = dict(a.terms)
        quot: dict[Monomial, int] = {}
        while rem:
            le = max(rem, key=glex_key)
            if any(x < y for x, y in zip(le, lb)):
                # b | a forces LT(b) | LT(remainder) at every step
                return None
            qe = tuple(x - y for x, y in zip(le, lb))
            qc = rem[le] * inv % self.p
            quot[qe] = qc
            for e, c in b.terms.items():
                t = tuple(x + y for x, y in zip(qe, e))
                v = (rem.get(t, 0) - qc * c) % self.p
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return self.poly(quot)

    def solve_linear(self, b, a, bound=None):
        a, b = self.coerce(a), self.coerce(b)
        if not b.is_zero:
            q = self.try_exact_divide(a, b)
            return set() if q is None else {q}
        if not a.is_zero:
            return set()
        if bound is None:
            raise DomainError("0*x = 0 has infinitely many solutions; give a degree bound")
        return set(self.polys_up_to(bound))

    def polys_up_to(self, d: int) -> Iterator["Poly"]:
        """Every polynomial of degree at most ``d`` (zero first)."""
        mons = monomials_up_to(self.nvars, d)
        for coeffs in cartesian(range(self.p), repeat=len(mons)):
            yield self.poly(dict(zip(mons, coeffs)))

    def monic_polys(self, dmin: int, dmax: int) -> Iterator["Poly"]:
        """Monic polynomials with ``dmin <= deg <= dmax``.

        Order is by degree, then leading monomial (graded-lex ascending),
        then the lower coefficients counted in base p.
        """
        for k in range(max(dmin, 0), dmax + 1):
            ordered = monomials_up_to(self.nvars, k)
            start = len(monomials_up_to(self.nvars, k - 1)) if k else 0
            for idx in range(start, len(ordered)):
                lead = ordered[idx]
                lower = ordered[:idx]
                for coeffs in cartesian(range(self.p), repeat=len(lower)):
                    terms = {lead: 1}
                    for e, c in zip(lower, coeffs[::-1]):
                        if c:
                            terms[e] = c
                    yield Poly(self, terms)

    def format_element(self, a):
        a = self.coerce(a)
        if a.is_zero:
            return "0"
        parts = []
        for e, c in a.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Product(RingSpec):
    left: RingSpec
    right: RingSpec

    def __post_init__(self):
        if isinstance(self.left, Product) or isinstance(self.right, Product):
            raise DomainError("only pairs of rings are supported (no nested products)")

    @property
    def is_finite(self):  # type: ignore[override]
        return self.left.is_finite and self.right.is_finite

    def describe(self):
        return f"({self.left})x({self.right})"

    def from_int(self, n):
        return (self.left.from_int(n), self.right.from_int(n))

    def coerce(self, a):
        if isinstance(a, int) and not isinstance(a, bool):
            return self.from_int(a)
        if not isinstance(a, tuple) or len(a) != 2:
            raise RingMismatchError(f"{a!r} is not an element of {self}")
        return (self.left.coerce(a[0]), self.right.coerce(a[1]))

    def add(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def neg(self, a):
        a = self.coerce(a)
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def mul(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def is_unit(self, a):
        a = self.coerce(a)
        return self.left.is_unit(a[0]) and self.right.is_unit(a[1])

    def is_nilpotent(self, a):
        a = self.coerce(a)
        return self.left.is_nilpotent(a[0]) and self.right.is_nilpotent(a[1])

    def in_jacobson(self, a):
        a = self.coerce(a)
        return self.left.in_jacobson(a[0]) and self.right.in_jacobson(a[1])

    def jacobson_radical(self):
        return tuple(cartesian(self.left.jacobson_radical(), self.right.jacobson_radical()))

    def units(self):
        return list(cartesian(self.left.units(), self.right.units()))

    def elements(self):
        return cartesian(list(self.left.elements()), list(self.right.elements()))

    @property
    def size(self):
        return self.left.size * self.right.size

    def try_exact_divide(self, a, b):
        sols = self.solve_linear(b, a)
        return next(iter(sols)) if len(sols) == 1 else None

    def solve_linear(self, b, a, bound=None):
        a, b = self.coerce(a), self.coerce(b)
        left = self.left.solve_linear(b[0], a[0], bound)
        right = self.right.solve_linear(b[1], a[1], bound)
        return set(cartesian(left, right))

    def format_element(self, a):
        a = self.coerce(a)
        return f"({self.left.format_element(a[0])}|{self.right.format_element(a[1])})"


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Immutable sparse polynomial: monomial exponent vector -> nonzero coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, int]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    @property
    def leading(self) -> tuple[Monomial, int]:
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    @property
    def leading_coeff(self) -> int:
        return self.leading[1]

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        # no equality with ints: it could not agree with hashing
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        return self.ring.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __rsub__(self, other):
        return self.ring.sub(other, self)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, k: int):
        return self.ring.pow(self, k)

    def __str__(self):
        return self.ring.format_element(self)

    def __repr__(self):
        return f"Poly({self.ring}, {self})"


# ---------------------------------------------------------------------------
# parsing

_RING_RE = {
    "Z": re.compile(r"^Z$"),
    "mod": re.compile(r"^Z/(\d+)$"),
    "gf": re.compile(r"^GF\((\d+)\)$"),
    "poly": re.compile(r"^GF\((\d+)\)\[([^\]]*)\]$"),
}
_VAR_RE = re.compile(r"^[a-z][a-z0-9_]*$")


def parse_ring(text: str) -> RingSpec:
    """Parse ``Z``, ``Z/n``, ``GF(p)``, ``GF(p)[x,y]`` or ``(R)x(S)``."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty ring description")
    if s.startswith("("):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        rest = s[i + 1 :]
        if depth or not rest.startswith("x(") or not rest.endswith(")"):
            raise ParseError(f"malformed product ring {text!r}")
        left, right = parse_ring(s[1:i]), parse_ring(rest[2:-1])
        return Product(left, right)
    if _RING_RE["Z"].match(s):
        return Integers()
    if m := _RING_RE["mod"].match(s):
        return IntegersMod(int(m.group(1)))
    if m := _RING_RE["gf"].match(s):
        return PrimeField(int(m.group(1)))
    if m := _RING_RE["poly"].match(s):
        names = tuple(v for v in m.group(2).split(",") if v)
        for v in names:
            if not _VAR_RE.match(v):
                raise ParseError(f"bad variable name {v!r}")
        return PolyRing(int(m.group(1)), names)
    raise ParseError(f"cannot parse ring {text!r}")


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _ElementParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN_RE.match(stripped, pos)
            if m is None:
                raise ParseError(f"cannot tokenize {text!r}")
            if m.group(1):
                self.tokens.append(("int", m.group(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2)))
            else:
                self.tokens.append(("op", m.group(3)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "")

    def take(self, op: str | None = None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self, ring: RingSpec):
        if not self.tokens:
            raise ParseError("empty element")
        value = self.expr(ring)
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self, ring):
        value = self.term(ring)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term(ring)
            value = ring.add(value, rhs) if op == "+" else ring.sub(value, rhs)
        return value

    def term(self, ring):
        value = self.unary(ring)
        while self.peek() == ("op", "*"):
            self.take()
            value = ring.mul(value, self.unary(ring))
        return value

    def unary(self, ring):
        if self.peek() == ("op", "-"):
            self.take()
            return ring.neg(self.unary(ring))
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary(ring)
        return self.power(ring)

    def power(self, ring):
        base = self.primary(ring)
        if self.peek() == ("op", "^"):
            self.take()
            kind, tok = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            return ring.pow(base, int(tok))
        return base

    def primary(self, ring):
        kind, tok = self.take()
        if kind == "int":
            return ring.from_int(int(tok))
        if kind == "name":
            if not isinstance(ring, PolyRing):
                raise ParseError(f"variable {tok!r} in {ring}")
            return ring.var(tok)
        if tok == "(":
            if isinstance(ring, Product):
                left = self.expr(ring.left)
                self.take("|")
                right = self.expr(ring.right)
                self.take(")")
                return (left, right)
            value = self.expr(ring)
            self.take(")")
            return value
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_element(ring: RingSpec, text: str):
    return ring.parse_element(text)


# ---------------------------------------------------------------------------
# homomorphisms


class RingHom:
    source: RingSpec
    target: RingSpec

    def __call__(self, a):
        raise NotImplementedError


@dataclass(frozen=True)
class QuotientMap(RingHom):
    """``Z -> Z/n``."""

    n: int

    @property
    def source(self):
        return Integers()

    @property
    def target(self):
        return IntegersMod(self.n)

    def __call__(self, a):
        return _check_int(a) % self.n


@dataclass(frozen=True)
class EvalVarToZero(RingHom):
    """Substitute 0 for one variable; the target drops that variable."""

    source: PolyRing
    var: str

    def __post_init__(self):
        if self.var not in self.source.variables:
            raise DomainError(f"{self.var!r} is not a variable of {self.source}")

    @property
    def index(self) -> int:
        return self.source.variables.index(self.var)

    @property
    def target(self):
        rest = tuple(v for v in self.source.variables if v != self.var)
        return PolyRing(self.source.p, rest) if rest else PrimeField(self.source.p)

    def __call__(self, a):
        a = self.source.coerce(a)
        i = self.index
        keep = {e[:i] + e[i + 1 :]: c for e, c in a.terms.items() if e[i] == 0}
        tgt = self.target
        if isinstance(tgt, PrimeField):
            return keep.get((), 0)
        return tgt.poly(keep)


@dataclass(frozen=True)
class Inclusion(RingHom):
    """``GF(p)[some vars] -> GF(p)[more vars]``, matching variables by name."""

    source: PolyRing
    target: PolyRing

    def __post_init__(self):
        if self.source.p != self.target.p or not set(self.source.variables) <= set(
            self.target.variables
        ):
            raise DomainError(f"{self.source} does not include into {self.target}")

    def __call__(self, a):
        a = self.source.coerce(a)
        pos = [self.target.variables.index(v) for v in self.source.variables]
        out = {}
        for e, c in a.terms.items():
            t = [0] * self.target.nvars
            for j, k in zip(pos, e):
                t[j] = k
            out[tuple(t)] = c
        return self.target.poly(out)


@dataclass(frozen=True)
class ProjectionLeft(RingHom):
    source: Product

    @property
    def target(self):
        return self.source.left

    def __call__(self, a):
        return self.source.coerce(a)[0]


@dataclass(frozen=True)
class ProjectionRight(RingHom):
    source: Product

    @property
    def target(self):
        return self.source.right

    def __call__(self, a):
        return self.source.coerce(a)[1]


def apply_hom(h: RingHom, a):
    return h(a)


def arith(ring: RingSpec) -> dict:
    """The arithmetic suite of ``ring`` as a mapping of plain callables."""
    return {
        "add": ring.add,
        "neg": ring.neg,
        "mul": ring.mul,
        "zero": ring.zero,
        "one": ring.one,
        "eq": ring.eq,
    }
