import pytest

from factroid.errors import DomainError, ParseError, RingMismatchError
from factroid.rings import (
    EvalVarToZero,
    Inclusion,
    Integers,
    IntegersMod,
    PolyRing,
    PrimeField,
    Product,
    ProjectionLeft,
    QuotientMap,
    monomials_up_to,
    parse_ring,
)


def test_parse_rings():
    assert parse_ring("Z") == Integers()
    assert parse_ring("Z/12") == IntegersMod(12)
    assert parse_ring("GF(3)") == PrimeField(3)
    assert parse_ring("GF(2)[x, y]") == PolyRing(2, ("x", "y"))
    assert parse_ring("(GF(3))x(GF(2))") == Product(PrimeField(3), PrimeField(2))


@pytest.mark.parametrize("bad", ["", "Q", "Z/", "GF(4)", "GF(2)[x,x]", "(Z)x", "GF(2)[]"])
def test_parse_ring_errors(bad):
    with pytest.raises((ParseError, DomainError)):
        parse_ring(bad)


def test_frobenius_in_char_2(gf2xy):
    R, x, y = gf2xy
    assert (x + y) ** 2 == x**2 + y**2


def test_exact_division(gf2xy):
    R, x, y = gf2xy
    assert R.try_exact_divide(x**2 * y + x, x) == x * y + 1
    assert R.try_exact_divide(x**2 + y, x) is None
    f = (x + y**2) * (y + x**2)
    assert R.try_exact_divide(f, x + y**2) == y + x**2


def test_solve_linear_mod_n():
    assert IntegersMod(12).solve_linear(2, 6) == {3, 9}
    assert IntegersMod(12).solve_linear(4, 2) == set()
    assert Integers().solve_linear(3, 7) == set()
    assert Integers().solve_linear(-3, 6) == {-2}


def test_monomial_count():
    from math import comb

    for v in (1, 2, 3):
        for d in range(5):
            assert len(monomials_up_to(v, d)) == comb(d + v, v)


def test_monic_enumeration_order(gf2x):
    R, x = gf2x
    got = [R.format_element(f) for f in R.monic_polys(0, 2)]
    assert got == ["1", "x", "x + 1", "x^2", "x^2 + 1", "x^2 + x", "x^2 + x + 1"]


def test_element_round_trip(gf2xy):
    R, x, y = gf2xy
    for f in [x**2 * y + x + 1, (x + y**2) * (y + x**2), R.zero(), R.one()]:
        assert R.parse_element(R.format_element(f)) == f
    P = parse_ring("(Z/4)x(GF(3))")
    a = P.parse_element("(3|2)")
    assert P.parse_element(P.format_element(a)) == a
    R3 = parse_ring("GF(3)[x]")
    g = R3.parse_element("2*x^2 - x + 1")
    assert R3.parse_element(R3.format_element(g)) == g


def test_ring_mismatch(gf2xy, gf2x):
    R, x, _ = gf2xy
    P, t = gf2x
    with pytest.raises(RingMismatchError):
        R.add(x, t)


def test_structure_predicates():
    Z8 = IntegersMod(8)
    assert Z8.units() == [1, 3, 5, 7]
    assert Z8.is_nilpotent(4) and not Z8.is_nilpotent(3)
    assert Z8.in_jacobson(6) and not Z8.in_jacobson(1)
    Z12 = IntegersMod(12)
    assert [a for a in Z12.elements() if Z12.in_jacobson(a)] == [0, 6]


def test_homomorphisms(gf2xy):
    R, x, y = gf2xy
    h = EvalVarToZero(R, "y")
    assert h(x**2 + x * y + y + 1) == h.target.parse_element("x^2 + 1")
    assert EvalVarToZero(parse_ring("GF(2)[x]"), "x").target == PrimeField(2)
    inc = Inclusion(parse_ring("GF(2)[y]"), R)
    assert inc(inc.source.parse_element("y^2+1")) == y**2 + 1
    assert QuotientMap(12)(-1) == 11
    pl = ProjectionLeft(parse_ring("(GF(3))x(GF(2))"))
    assert pl((2, 1)) == 2
