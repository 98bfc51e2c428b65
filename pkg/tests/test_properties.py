from hypothesis import given, settings, strategies as st

from factroid import subspace as sp
from factroid.factroid import closure, is_factroid, w_of
from factroid.mulsets import EvenDegreeNonzero, Reg
from factroid.rings import parse_ring

R2 = parse_ring("GF(2)[x,y]")
P3 = parse_ring("GF(3)[x]")
MONS2 = sp.ambient(R2, 2).monomials
MONS3 = sp.ambient(P3, 3).monomials

fixed = settings(max_examples=40, derandomize=True, deadline=None)


def poly_from(ring, mons, coeffs):
    return ring.poly({m: c for m, c in zip(mons, coeffs) if c})


def polys(ring, mons):
    coeffs = st.lists(st.integers(0, ring.p - 1), min_size=len(mons), max_size=len(mons))
    return coeffs.map(lambda cs: poly_from(ring, mons, cs))


gens2 = st.lists(polys(R2, MONS2), min_size=1, max_size=3)
gens3 = st.lists(polys(P3, MONS3), min_size=1, max_size=2)


def _ambient_bound(gens):
    return max((g.degree for g in gens if not g.is_zero), default=0)


@fixed
@given(gens2)
def test_idempotence_and_extensivity(gens):
    W = Reg(R2)
    F = closure(gens, W).result
    assert closure(F.basis(), W, bound=F.ambient.d).result == F
    for g in gens:
        assert F.contains(g)
    assert is_factroid(F, W)


@fixed
@given(gens2, gens2)
def test_monotonicity(a, b):
    W = Reg(R2)
    d = _ambient_bound(a + b)
    small = closure(a, W, bound=d).result
    big = closure(a + b, W, bound=d).result
    assert sp.is_subgroup_of(small, big)


@fixed
@given(gens3)
def test_saturation_of_results(gens):
    for W in (Reg(P3), EvenDegreeNonzero(P3)):
        F = closure(gens, W).result
        for w in W.monic_members(1, F.ambient.d):
            assert sp.is_subgroup_of(sp.mul_preimage(F, w), F)


@fixed
@given(gens3)
def test_degree_bound(gens):
    F = closure(gens, Reg(P3)).result
    assert F.max_degree <= _ambient_bound(gens)


def test_w_of_maximality_on_even_degree_example():
    P = parse_ring("GF(2)[x]")
    x = P.gens()[0]
    F = sp.span(sp.ambient(P, 2), [P.one(), x**2])
    report = w_of(F)
    for W, expected in ((EvenDegreeNonzero(P), True), (Reg(P), False)):
        listed = all(report.is_member(w) for w in W.monic_members(0, 2))
        assert is_factroid(F, W) == expected == listed
