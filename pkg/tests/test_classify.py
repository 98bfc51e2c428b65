import pytest

from factroid import oracle
from factroid import subspace as sp
from factroid.classify import (
    classify,
    euclidean_factroids,
    sublocalizable_check,
    sublocalization,
    ua_chain,
    unit_additive_check,
    product_structure,
)
from factroid.errors import DomainError, UnsupportedError
from factroid.factroid import is_factroid, w_of
from factroid.mulsets import Reg
from factroid.rings import Integers, IntegersMod, PrimeField, Product, parse_ring


def test_euclidean_factroids():
    P = parse_ring("GF(2)[x]")
    assert len(euclidean_factroids(P, 3)) == 5
    assert euclidean_factroids(Integers()) == [sp.CyclicInt(0), sp.CyclicInt(1)]
    P3 = parse_ring("GF(3)[x]")
    Fs = euclidean_factroids(P3, 0)
    assert [F.dim for F in Fs] == [0, 1]
    with pytest.raises(UnsupportedError):
        euclidean_factroids(parse_ring("GF(2)[x,y]"), 2)


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2)])
def test_euclidean_factroids_match_oracle(p, d):
    P = parse_ring(f"GF({p})[x]")
    found = oracle.enumerate_factroids(oracle.OracleAmbient(P, d), Reg(P))
    assert set(found) == {F.element_set() for F in euclidean_factroids(P, d)}


def test_unit_additive_examples():
    assert unit_additive_check(IntegersMod(4)).predicates["unit_additive"]
    r6 = unit_additive_check(IntegersMod(6))
    assert not r6.predicates["unit_additive"] and r6.counterexample == (1, 1)
    assert unit_additive_check(parse_ring("GF(2)[x,y]")).predicates["unit_additive"]


def test_sublocalizable_examples():
    assert not sublocalizable_check(IntegersMod(12)).predicates["sublocalizable"]
    r8 = sublocalizable_check(IntegersMod(8))
    assert r8.predicates["sublocalizable"] and r8.sublocalization == sp.CyclicMod(IntegersMod(8), 1)
    P = parse_ring("GF(2)[x]")
    rp = sublocalizable_check(P)
    assert rp.predicates["sublocalizable"]
    assert [str(b) for b in rp.sublocalization.basis()] == ["1"]


def test_sublocalization_examples():
    P3 = parse_ring("GF(3)[x]")
    assert [str(b) for b in sublocalization(P3).basis()] == ["1"]
    with pytest.raises(DomainError):
        sublocalization(IntegersMod(6))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49])
def test_local_rings_are_their_own_sublocalization(n):
    R = IntegersMod(n)
    rep = classify(R)
    assert rep.predicates["local"] and rep.predicates["sublocalizable"]
    assert rep.sublocalization == sp.CyclicMod(R, 1)


def test_ua_chain_examples():
    z = ua_chain(Integers(), 2, 100)
    assert z.stabilized
    assert z.levels[0]["V"] == {1, -1}
    assert z.final == frozenset(set(range(-100, 101)) - {0})
    g2 = ua_chain(parse_ring("GF(2)[x]"), 3, 3)
    assert g2.stabilized and [str(a) for a in g2.final] == ["1"]
    g3 = ua_chain(parse_ring("GF(3)[x]"), 3, 3)
    assert g3.stabilized and sorted(map(str, g3.final)) == ["1", "2"]
    with pytest.raises(DomainError):
        ua_chain(Integers(), -1, 10)


def test_ua_chain_reports_truncation():
    ch = ua_chain(Integers(), 0, 10)
    assert not ch.stabilized and ch.to_json()["truncated"]


def test_product_structure():
    F22 = Product(PrimeField(2), PrimeField(2))
    diag = sp.span(F22, [(1, 1)])
    v = product_structure(diag)
    assert not v.is_product and is_factroid(diag, Reg(F22))
    zero_left = sp.span(F22, [(0, 1)])
    v = product_structure(zero_left)
    assert v.is_product and v.left == sp.CyclicMod(PrimeField(2), 2) and v.right == sp.CyclicMod(PrimeField(2), 1)


@pytest.mark.parametrize("q,r", [(2, 3), (3, 2), (3, 3), (2, 5), (5, 2), (3, 5), (5, 3), (5, 5)])
def test_no_non_product_factroids_beyond_f2_f2(q, r):
    R = Product(PrimeField(q), PrimeField(r))
    amb = oracle.OracleAmbient(R)
    found = oracle.enumerate_factroids(amb, Reg(R))
    for F in found:
        assert product_structure(sp.span(R, F)).is_product


def test_enumerated_factroids_have_w_in_w_of():
    R = parse_ring("(GF(2))x(GF(2))")
    W = Reg(R)
    for F in oracle.enumerate_factroids(oracle.OracleAmbient(R), W):
        members = set(w_of(sp.span(R, F)).members)
        assert {R.format_element(w) for w in W.members()} <= members
