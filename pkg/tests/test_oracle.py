import pytest

from factroid import oracle
from factroid import subspace as sp
from factroid.errors import BudgetError, UnsupportedError
from factroid.factroid import closure, closure_int
from factroid.mulsets import EvenDegreeNonzero, MonoidGen, Reg
from factroid.rings import Integers, IntegersMod, PrimeField, Product, parse_ring


def test_enumeration_counts():
    P = parse_ring("GF(2)[x]")
    assert len(oracle.enumerate_factroids(oracle.OracleAmbient(P, 3), Reg(P))) == 5
    F22 = Product(PrimeField(2), PrimeField(2))
    found = oracle.enumerate_factroids(oracle.OracleAmbient(F22), Reg(F22))
    assert len(found) == 5
    assert frozenset({(0, 0), (1, 1)}) in found
    F32 = Product(PrimeField(3), PrimeField(2))
    assert len(oracle.enumerate_factroids(oracle.OracleAmbient(F32), Reg(F32))) == 4
    # in Z/4 every nonzerodivisor is a unit, so all three subgroups qualify
    assert len(oracle.enumerate_factroids(oracle.OracleAmbient(IntegersMod(4)), Reg(IntegersMod(4)))) == 3


def test_subgroup_examples():
    def count(amb):
        return sum(1 for _ in oracle.enumerate_subgroups(amb))

    assert count(oracle.OracleAmbient(parse_ring("GF(2)[x]"), 1)) == 5
    assert count(oracle.OracleAmbient(IntegersMod(6))) == 4
    assert count(oracle.OracleAmbient(PrimeField(3))) == 2


def test_subgroup_counts_match_gaussian_binomials():
    P = parse_ring("GF(2)[x]")
    # subspaces of GF(2)^3: 1 + 7 + 7 + 1
    assert sum(1 for _ in oracle.enumerate_subgroups(oracle.OracleAmbient(P, 2))) == 16
    # subgroups of Z/12: one per divisor
    assert sum(1 for _ in oracle.enumerate_subgroups(oracle.OracleAmbient(IntegersMod(12)))) == 6


def test_naive_closure_examples(gf2x):
    P, t = gf2x
    W = Reg(P)
    C2 = oracle.naive_closure([t**2 + 1], W)
    assert len(C2) == 8
    assert oracle.naive_closure([P.zero()], W) == frozenset({P.zero()})
    Z6 = IntegersMod(6)
    assert oracle.naive_closure([2], Reg(Z6)) == frozenset({0, 2, 4})
    assert oracle.naive_closure_int(12, [2]) == 3
    assert oracle.naive_closure_int(0, [2]) == 0
    assert oracle.naive_closure_int(7, []) == 7


def test_naive_closure_agrees_with_evendeg(gf2x):
    P, t = gf2x
    W = EvenDegreeNonzero(P)
    for g in [t**2 + 1, t**3, t**3 + t]:
        assert oracle.naive_closure([g], W) == closure([g], W).result.element_set()


def test_factroids_closed_under_intersection():
    P = parse_ring("GF(2)[x,y]")
    amb = oracle.OracleAmbient(P, 1)
    found = set(oracle.enumerate_factroids(amb, Reg(P)))
    for A in found:
        for B in found:
            assert A & B in found


def test_budget_errors():
    P = parse_ring("GF(2)[x,y]")
    with pytest.raises(BudgetError):
        list(oracle.enumerate_subgroups(oracle.OracleAmbient(P, 3)))
    with pytest.raises(BudgetError):
        list(oracle.enumerate_subgroups(oracle.OracleAmbient(IntegersMod(97))))
    with pytest.raises(UnsupportedError):
        list(oracle.enumerate_subgroups(oracle.OracleAmbient(Integers())))
    with pytest.raises(BudgetError):
        list(oracle.enumerate_subgroups(oracle.OracleAmbient(P, 2), oracle.EnumerationBudget(time_budget=0.0)))


@pytest.mark.parametrize("g", [1, 12, 64, 90, 1001, 9240])
def test_integer_oracle_matches_closed_form(g):
    for gens in ([2], [3, 5], [6, 10], [4, 9, 25]):
        assert oracle.naive_closure_int(g, gens) == closure_int(g, MonoidGen(Integers(), gens)).g
