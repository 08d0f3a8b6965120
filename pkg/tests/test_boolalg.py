import itertools

import pytest
from hypothesis import given, strategies as st

from agcontracts.boolalg import (AlgebraError, AlgebraMismatch, BoolAlgebra,
                                 EnumerationCapExceeded, complement, enumerate_elements,
                                 implies, join, leq, meet)

from oracle import table


def el(gens, text):
    return BoolAlgebra(gens).from_bitstring(text)


P = ["p"]
PQ = ["p", "q"]


@pytest.mark.parametrize("gens,x,y,want", [
    (P, "01", "11", "01"),
    (P, "01", "10", "00"),
    (PQ, "0011", "0101", "0001"),
])
def test_meet(gens, x, y, want):
    assert meet(el(gens, x), el(gens, y)) == el(gens, want)


@pytest.mark.parametrize("gens,x,y,want", [
    (P, "01", "00", "01"),
    (P, "01", "10", "11"),
    (PQ, "0011", "0101", "0111"),
])
def test_join(gens, x, y, want):
    assert join(el(gens, x), el(gens, y)) == el(gens, want)


@pytest.mark.parametrize("gens,x,want", [(P, "01", "10"), ([], "1", "0"), (PQ, "0011", "1100")])
def test_complement(gens, x, want):
    assert complement(el(gens, x)) == el(gens, want)
    assert complement(complement(el(gens, x))) == el(gens, x)


@pytest.mark.parametrize("gens,x,y,want", [
    (P, "01", "01", "11"),
    (P, "11", "01", "01"),
    (PQ, "0011", "0101", "1101"),
])
def test_implies(gens, x, y, want):
    assert implies(el(gens, x), el(gens, y)) == el(gens, want)


@pytest.mark.parametrize("x,y,want", [("00", "01", True), ("01", "01", True), ("01", "10", False)])
def test_leq(x, y, want):
    assert leq(el(P, x), el(P, y)) is want


def test_generators_follow_valuation_order():
    algebra = BoolAlgebra(["p", "q", "r"])
    for name in "pqr":
        want = table(["p", "q", "r"], lambda **v: v[name])
        assert algebra.var(name).to_bitstring() == want
    assert BoolAlgebra(PQ).var("p").to_bitstring() == "0011"
    assert BoolAlgebra(PQ).var("q").to_bitstring() == "0101"


def test_valuation_matches_var():
    algebra = BoolAlgebra(["a", "b", "c"])
    for i in range(algebra.width):
        val = algebra.valuation(i)
        for name in algebra.generators:
            assert algebra.var(name).bit(i) == val[name]


@pytest.mark.parametrize("n,count", [(0, 2), (1, 4), (2, 16), (3, 256)])
def test_enumerate_counts(n, count):
    algebra = BoolAlgebra([f"v{i}" for i in range(n)])
    items = list(enumerate_elements(algebra))
    assert len(items) == count
    assert len(set(items)) == count


def test_enumeration_cap():
    algebra = BoolAlgebra([f"v{i}" for i in range(4)])
    with pytest.raises(EnumerationCapExceeded, match="enumeration cap exceeded"):
        list(enumerate_elements(algebra))
    assert len(list(enumerate_elements(algebra, cap=4))) == 2 ** 16


def test_mixed_algebras():
    with pytest.raises(AlgebraMismatch, match="mixed algebras"):
        meet(el(P, "01"), el(["q"], "01"))
    with pytest.raises(AlgebraMismatch):
        leq(el(P, "01"), el(PQ, "0101"))


def test_same_generators_same_algebra():
    assert el(PQ, "0110") == BoolAlgebra(["p", "q"]).from_bitstring("0110")
    assert el(PQ, "0110") != el(["q", "p"], "0110")


@pytest.mark.parametrize("gens", [["p", "p"], [""], ["1x"], ["a b"]])
def test_bad_generators(gens):
    with pytest.raises(AlgebraError):
        BoolAlgebra(gens)


def test_generator_maximum():
    BoolAlgebra([f"v{i}" for i in range(16)])
    with pytest.raises(AlgebraError):
        BoolAlgebra([f"v{i}" for i in range(17)])


def test_bitstring_round_trip():
    algebra = BoolAlgebra(PQ)
    for x in algebra.elements():
        assert algebra.from_bitstring(x.to_bitstring()) == x
    with pytest.raises(AlgebraError):
        algebra.from_bitstring("011")


@pytest.mark.parametrize("n", [0, 1, 2])
def test_boolean_algebra_axioms_exhaustive(n):
    algebra = BoolAlgebra([f"v{i}" for i in range(n)])
    one, zero = algebra.top(), algebra.bottom()
    elems = list(algebra.elements())
    for x, y in itertools.product(elems, repeat=2):
        assert x & y == y & x and x | y == y | x
        assert x & (x | y) == x and x | (x & y) == x
        assert (implies(x, y) == one) == leq(x, y)
        assert leq(x & y, x) and leq(x, x | y)
        assert (leq(x, y) and leq(y, x)) == (x == y)
    for x in elems:
        assert x | ~x == one and x & ~x == zero
    for x, y, z in itertools.product(elems, repeat=3):
        assert (x & y) & z == x & (y & z)
        assert (x | y) | z == x | (y | z)
        assert x & (y | z) == (x & y) | (x & z)
        assert x | (y & z) == (x | y) & (x | z)
        if leq(x, y) and leq(y, z):
            assert leq(x, z)
        # meet and join are the GLB and LUB
        assert leq(z, x & y) == (leq(z, x) and leq(z, y))
        assert leq(x | y, z) == (leq(x, z) and leq(y, z))


@given(st.integers(0, 6).flatmap(
    lambda n: st.tuples(st.just(n), *[st.integers(0, 2 ** (2 ** n) - 1)] * 3)))
def test_axioms_random(args):
    n, a, b, c = args
    algebra = BoolAlgebra([f"v{i}" for i in range(n)])
    x, y, z = (algebra.element(v) for v in (a, b, c))
    assert x & (y | z) == (x & y) | (x & z)
    assert ~(x & y) == ~x | ~y
    assert implies(x, implies(y, z)) == implies(x & y, z)
