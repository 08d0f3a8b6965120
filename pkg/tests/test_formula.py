import itertools

import pytest
from hypothesis import given, strategies as st

from agcontracts.boolalg import BoolAlgebra
from agcontracts.formula import (And, Const, FormulaSyntaxError, Implies, Not, Or,
                                 UnknownVariable, Var, eval_to_element, parse, to_dnf)

from oracle import imp, table

p, q, r = Var("p"), Var("q"), Var("r")


def test_implication_is_right_associative():
    assert parse("p -> q -> r") == Implies(p, Implies(q, r))


def test_precedence():
    assert parse("!p & q | r") == Or(And(Not(p), q), r)
    assert parse("p | q & r -> p") == Implies(Or(p, And(q, r)), p)
    assert parse("!!p") == Not(Not(p))


def test_left_associative_binary():
    assert parse("p & q & r") == And(And(p, q), r)
    assert parse("p | q | r") == Or(Or(p, q), r)


@pytest.mark.parametrize("text", [
    "not p and q or r",
    "~p & q | r",
    "  !p&q|r  ",
    "(!p & q) | r",
])
def test_token_synonyms_and_whitespace(text):
    assert parse(text) == Or(And(Not(p), q), r)


def test_word_implies_and_constants():
    assert parse("p implies true") == Implies(p, Const(True))
    assert parse("false") == Const(False)
    assert parse("x_1 & _y") == And(Var("x_1"), Var("_y"))


@pytest.mark.parametrize("text,pos", [
    ("p &", 4),
    ("", 1),
    ("   ", 4),
    ("(p", 3),
    ("p q", 3),
    ("p -> ", 6),
    ("p $ q", 3),
    (")", 1),
    ("p & and", 5),
    ("p - q", 3),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.position == pos


def test_eval_examples():
    assert eval_to_element(parse("p"), BoolAlgebra(["p"])).to_bitstring() == "01"
    for gens in ([], ["p"], ["p", "q", "r"]):
        algebra = BoolAlgebra(gens)
        assert eval_to_element(parse("true"), algebra) == algebra.top()
    assert eval_to_element(parse("p -> q"), BoolAlgebra(["p", "q"])).to_bitstring() == "1101"


def test_eval_unknown_variable_is_named():
    with pytest.raises(UnknownVariable, match="'z'"):
        eval_to_element(parse("p & z"), BoolAlgebra(["p", "q"]))


@pytest.mark.parametrize("text,fn", [
    ("p -> q -> r", lambda p, q, r: imp(p, imp(q, r))),
    ("(p -> q) -> r", lambda p, q, r: imp(imp(p, q), r)),
    ("!p & q | r", lambda p, q, r: ((not p) and q) or r),
    ("!(p | q) & !r", lambda p, q, r: not (p or q) and not r),
    ("p & (q -> !r) | false", lambda p, q, r: p and imp(q, not r)),
])
def test_eval_against_truth_table_oracle(text, fn):
    got = eval_to_element(parse(text), BoolAlgebra(["p", "q", "r"]))
    assert got.to_bitstring() == table(["p", "q", "r"], fn)


def test_dnf_examples():
    A = BoolAlgebra(["p"])
    assert to_dnf(A.from_bitstring("00")) == "false"
    assert to_dnf(A.from_bitstring("11")) == "true"
    assert to_dnf(A.from_bitstring("01")) == "(p)"
    B = BoolAlgebra(["p", "q"])
    # "1101" is p -> q: true at valuations 00, 01 and 11
    assert to_dnf(B.from_bitstring("1101")) == "(!p & !q) | (!p & q) | (p & q)"
    assert to_dnf(B.from_bitstring("1011")) == "(!p & !q) | (p & !q) | (p & q)"


@pytest.mark.parametrize("n", [0, 1, 2])
def test_dnf_round_trip_exhaustive(n):
    algebra = BoolAlgebra([f"v{i}" for i in range(n)])
    for x in algebra.elements():
        assert eval_to_element(parse(to_dnf(x)), algebra) == x


def formulas(names):
    leaves = st.one_of(st.sampled_from([Var(v) for v in names]), st.builds(Const, st.booleans()))
    return st.recursive(leaves, lambda sub: st.one_of(
        st.builds(Not, sub), st.builds(And, sub, sub),
        st.builds(Or, sub, sub), st.builds(Implies, sub, sub)), max_leaves=12)


def _oracle(f, env):
    if isinstance(f, Var):
        return env[f.name]
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not _oracle(f.arg, env)
    a, b = _oracle(f.left, env), _oracle(f.right, env)
    return {And: a and b, Or: a or b, Implies: imp(a, b)}[type(f)]


@given(formulas("pqr"))
def test_printed_formula_reparses_to_same_tree(f):
    assert parse(str(f)) == f


@given(formulas("pqr"))
def test_eval_matches_per_valuation_oracle(f):
    names = ["p", "q", "r"]
    want = "".join("1" if _oracle(f, dict(zip(names, vals))) else "0"
                   for vals in itertools.product([False, True], repeat=3))
    assert eval_to_element(f, BoolAlgebra(names)).to_bitstring() == want
