import math

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from resgames.logic import (
    AFFINE_MALL,
    BOT,
    EMPTY,
    LINEAR_MLL,
    ONE,
    TOP,
    ZERO,
    Atom,
    FragmentError,
    LogicMode,
    Lollipop,
    Neg,
    ResourceBag,
    Tensor,
    With,
    bag,
    count_multisubsets,
    multisubsets,
    tensor_fold,
)
from resgames.syntax import ParseError, parse_formula, parse_formula_list, parse_sequent, print_formula

from strategies import deep_formulas, formulas

A, B, C = Atom("A"), Atom("B"), Atom("C")


def test_parse_tensor():
    assert parse_formula("A * B") == Tensor(A, B)


def test_parse_lollipop():
    assert parse_formula("flour -o bread") == Lollipop(Atom("flour"), Atom("bread"))


def test_par_and_bot_are_rewritten():
    assert parse_formula("A | bot") == Lollipop(Neg(A), Neg(ONE))


def test_zero_is_negated_top():
    assert parse_formula("0") == ZERO == Neg(TOP)
    assert parse_formula("bot") == BOT


@pytest.mark.parametrize(
    "text, expected",
    [
        ("A -o B -o C", Lollipop(A, Lollipop(B, C))),
        ("(A -o B) -o C", Lollipop(Lollipop(A, B), C)),
        ("A * B * C", Tensor(Tensor(A, B), C)),
        ("A * B & C", With(Tensor(A, B), C)),
        ("~A * B", Tensor(Neg(A), B)),
        ("~~A", Neg(Neg(A))),
        ("A | B | C", Lollipop(Neg(Lollipop(Neg(A), B)), C)),
        ("top", TOP),
        ("1", ONE),
    ],
)
def test_precedence(text, expected):
    assert parse_formula(text) == expected


def test_print_examples():
    assert print_formula(Tensor(A, B)) == "A * B"
    assert print_formula(Lollipop(Neg(A), B)) == "~A -o B"
    assert print_formula(Neg(TOP)) == "~top"
    assert print_formula(Lollipop(Lollipop(A, B), C)) == "(A -o B) -o C"
    assert print_formula(Tensor(A, Tensor(B, C))) == "A * (B * C)"


@settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(deep_formulas(max_depth=6))
def test_print_parse_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@pytest.mark.parametrize(
    "text, line, column",
    [("A *", 1, 4), ("A B", 1, 3), ("(A", 1, 3), ("A $ B", 1, 3), ("top_ -o", 1, 8)],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert info.value.expected or "character" in str(info.value)


def test_keywords_are_not_atoms():
    with pytest.raises(ParseError):
        parse_formula("top * bot * ~")


def test_mll_rejects_additives():
    with pytest.raises(FragmentError):
        parse_formula("A & B", LINEAR_MLL)
    with pytest.raises(FragmentError):
        parse_formula("top", LINEAR_MLL)
    assert parse_formula("A & B", AFFINE_MALL) == With(A, B)


def test_sequent_syntax():
    s = parse_sequent("A, B |- A")
    assert s.left == bag("A", "B") and s.right == bag("A")
    assert s.intuitionistic
    assert parse_sequent("|-").left == EMPTY
    assert str(parse_sequent("B, A |- ")) == "A, B |-"


def test_formula_list():
    assert parse_formula_list("") == []
    assert parse_formula_list("flour, flour, flour -o bread")[2] == parse_formula("flour -o bread")


def test_logic_mode_parse():
    assert LogicMode.parse("linear mll") == LINEAR_MLL
    assert LogicMode.parse("affine") == AFFINE_MALL
    with pytest.raises(ValueError):
        LogicMode.parse("intuitionistic")


def test_tensor_fold():
    assert tensor_fold(EMPTY) == ONE
    assert tensor_fold(bag("A")) == A
    assert tensor_fold(bag("B", "A", "A")) == Tensor(Tensor(A, A), B)


def test_multisubsets_examples():
    assert multisubsets(EMPTY) == [EMPTY]
    assert multisubsets(bag("A", "A")) == [EMPTY, bag("A"), bag("A", "A")]
    assert len(multisubsets(bag("A", "B"))) == 4


def test_bag_rejects_non_formulas():
    with pytest.raises(TypeError):
        ResourceBag(["A"])


def test_bag_operations():
    x = bag("A", "A", "B")
    assert x.count(A) == 2 and len(x) == 3 and x.support() == (A, B)
    assert x - bag("A") == bag("A", "B")
    assert x.union(bag("A", "C")) == bag("A", "A", "B", "C")
    assert bag("A") < x and not x < x and x <= x
    assert list(x) == [A, A, B]
    assert repr(x) == "{A, A, B}"
    with pytest.raises(KeyError):
        x.remove(C)


small_bags = st.lists(formulas(max_size=3), max_size=5).map(ResourceBag)


@settings(max_examples=200, deadline=None)
@given(small_bags, small_bags)
def test_union_adds_sizes(x, y):
    assert len(x + y) == len(x) + len(y)
    assert x <= x + y and y <= x + y
    assert x + y == y + x


@settings(max_examples=200, deadline=None)
@given(small_bags, small_bags, small_bags)
def test_union_associative(x, y, z):
    assert (x + y) + z == x + (y + z)


@settings(max_examples=200, deadline=None)
@given(small_bags)
def test_multisubsets_properties(x):
    subs = multisubsets(x)
    assert len(subs) == math.prod(m + 1 for _, m in x.items()) == count_multisubsets(x)
    assert len(set(subs)) == len(subs)
    assert all(s <= x for s in subs)
    assert subs[0] == EMPTY and subs[-1] == x


@settings(max_examples=100, deadline=None)
@given(small_bags)
def test_iteration_order_is_canonical(x):
    assert ResourceBag(reversed(list(x))) == x
    assert list(ResourceBag(reversed(list(x)))) == list(x)
