import pytest
from hypothesis import given
from hypothesis import strategies as st

from wlc.algebra import (
    Cycle,
    EmptyProduct,
    Path,
    Power,
    Product,
    Scale,
    Sum,
    disjoint_union,
    evaluate,
    game_from_expression,
    make_cycle,
    make_path,
    make_product,
    parse_expression,
    replicate,
    to_text,
)
from wlc.catalog import ONE_PLUS_BAR11, Z2_PLUS_BAR11
from wlc.core import ChoiceStatus, choice_status, degree, surely_winning
from wlc.errors import AllZero, BadSize, ParseError, PlayerCountMismatch
from wlc.symmetry import are_isomorphic


def test_products():
    g = make_product((2, 3))
    assert g.shape == (2, 3) and len(g.win) == 6
    e = make_product((1, 3, 1), universal=False)
    assert e.shape == (1, 3, 1) and not e.win
    assert len(make_product((1, 1)).win) == 1
    with pytest.raises(AllZero):
        make_product((0, 0))


def test_path_and_cycle_examples():
    z2 = make_path(2)
    assert len(z2.win) == 3
    assert [len(surely_winning(z2, i)) for i in range(2)] == [1, 1]
    assert make_cycle(2).win == make_product((2, 2)).win
    o3 = make_cycle(3)
    assert all(degree(o3, c) == 2 for c in o3.all_choices)
    assert make_path(1).win == make_product((1, 1)).win


@pytest.mark.parametrize("bad", [lambda: make_path(0), lambda: make_cycle(1)])
def test_bad_sizes(bad):
    with pytest.raises(BadSize):
        bad()


@pytest.mark.parametrize("k", range(1, 8))
def test_path_cycle_sizes(k):
    p = make_path(k)
    assert len(p.all_choices) == 2 * k and len(p.win) == 2 * k - 1
    if k >= 2:
        c = make_cycle(k)
        assert len(c.all_choices) == 2 * k and len(c.win) == 2 * k
        assert all(degree(c, x) == 2 for x in c.all_choices)


def test_union_examples():
    g = disjoint_union(make_product((1, 1)), make_product((1, 1), universal=False))
    assert are_isomorphic(g, ONE_PLUS_BAR11)
    assert len(disjoint_union(make_product((1, 1)), make_product((2, 2))).win) == 5
    with pytest.raises(PlayerCountMismatch):
        disjoint_union(make_product((1, 1)), make_product((1, 1, 1)))


def test_zero_component_is_neutral():
    g = game_from_expression("Z2 + bar(0x0)")
    assert g == make_path(2)
    assert game_from_expression("1x2 + 1x0").shape == (2, 2)


def test_replicate_examples():
    g = replicate(3, make_product((1, 1, 1)))
    assert g.shape == (3, 3, 3) and len(g.win) == 3
    assert len(replicate(2, make_path(2)).win) == 6
    assert are_isomorphic(replicate(1, make_path(3)), make_path(3))
    with pytest.raises(BadSize):
        replicate(0, make_path(2))


def test_parse_examples():
    assert are_isomorphic(game_from_expression("Z2 + bar(1x1)"), Z2_PLUS_BAR11)
    g = game_from_expression("1x1 + 2(1x2)")
    assert g.shape == (3, 5)
    g = game_from_expression("3(1^4)")
    assert g.n_players == 4 and len(g.win) == 3
    assert game_from_expression("2×3") == make_product((2, 3))
    with pytest.raises((ParseError, BadSize)):
        game_from_expression("Z0")


def test_parse_tree():
    assert parse_expression("2(Z3) + bar(1x2)") == Sum(Scale(2, Path(3)), EmptyProduct((1, 2)))
    assert parse_expression("1^3") == Power(1, 3)
    assert parse_expression("O4") == Cycle(4)
    assert parse_expression(" ( 1 x 2 ) ") == Product((1, 2))


@pytest.mark.parametrize("text, pos", [("bogus", 0), ("1x", 2), ("Z2 +", 4), ("(1x1", 4), ("1x1)", 3), ("", 0)])
def test_parse_error_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position == pos
    assert info.value.expected


def test_mismatched_players():
    with pytest.raises(PlayerCountMismatch):
        game_from_expression("1x1 + 1x1x1")


def test_all_zero():
    with pytest.raises(AllZero):
        game_from_expression("0x0")
    with pytest.raises(BadSize):
        game_from_expression("1x0")


def test_empty_product_has_losing_choices():
    g = game_from_expression("bar(1x3x1)")
    assert all(choice_status(g, g.owner(c), c) is ChoiceStatus.SURELY_LOSING for c in g.all_choices)


def _exprs():
    leaf = st.one_of(
        st.lists(st.integers(1, 3), min_size=2, max_size=2).map(lambda c: Product(tuple(c))),
        st.lists(st.integers(1, 3), min_size=2, max_size=2).map(lambda c: EmptyProduct(tuple(c))),
        st.integers(1, 3).map(Path),
        st.integers(2, 3).map(Cycle),
        st.just(Power(1, 2)),
    )
    return st.recursive(leaf, lambda sub: st.one_of(
        st.tuples(sub, sub).map(lambda p: Sum(*p)),
        st.tuples(st.integers(1, 2), sub).map(lambda p: Scale(*p)),
    ), max_leaves=3)


@given(_exprs())
def test_round_trip(expr):
    assert parse_expression(to_text(expr)) == expr


@given(_exprs())
def test_evaluate_validates(expr):
    g = evaluate(expr)
    assert g.n_players == 2


@given(_exprs(), _exprs(), _exprs())
def test_union_associative_commutative(a, b, c):
    ga, gb, gc = evaluate(a), evaluate(b), evaluate(c)
    assert are_isomorphic(disjoint_union(ga, gb), disjoint_union(gb, ga))
    assert are_isomorphic(disjoint_union(disjoint_union(ga, gb), gc),
                          disjoint_union(ga, disjoint_union(gb, gc)))
