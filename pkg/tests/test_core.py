import itertools

import pytest
from hypothesis import given

from conftest import games
from wlc.algebra import make_path, make_product
from wlc.catalog import G_STAR, Z2, Z2_PLUS_BAR11, Z3
from wlc.core import (
    ChoiceStatus,
    Comparison,
    build_game,
    choice_status,
    compare_choices,
    complement,
    losing_extension,
    optimal_choices,
    restrict,
    surely_winning,
    winning_extension,
)
from wlc.errors import (
    DuplicateChoiceName,
    EmptyChoiceSet,
    EmptyRestriction,
    InvalidProfile,
    SamePlayerViolation,
    UnknownChoice,
)
from wlc.symmetry import are_isomorphic


def test_build_g_star():
    assert G_STAR.n_players == 3
    assert len(G_STAR.win) == 4
    assert G_STAR.shape == (2, 2, 2)


def test_build_smallest_universal():
    g = build_game([["x"], ["y"]], [("x", "y")])
    assert g.win == {("x", "y")}


def test_build_deduplicates():
    g = build_game([["x"], ["y"]], [("x", "y"), ("x", "y")])
    assert len(g.win) == 1


@pytest.mark.parametrize("choices, win, exc", [
    ([["x", "x"], ["y"]], [], DuplicateChoiceName),
    ([["x"], ["x"]], [], DuplicateChoiceName),
    ([["x"], []], [], EmptyChoiceSet),
    ([["x"], ["y"]], [("x",)], InvalidProfile),
    ([["x"], ["y"]], [("y", "x")], InvalidProfile),
    ([["x"], ["y"]], [("x", "z")], InvalidProfile),
])
def test_build_errors(choices, win, exc):
    with pytest.raises(exc):
        build_game(choices, win)


def test_winning_extension_examples():
    assert winning_extension(G_STAR, 0, "a1") == {("a2", "a3"), ("a2", "b3"), ("b2", "b3")}
    assert winning_extension(G_STAR, 1, "b2") == {("a1", "b3"), ("b1", "b3")}
    empty = make_product((2, 2), universal=False)
    assert winning_extension(empty, 0, "p1_c1") == frozenset()


def test_winning_extension_unknown_choice():
    with pytest.raises(UnknownChoice):
        winning_extension(G_STAR, 0, "zz")
    with pytest.raises(UnknownChoice):
        winning_extension(G_STAR, 0, "a2")


def test_losing_extension_complements():
    ext = losing_extension(G_STAR, 1, "b2")
    assert ext == {("a1", "a3"), ("b1", "a3")}


def test_choice_status_examples():
    assert choice_status(Z2, 0, "b1") is ChoiceStatus.SURELY_WINNING
    assert choice_status(Z2, 1, "a2") is ChoiceStatus.SURELY_WINNING
    assert choice_status(Z2, 0, "a1") is ChoiceStatus.CONTINGENT
    assert choice_status(Z2_PLUS_BAR11, 0, "c1") is ChoiceStatus.SURELY_LOSING
    full = make_product((2, 2))
    assert all(choice_status(full, full.owner(c), c) is ChoiceStatus.SURELY_WINNING for c in full.all_choices)


def test_compare_examples():
    assert compare_choices(Z3, 0, "b1", "a1") is Comparison.BETTER
    assert compare_choices(Z3, 0, "a1", "b1") is Comparison.WORSE
    assert compare_choices(G_STAR, 1, "a2", "b2") is Comparison.INCOMPARABLE
    full = make_product((2, 2))
    assert compare_choices(full, 0, "p1_c1", "p1_c2") is Comparison.EQUIVALENT


def test_compare_other_player():
    with pytest.raises(SamePlayerViolation):
        compare_choices(G_STAR, 0, "a1", "a2")


def test_optimal_examples():
    assert optimal_choices(G_STAR, 0) == {"a1"}
    assert optimal_choices(G_STAR, 2) == {"b3"}
    assert optimal_choices(G_STAR, 1) == frozenset()
    assert optimal_choices(Z3, 0) == frozenset()
    single = build_game([["x"], ["y", "z"]], [("x", "y")])
    assert optimal_choices(single, 0) == {"x"}


def test_restrict_examples():
    r = restrict(Z2_PLUS_BAR11, [{"a1", "b1"}, {"a2", "b2"}])
    assert are_isomorphic(r, make_path(2))
    assert restrict(G_STAR, G_STAR.choices) == G_STAR
    r = restrict(G_STAR, [{"a1"}, {"a2", "b2"}, {"b3"}])
    assert r.win == {("a1", "a2", "b3"), ("a1", "b2", "b3")}


def test_restrict_errors():
    with pytest.raises(EmptyRestriction):
        restrict(G_STAR, [set(), {"a2"}, {"a3"}])
    with pytest.raises(UnknownChoice):
        restrict(G_STAR, [{"a2"}, {"a2"}, {"a3"}])


def test_complement_examples():
    assert complement(make_product((2, 2))).win == frozenset()
    assert complement(complement(G_STAR)) == G_STAR
    assert complement(make_product((1, 1, 1))).win == frozenset()


@given(games())
def test_extension_sizes_sum_to_win(g):
    for i, cs in enumerate(g.choices):
        assert sum(len(winning_extension(g, i, c)) for c in cs) == len(g.win)


@given(games())
def test_surely_winning_vs_optimal(g):
    for i, cs in enumerate(g.choices):
        winning = surely_winning(g, i)
        assert winning <= optimal_choices(g, i)
        if winning:
            assert optimal_choices(g, i) == winning


@given(games())
def test_status_matches_extensions(g):
    for i, cs in enumerate(g.choices):
        for c in cs:
            status = choice_status(g, i, c)
            assert (status is ChoiceStatus.SURELY_WINNING) == (not losing_extension(g, i, c))
            if status is ChoiceStatus.SURELY_LOSING:
                assert not winning_extension(g, i, c)


@given(games(max_choices=3))
def test_better_is_strict_partial_order(g):
    for i, cs in enumerate(g.choices):
        better = {(a, b) for a, b in itertools.permutations(cs, 2)
                  if compare_choices(g, i, a, b) is Comparison.BETTER}
        for a, b in better:
            assert (b, a) not in better
            for c, d in better:
                if c == b:
                    assert (a, d) in better


@given(games())
def test_restrict_composes(g):
    k = [cs[: (len(cs) + 1) // 2 + 1] for cs in g.choices]
    k2 = [cs[: max(1, len(cs) // 2)] for cs in k]
    assert restrict(restrict(g, k), k2) == restrict(g, k2)


@given(games())
def test_complement_involution_swaps_status(g):
    h = complement(g)
    assert complement(h) == g
    for i, cs in enumerate(g.choices):
        for c in cs:
            s, t = choice_status(g, i, c), choice_status(h, i, c)
            if s is ChoiceStatus.SURELY_WINNING:
                assert t is ChoiceStatus.SURELY_LOSING
            if s is ChoiceStatus.SURELY_LOSING:
                assert t is ChoiceStatus.SURELY_WINNING
