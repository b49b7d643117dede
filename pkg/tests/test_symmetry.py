import itertools
import random

import pytest
from hypothesis import given

from conftest import games
from wlc.algebra import make_cycle, make_path, make_product
from wlc.catalog import G_STAR, ONE_TWO_PLUS_TWO_ONE as CROSS
from wlc.errors import MalformedRenaming, SizeLimitExceeded
from wlc.symmetry import (
    Renaming,
    apply_renaming,
    are_isomorphic,
    automorphisms,
    brute_force_renamings,
    brute_force_structural_classes,
    canonical_key,
    choice_equivalence,
    full_renamings,
    identity_renaming,
    permute_players,
    structural_classes,
)
from wlc.verification import random_renaming


def test_automorphism_examples():
    assert len(automorphisms(make_cycle(3))) == 6
    empty = make_product((1, 1), universal=False)
    assert automorphisms(empty) == [identity_renaming(empty)]
    assert len(automorphisms(make_product((2, 2)))) == 4


def test_choice_equivalence_examples():
    assert choice_equivalence(CROSS, 0).as_sets() == {frozenset({"a1"}), frozenset({"b1", "c1"})}
    assert choice_equivalence(CROSS, 1).as_sets() == {frozenset({"c2"}), frozenset({"a2", "b2"})}
    assert len(choice_equivalence(make_cycle(3), 0)) == 1


def test_full_renaming_examples():
    swap = Renaming.make((1, 0), {"a1": "c2", "b1": "b2", "c1": "a2", "a2": "c1", "b2": "b1", "c2": "a1"})
    assert swap in full_renamings(CROSS, CROSS)
    assert full_renamings(make_product((2, 3)), make_product((3, 2)))
    assert full_renamings(make_path(2), make_product((2, 2))) == []
    assert full_renamings(make_product((1, 1)), make_product((1, 1, 1))) == []


def test_structural_class_examples():
    assert structural_classes(G_STAR).as_sets() == {
        frozenset({"a1", "b3"}), frozenset({"b1", "a3"}), frozenset({"a2", "b2"})}
    assert structural_classes(CROSS).as_sets() == {
        frozenset({"a1", "c2"}), frozenset({"b1", "c1", "a2", "b2"})}
    assert len(structural_classes(make_product((1, 1), universal=False))) == 1


def test_apply_renaming_examples():
    assert apply_renaming(G_STAR, identity_renaming(G_STAR)) == G_STAR
    swapped = apply_renaming(make_product((2, 3)), Renaming.make(
        (1, 0), {c: c for c in make_product((2, 3)).all_choices}))
    assert swapped.shape == (3, 2)
    autos = full_renamings(G_STAR, G_STAR)
    for r, s in itertools.product(autos, repeat=2):
        assert r.then(s) in autos


def test_malformed_renaming():
    with pytest.raises(MalformedRenaming):
        apply_renaming(G_STAR, Renaming.make((0, 0, 1), {c: c for c in G_STAR.all_choices}))
    with pytest.raises(MalformedRenaming):
        apply_renaming(G_STAR, Renaming.make((0, 1, 2), {"a1": "a1"}))
    with pytest.raises(MalformedRenaming):
        apply_renaming(G_STAR, Renaming.make((0, 1, 2), {c: "x" for c in G_STAR.all_choices}))


def test_size_limit(monkeypatch):
    monkeypatch.setenv("WLC_SIZE_LIMIT", "10")
    with pytest.raises(SizeLimitExceeded):
        automorphisms(make_product((4, 4)))


@given(games(max_choices=3))
def test_automorphisms_form_group(g):
    autos = automorphisms(g)
    assert identity_renaming(g) in autos
    for r in autos:
        assert r.inverse() in autos
        assert apply_renaming(g, r) == g
    for r, s in itertools.product(autos[:6], repeat=2):
        assert r.then(s) in autos


@given(games(max_choices=3))
def test_search_matches_brute_force(g):
    assert full_renamings(g, g) == brute_force_renamings(g, g)
    assert structural_classes(g).as_sets() == brute_force_structural_classes(g).as_sets()


@given(games(max_choices=3))
def test_choice_cells_refine_structural_classes(g):
    classes = structural_classes(g)
    for i in range(g.n_players):
        for cell in choice_equivalence(g, i):
            assert set(cell) <= classes.cell_of(cell[0])
            assert set(cell) <= classes.cell_of(cell[0]) & set(g.choices[i])


@given(games(max_choices=3))
def test_full_self_renamings_preserve_win(g):
    for r in full_renamings(g, g):
        assert {r.map_profile(t) for t in g.win} == g.win


@given(games(players=(2, 3), max_choices=3), games(players=(2, 3), max_choices=3))
def test_isomorphism_equivalence_relation(g, h):
    rng = random.Random(0)
    g2 = apply_renaming(g, random_renaming(g, rng))
    assert are_isomorphic(g, g)
    assert are_isomorphic(g, g2) and are_isomorphic(g2, g)
    assert are_isomorphic(g, h) == are_isomorphic(h, g)
    assert are_isomorphic(g2, h) == are_isomorphic(g, h)
    assert (canonical_key(g) == canonical_key(h)) == are_isomorphic(g, h)


@given(games(players=(2, 3), max_choices=3))
def test_permute_players_round_trip(g):
    beta = list(range(g.n_players))[::-1]
    h = permute_players(g, beta)
    assert are_isomorphic(g, h)
    assert permute_players(h, beta) == g
