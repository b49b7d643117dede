import json

import pytest
from hypothesis import given

from conftest import games
from wlc.algebra import make_cycle, make_product
from wlc.catalog import G_STAR
from wlc.errors import DuplicateChoiceName, InvalidProfile, SchemaError
from wlc.io import dumps, export_dot, load_document, load_game, loads, save_game, to_dot
from wlc.symmetry import are_isomorphic

G_STAR_DOC = {
    "players": 3,
    "choices": [["a1", "b1"], ["a2", "b2"], ["a3", "b3"]],
    "win": [["a1", "a2", "a3"], ["a1", "a2", "b3"], ["a1", "b2", "b3"], ["b1", "b2", "b3"]],
}


def test_load_g_star(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(G_STAR_DOC))
    assert load_game(path) == G_STAR


def test_round_trip_cycle(tmp_path):
    path = tmp_path / "o3.json"
    g = make_cycle(3)
    save_game(g, path, {"label": "O3"})
    doc = load_document(path)
    assert doc.game == g and doc.game.choices == g.choices
    assert are_isomorphic(doc.game, g)
    assert doc.meta == {"label": "O3"}


@given(games())
def test_byte_stable(g):
    text = dumps(g, {"source": "test"})
    assert dumps(loads(text).game, loads(text).meta) == text


@pytest.mark.parametrize("mutate, pointer", [
    (lambda d: d["win"].append(["a1", "a2"]), "/win/4"),
    (lambda d: d.pop("win"), ""),
    (lambda d: d.update(players=2), "/choices"),
    (lambda d: d.update(players="3"), "/players"),
    (lambda d: d["choices"][1].append(7), "/choices/1/2"),
    (lambda d: d["win"][0].__setitem__(1, 3), "/win/0/1"),
    (lambda d: d.update(meta=[]), "/meta"),
    (lambda d: d.update(extra=1), ""),
])
def test_schema_errors(mutate, pointer):
    doc = json.loads(json.dumps(G_STAR_DOC))
    mutate(doc)
    with pytest.raises(SchemaError) as info:
        loads(json.dumps(doc))
    assert info.value.pointer == pointer


def test_not_json():
    with pytest.raises(SchemaError):
        loads("{nope")


def test_validation_errors_delegate():
    doc = json.loads(json.dumps(G_STAR_DOC))
    doc["choices"][1][0] = "a1"
    with pytest.raises(DuplicateChoiceName):
        loads(json.dumps(doc))
    doc = json.loads(json.dumps(G_STAR_DOC))
    doc["win"][0] = ["a2", "a1", "a3"]
    with pytest.raises(InvalidProfile):
        loads(json.dumps(doc))


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_game(tmp_path / "absent.json")


def _count(dot):
    lines = dot.splitlines()
    edges = [l for l in lines if " -- " in l]
    hubs = [l for l in lines if "shape=point" in l]
    nodes = [l for l in lines if l.startswith("    \"")]
    return len(nodes), len(hubs), len(edges)


def test_dot_examples(tmp_path):
    assert _count(to_dot(make_product((2, 3)))) == (5, 0, 6)
    assert _count(to_dot(G_STAR)) == (6, 4, 12)
    assert _count(to_dot(make_product((1, 3, 1), universal=False))) == (5, 0, 0)
    path = tmp_path / "g.dot"
    export_dot(G_STAR, path)
    assert path.read_text() == to_dot(G_STAR)


def test_dot_hub_names_avoid_choices():
    from wlc.core import build_game
    g = build_game([["w1"], ["x"], ["y"]], [("w1", "x", "y")])
    dot = to_dot(g)
    assert '"_w1" -- "w1"' in dot
