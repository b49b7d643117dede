"""JSON game documents and Graphviz DOT rendering.

Document layout::

    {"players": 2, "choices": [["a1", "b1"], ["a2", "b2"]],
     "win": [["a1", "a2"]], "meta": {"label": "..."}}

``meta`` is optional and free-form.  Saved files list winning profiles in
declaration order so that load followed by save reproduces the same bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import Game, build_game
from .errors import SchemaError


@dataclass
class GameDocument:
    game: Game
    meta: dict = field(default_factory=dict)


def _require(cond, message, pointer):
    if not cond:
        raise SchemaError(message, pointer)


def document_from_dict(data) -> GameDocument:
    """Check the document shape, pointing at the first offending element, then build the game."""
    _require(isinstance(data, dict), "document must be an object", "")
    for key in ("players", "choices", "win"):
        _require(key in data, f"missing required key {key!r}", "")
    unknown = set(data) - {"players", "choices", "win", "meta"}
    _require(not unknown, f"unexpected keys {sorted(unknown)}", "")

    n = data["players"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 1,
             "players must be a positive integer", "/players")
    choices = data["choices"]
    _require(isinstance(choices, list), "choices must be a list", "/choices")
    _require(len(choices) == n, f"expected {n} choice lists, got {len(choices)}", "/choices")
    for i, cs in enumerate(choices):
        _require(isinstance(cs, list), "choice list must be a list", f"/choices/{i}")
        for j, c in enumerate(cs):
            _require(isinstance(c, str) and c, "choice names must be nonempty strings", f"/choices/{i}/{j}")
    win = data["win"]
    _require(isinstance(win, list), "win must be a list", "/win")
    for k, t in enumerate(win):
        _require(isinstance(t, list), "winning profile must be a list", f"/win/{k}")
        _require(len(t) == n, f"profile has arity {len(t)}, expected {n}", f"/win/{k}")
        for i, c in enumerate(t):
            _require(isinstance(c, str), "profile entries must be strings", f"/win/{k}/{i}")
    meta = data.get("meta", {})
    _require(isinstance(meta, dict), "meta must be an object", "/meta")
    return GameDocument(build_game(choices, win), dict(meta))


def document_to_dict(game: Game, meta: dict | None = None) -> dict:
    out = {
        "players": game.n_players,
        "choices": [list(cs) for cs in game.choices],
        "win": [list(t) for t in game.sorted_win()],
    }
    if meta:
        out["meta"] = meta
    return out


def dumps(game: Game, meta: dict | None = None) -> str:
    return json.dumps(document_to_dict(game, meta), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> GameDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    return document_from_dict(data)


def load_document(path) -> GameDocument:
    return loads(Path(path).read_text(encoding="utf-8"))


def load_game(path) -> Game:
    return load_document(path).game


def save_game(game: Game, path, meta: dict | None = None) -> None:
    Path(path).write_text(dumps(game, meta), encoding="utf-8")


# --- DOT ----------------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(game: Game, name: str = "G") -> str:
    """Game graph in DOT: a bipartite graph for two players, otherwise one
    auxiliary node per winning profile joined to its members."""
    lines = [f"graph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for i, cs in enumerate(game.choices):
        lines.append(f"  subgraph cluster_p{i + 1} {{")
        lines.append(f'    label="player {i + 1}"; rank=same;')
        for c in cs:
            lines.append(f"    {_quote(c)};")
        lines.append("  }")
    profiles = game.sorted_win()
    if game.n_players == 2:
        for a, b in profiles:
            lines.append(f"  {_quote(a)} -- {_quote(b)};")
    else:
        prefix = "w"
        while any(c.startswith(prefix) for c in game.all_choices):
            prefix = "_" + prefix
        for k, t in enumerate(profiles):
            w = _quote(f"{prefix}{k + 1}")
            lines.append(f'  {w} [shape=point, label=""];')
            for c in t:
                lines.append(f"  {w} -- {_quote(c)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(game: Game, path, name: str = "G") -> None:
    Path(path).write_text(to_dot(game, name), encoding="utf-8")
