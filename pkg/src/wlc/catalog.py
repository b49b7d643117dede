"""Named games from the literature figures, with their original choice names.

Choices of player ``i`` are written ``a<i>, b<i>, ...`` from the top of each
drawing down; players are 1-based in names only.
"""

from __future__ import annotations

from .algebra import game_from_expression
from .core import Game, build_game


def _two_player(p1: str, p2: str, edges: str) -> Game:
    """``edges`` is a space separated list of ``x-y`` pairs of choice letters."""
    c1 = [f"{x}1" for x in p1]
    c2 = [f"{x}2" for x in p2]
    win = [(f"{a}1", f"{b}2") for a, b in (e.split("-") for e in edges.split())]
    return build_game([c1, c2], win)


# three robbers: crowbar (player 1), ladder (player 2), lantern (player 3)
G_STAR = build_game(
    [["a1", "b1"], ["a2", "b2"], ["a3", "b3"]],
    [("a1", "a2", "a3"), ("a1", "a2", "b3"), ("a1", "b2", "b3"), ("b1", "b2", "b3")],
)

# four players; solved by collective optimal choices but not by weak dominance
G_STAR_STAR = build_game(
    [["a1", "b1"], ["a2", "b2"], ["a3", "b3"], ["a4", "b4"]],
    [
        ("a1", "a2", "a3", "a4"),
        ("b1", "b2", "b3", "b4"),
        ("a1", "a2", "a3", "b4"),
        ("a1", "b2", "b3", "b4"),
        ("a1", "a2", "b3", "b4"),
    ],
)

G_SIGMA = _two_player("abc", "abc", "a-a a-b c-c c-b")
G_SHARP = _two_player("abcd", "abcd", "a-b b-a b-b b-c c-c c-b c-d d-c")

Z2 = _two_player("ab", "ab", "a-a b-a b-b")
Z3 = _two_player("abc", "abc", "a-a b-a b-b c-b c-c")
Z2_PLUS_BAR11 = _two_player("abc", "abc", "a-a b-a b-b")
ONE_PLUS_BAR11 = _two_player("ab", "ab", "a-a")
ONE_TWO_PLUS_TWO_ONE = _two_player("abc", "abc", "a-a a-b b-c c-c")
ONE_PLUS_ONE_TWO_PLUS_TWO_ONE = _two_player("abcd", "abcd", "a-a b-b b-c c-d d-d")
ONE_PLUS_TWO_ONE_TWO = _two_player("abc", "abcde", "a-a b-b b-c c-d c-e")
O3 = _two_player("abc", "abc", "a-a a-b b-a b-c c-c c-b")
O3_PLUS_ONE = _two_player("abcd", "abcd", "a-a a-b b-a b-c c-c c-b d-d")
O5_WITH_DIAGONAL = _two_player("abcde", "abcde", "a-a a-b b-a b-c c-b c-c c-d d-c d-e e-e e-d")

# the two unnamed rows of the independence table for ECS / EPS / CRC
TABLE_SW_GAME = _two_player("ab", "abc", "a-a b-b b-a b-c")
TABLE_PATH_GAME = _two_player("ab", "abc", "a-a a-b b-c b-b")

GAMES = {
    "G*": G_STAR,
    "G**": G_STAR_STAR,
    "G_Sigma": G_SIGMA,
    "G_#": G_SHARP,
    "Z2": Z2,
    "Z3": Z3,
    "Z2+bar(1x1)": Z2_PLUS_BAR11,
    "1x1+bar(1x1)": ONE_PLUS_BAR11,
    "1x2+2x1": ONE_TWO_PLUS_TWO_ONE,
    "1x1+1x2+2x1": ONE_PLUS_ONE_TWO_PLUS_TWO_ONE,
    "1x1+2(1x2)": ONE_PLUS_TWO_ONE_TWO,
    "O3": O3,
    "O3+1x1": O3_PLUS_ONE,
    "O5+diagonal": O5_WITH_DIAGONAL,
    "table-SW": TABLE_SW_GAME,
    "table-path": TABLE_PATH_GAME,
}


def named(name: str) -> Game:
    """A catalogue game by name, or any game expression such as ``"1x1 + 2(2x2)"``."""
    if name in GAMES:
        return GAMES[name]
    return game_from_expression(name)
