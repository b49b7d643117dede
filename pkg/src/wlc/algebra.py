"""Named game families and the algebraic expression language for them.

Grammar (whitespace insensitive)::

    expr    := term { "+" term }
    term    := [ INT ] atom
    atom    := product | "bar(" product ")" | "Z" INT | "O" INT | "(" expr ")"
    product := INT { ("x" | "×") INT } | INT "^" INT

``2x3`` is the universal game G(2×3), ``bar(1x3x1)`` the empty-relation game,
``Z3``/``O3`` the path and cycle games, ``A + B`` a disjoint union, ``3(A)``
three copies of ``A`` and ``1^4`` is shorthand for ``1x1x1x1``.  Generated
choices are named ``p<i>_c<j>`` (both 1-based).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence, Union

from .core import Game
from .errors import AllZero, BadSize, ParseError, PlayerCountMismatch


# --- expression tree ---------------------------------------------------------

@dataclass(frozen=True)
class Product:
    counts: tuple[int, ...]


@dataclass(frozen=True)
class EmptyProduct:
    counts: tuple[int, ...]


@dataclass(frozen=True)
class Power:
    base: int
    n: int


@dataclass(frozen=True)
class Path:
    k: int


@dataclass(frozen=True)
class Cycle:
    k: int


@dataclass(frozen=True)
class Sum:
    left: "GameExpr"
    right: "GameExpr"


@dataclass(frozen=True)
class Scale:
    m: int
    sub: "GameExpr"


GameExpr = Union[Product, EmptyProduct, Power, Path, Cycle, Sum, Scale]


# --- raw components ----------------------------------------------------------
# Games under construction may have players with zero choices (``1x2 + 1x0``),
# so composition works on (counts, index-tuple relation) pairs and only the
# finished result is turned into a validated Game.

def _product_parts(counts, universal):
    counts = tuple(counts)
    if any(k < 0 for k in counts):
        raise BadSize(f"negative choice count in {counts}")
    win = set(itertools.product(*(range(k) for k in counts))) if universal else set()
    return counts, win


def _path_parts(k):
    if k < 1:
        raise BadSize(f"Z_k needs k >= 1, got {k}")
    win = {(i, i) for i in range(k)} | {(i + 1, i) for i in range(k - 1)}
    return (k, k), win


def _cycle_parts(k):
    if k < 2:
        raise BadSize(f"O_k needs k >= 2, got {k}")
    win = {(i, i) for i in range(k)} | {((i + 1) % k, i) for i in range(k)}
    return (k, k), win


def _sum_parts(a, b):
    (ca, wa), (cb, wb) = a, b
    if len(ca) != len(cb):
        raise PlayerCountMismatch(f"cannot add a {len(ca)}-player game to a {len(cb)}-player game")
    shifted = {tuple(x + off for x, off in zip(t, ca)) for t in wb}
    return tuple(x + y for x, y in zip(ca, cb)), set(wa) | shifted


def _scale_parts(m, parts):
    if m < 1:
        raise BadSize(f"multiplier must be >= 1, got {m}")
    out = parts
    for _ in range(m - 1):
        out = _sum_parts(out, parts)
    return out


def _to_game(counts, win):
    if all(k == 0 for k in counts):
        raise AllZero(f"every choice count is zero in {counts}")
    for i, k in enumerate(counts):
        if k == 0:
            raise BadSize(f"player {i + 1} ends up with no choices")
    names = tuple(tuple(f"p{i + 1}_c{j + 1}" for j in range(k)) for i, k in enumerate(counts))
    return Game(names, frozenset(tuple(names[i][x] for i, x in enumerate(t)) for t in win))


def _game_parts(game: Game):
    index = {c: j for cs in game.choices for j, c in enumerate(cs)}
    return game.shape, {tuple(index[c] for c in t) for t in game.win}


# --- constructors --------------------------------------------------------------

def make_product(counts: Sequence[int], universal: bool = True) -> Game:
    """G(k1×…×kn) when ``universal``, otherwise the empty-relation variant."""
    if not counts:
        raise BadSize("a product needs at least one player")
    if all(k == 0 for k in counts):
        raise AllZero(f"every choice count is zero in {tuple(counts)}")
    return _to_game(*_product_parts(counts, universal))


def make_path(k: int) -> Game:
    return _to_game(*_path_parts(k))


def make_cycle(k: int) -> Game:
    return _to_game(*_cycle_parts(k))


def disjoint_union(g: Game, h: Game) -> Game:
    """G(A + B); choices are renamed apart, g's first."""
    return _to_game(*_sum_parts(_game_parts(g), _game_parts(h)))


def replicate(m: int, g: Game) -> Game:
    return _to_game(*_scale_parts(m, _game_parts(g)))


# --- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<INT>\d+)|(?P<BAR>bar)|(?P<X>[x×])|(?P<SYM>[\^+()ZO]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start,
                             ["INT", "x", "^", "+", "(", ")", "Z", "O", "bar("])
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "INT":
            tokens.append(("INT", int(m.group(kind)), start))
        elif kind == "SYM":
            tokens.append((m.group(kind), None, start))
        else:
            tokens.append((kind if kind == "BAR" else "x", None, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, ahead=0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def take(self, kind, expected=None):
        tok = self.peek()
        if tok[0] != kind:
            self.fail(expected or [kind])
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value, pos = self.peek()
        shown = "end of input" if kind == "EOF" else repr(value if kind == "INT" else kind)
        raise ParseError(f"unexpected {shown}", pos, [_SHOW.get(e, e) for e in expected])

    def expr(self):
        node = self.term()
        while self.peek()[0] == "+":
            self.i += 1
            node = Sum(node, self.term())
        return node

    def term(self):
        kind = self.peek()[0]
        if kind == "INT" and self.peek(1)[0] in ("INT", "(", "Z", "O", "BAR"):
            m = self.take("INT")[1]
            return Scale(m, self.atom())
        return self.atom()

    def atom(self):
        kind = self.peek()[0]
        if kind == "INT":
            return self.product()
        if kind == "BAR":
            self.i += 1
            self.take("(", ["("])
            p = self.product()
            self.take(")", [")", "x", "^"])
            counts = p.counts if isinstance(p, Product) else (p.base,) * p.n
            return EmptyProduct(counts)
        if kind in ("Z", "O"):
            self.i += 1
            k = self.take("INT", ["INT"])[1]
            return Path(k) if kind == "Z" else Cycle(k)
        if kind == "(":
            self.i += 1
            e = self.expr()
            self.take(")", [")", "+"])
            return e
        self.fail(["INT", "bar", "Z", "O", "("])

    def product(self):
        first = self.take("INT", ["INT"])[1]
        if self.peek()[0] == "^":
            self.i += 1
            n = self.take("INT", ["INT"])[1]
            return Power(first, n)
        counts = [first]
        while self.peek()[0] == "x":
            self.i += 1
            counts.append(self.take("INT", ["INT"])[1])
        return Product(tuple(counts))


_SHOW = {"BAR": "bar(", "EOF": "end of input"}


def parse_expression(text: str) -> GameExpr:
    p = _Parser(text)
    if p.peek()[0] == "EOF":
        p.fail(["INT", "bar", "Z", "O", "("])
    node = p.expr()
    if p.peek()[0] != "EOF":
        p.fail(["+", "end of input"])
    return node


def to_text(expr: GameExpr) -> str:
    """Pretty-print an expression so that ``parse_expression`` gives it back."""
    if isinstance(expr, Product):
        return "x".join(map(str, expr.counts))
    if isinstance(expr, EmptyProduct):
        return "bar(" + "x".join(map(str, expr.counts)) + ")"
    if isinstance(expr, Power):
        return f"{expr.base}^{expr.n}"
    if isinstance(expr, Path):
        return f"Z{expr.k}"
    if isinstance(expr, Cycle):
        return f"O{expr.k}"
    if isinstance(expr, Sum):
        right = to_text(expr.right)
        if isinstance(expr.right, Sum):
            right = f"({right})"
        return f"{to_text(expr.left)} + {right}"
    if isinstance(expr, Scale):
        return f"{expr.m}({to_text(expr.sub)})"
    raise TypeError(f"not a game expression: {expr!r}")


def _parts(expr):
    if isinstance(expr, Product):
        return _product_parts(expr.counts, True)
    if isinstance(expr, EmptyProduct):
        return _product_parts(expr.counts, False)
    if isinstance(expr, Power):
        if expr.n < 1:
            raise BadSize(f"power needs at least one player, got {expr.n}")
        return _product_parts((expr.base,) * expr.n, True)
    if isinstance(expr, Path):
        return _path_parts(expr.k)
    if isinstance(expr, Cycle):
        return _cycle_parts(expr.k)
    if isinstance(expr, Sum):
        return _sum_parts(_parts(expr.left), _parts(expr.right))
    if isinstance(expr, Scale):
        return _scale_parts(expr.m, _parts(expr.sub))
    raise TypeError(f"not a game expression: {expr!r}")


def evaluate(expr: GameExpr) -> Game:
    return _to_game(*_parts(expr))


def game_from_expression(text: str) -> Game:
    return evaluate(parse_expression(text))
