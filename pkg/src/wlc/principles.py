"""Principles as maximal permissible-choice maps, and collective iterated reasoning.

A principle is represented by the largest set of choices a compliant protocol
may select for each player.  Every constraint-style principle here admits every
nonempty subset of that set, so a principle solves a game exactly when the
product of its permissible sets lies inside the winning relation.

Base principles: FIR, NL, SW, IOC, IRC, ECS, EPS, ES, PR.  Combinators:
``Intersect(p, q)`` and ``Cir(p)``.  Every "if possible" filter falls back to
the player's whole choice set when it would leave nothing.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Union

from . import core
from .core import Game, product_subset, restrict
from .errors import InvalidProfile, ParseError
from .symmetry import choice_equivalence, structural_classes


@dataclass(frozen=True)
class Base:
    tag: str

    def __post_init__(self):
        if self.tag not in BASE_TAGS:
            raise ValueError(f"unknown base principle {self.tag!r}")


@dataclass(frozen=True)
class Intersect:
    left: "Principle"
    right: "Principle"


@dataclass(frozen=True)
class Cir:
    inner: "Principle"


Principle = Union[Base, Intersect, Cir]

BASE_TAGS = ("FIR", "NL", "SW", "IOC", "IRC", "ECS", "EPS", "ES", "PR")

FIR, NL, SW, IOC, IRC, ECS, EPS, ES, PR = (Base(t) for t in BASE_TAGS)
BIR = Intersect(NL, SW)
BIR_PLUS = Intersect(IOC, NL)
BCR = Cir(BIR)
COC = Cir(IOC)
CRC = Cir(IRC)

NAMED = {
    "FIR": FIR, "NL": NL, "SW": SW, "BIR": BIR, "BCR": BCR, "IOC": IOC,
    "BIR+": BIR_PLUS, "COC": COC, "IRC": IRC, "CRC": CRC,
    "ECS": ECS, "EPS": EPS, "ES": ES, "PR": PR,
}

INCOMPATIBLE = "IncompatiblePrinciples"


def cir(p: Principle) -> Cir:
    return p if isinstance(p, Cir) else Cir(p)


def normalize(p: Principle) -> Principle:
    if isinstance(p, Cir):
        inner = normalize(p.inner)
        return inner if isinstance(inner, Cir) else Cir(inner)
    if isinstance(p, Intersect):
        return Intersect(normalize(p.left), normalize(p.right))
    return p


def name_of(p: Principle) -> str:
    p = normalize(p)
    for name, q in NAMED.items():
        if q == p:
            return name
    if isinstance(p, Cir):
        return f"cir({name_of(p.inner)})"
    if isinstance(p, Intersect):
        return f"({name_of(p.left)}&{name_of(p.right)})"
    return p.tag


# --- surface syntax: NAME | cir(P) | P&Q | (P) ---------------------------------------

_PTOKEN = re.compile(r"\s*(BIR\+|[A-Za-z]+\+?|[&()])")


def parse_principle(text: str) -> Principle:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _PTOKEN.match(text, pos)
        if not m:
            where = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[where]!r}", where, ["principle name", "cir(", "&", "("])
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    tokens.append(("", len(text)))
    i = 0

    def expect(tok):
        nonlocal i
        if tokens[i][0] != tok:
            raise ParseError(f"unexpected {tokens[i][0] or 'end of input'!r}", tokens[i][1], [tok])
        i += 1

    def conj():
        node = atom()
        while tokens[i][0] == "&":
            expect("&")
            node = Intersect(node, atom())
        return node

    def atom():
        nonlocal i
        tok, at = tokens[i]
        if tok == "(":
            i += 1
            node = conj()
            expect(")")
            return node
        if tok.lower() == "cir":
            i += 1
            expect("(")
            node = conj()
            expect(")")
            return cir(node)
        if tok.upper() in NAMED:
            i += 1
            return NAMED[tok.upper()]
        raise ParseError(f"unknown principle {tok or 'end of input'!r}", at, sorted(NAMED) + ["cir(", "("])

    node = conj()
    if tokens[i][0]:
        raise ParseError(f"unexpected {tokens[i][0]!r}", tokens[i][1], ["&", "end of input"])
    return normalize(node)


# --- bad symmetries -------------------------------------------------------------------------

class SymmetryKind(enum.Enum):
    CHOICE = "choice"
    PLAYER = "player"
    FULL = "full"


def closure_sets(game: Game, profile, kind: SymmetryKind) -> tuple[frozenset, ...]:
    """Per-player sets a profile is indistinguishable from under ``kind``."""
    profile = tuple(profile)
    if kind is SymmetryKind.CHOICE:
        return tuple(choice_equivalence(game, i).cell_of(c) for i, c in enumerate(profile))
    classes = structural_classes(game)
    cells = [classes.cell_of(c) for c in profile]
    out = []
    for i, cs in enumerate(game.choices):
        mine = set(cs)
        if kind is SymmetryKind.FULL:
            seen = set().union(*cells)
        else:
            seen = set().union(*(cells[j] for j in range(len(cells)) if j != i)) | {profile[i]}
        out.append(frozenset(mine & seen))
    return tuple(out)


def exhibits_bad_symmetry(game: Game, profile, kind: SymmetryKind) -> bool:
    profile = tuple(profile)
    if len(profile) != game.n_players:
        raise InvalidProfile(f"profile {profile!r} has the wrong arity")
    for i, c in enumerate(profile):
        game._check_choice(i, c)
    memo = game._memo.setdefault(("bad", kind), {})
    hit = memo.get(profile)
    if hit is None:
        hit = memo[profile] = not product_subset(closure_sets(game, profile, kind), game.win)
    return hit


def generates_bad_symmetry(game: Game, choice: str, kind: SymmetryKind) -> bool:
    """Whether every profile containing ``choice`` exhibits a bad symmetry of ``kind``."""
    i = game.owner(choice)
    memo = game._memo.setdefault(("generates", kind), {})
    hit = memo.get(choice)
    if hit is None:
        others = list(game.choices)
        others[i] = (choice,)
        hit = memo[choice] = all(exhibits_bad_symmetry(game, p, kind)
                                 for p in itertools.product(*others))
    return hit


# --- permissible sets -----------------------------------------------------------------------

def _fallback(subset, cs):
    return frozenset(subset) if subset else frozenset(cs)


def _base_sets(tag: str, game: Game) -> tuple[frozenset, ...]:
    out = []
    for i, cs in enumerate(game.choices):
        if tag == "FIR":
            winning = core.surely_winning(game, i)
            s = frozenset(cs) - core.surely_losing(game, i) if winning else frozenset(cs)
        elif tag == "NL":
            s = _fallback(frozenset(cs) - core.surely_losing(game, i), cs)
        elif tag == "SW":
            s = _fallback(core.surely_winning(game, i), cs)
        elif tag == "IOC":
            s = _fallback(core.optimal_choices(game, i), cs)
        elif tag == "IRC":
            s = core.undominated_choices(game, i)
        elif tag == "PR":
            best = max(core.degree(game, c) for c in cs)
            s = frozenset(c for c in cs if core.degree(game, c) == best)
        else:
            kind = {"ECS": SymmetryKind.CHOICE, "EPS": SymmetryKind.PLAYER, "ES": SymmetryKind.FULL}[tag]
            s = _fallback([c for c in cs if not generates_bad_symmetry(game, c, kind)], cs)
        out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Stage:
    game: Game
    sets: tuple[frozenset, ...]

    @property
    def shrinks(self) -> bool:
        return any(len(s) < len(cs) for s, cs in zip(self.sets, self.game.choices))


@dataclass(frozen=True)
class ReductionTrace:
    principle: Principle
    stages: tuple[Stage, ...]

    @property
    def iterations(self) -> int:
        """Number of shrinking rounds before the fixed point."""
        return len(self.stages) - 1

    @property
    def final(self) -> Game:
        return self.stages[-1].game


@dataclass(frozen=True)
class Assignment:
    sets: tuple[frozenset, ...]
    flags: frozenset = frozenset()
    trace: ReductionTrace | None = None


def assignment(p: Principle, game: Game) -> Assignment:
    """Permissible sets of ``p`` for every player of ``game``."""
    p = normalize(p)
    key = ("assignment", p)
    hit = game._memo.get(key)
    if hit is not None:
        return hit
    if isinstance(p, Base):
        result = Assignment(_base_sets(p.tag, game))
    elif isinstance(p, Intersect):
        a, b = assignment(p.left, game), assignment(p.right, game)
        sets, flags = [], set(a.flags | b.flags)
        for cs, x, y in zip(game.choices, a.sets, b.sets):
            both = x & y
            if not both:
                flags.add(INCOMPATIBLE)
                both = frozenset(cs)
            sets.append(both)
        result = Assignment(tuple(sets), frozenset(flags))
    elif isinstance(p, Cir):
        trace, flags = _reduce(p.inner, game)
        result = Assignment(trace.stages[-1].sets, flags, trace)
    else:
        raise TypeError(f"not a principle: {p!r}")
    game._memo[key] = result
    return result


def _reduce(p: Principle, game: Game):
    stages = []
    flags = set()
    g = game
    while True:
        a = assignment(p, g)
        flags |= a.flags
        stage = Stage(g, a.sets)
        stages.append(stage)
        if not stage.shrinks:
            return ReductionTrace(p, tuple(stages)), frozenset(flags)
        g = restrict(g, a.sets)


def cir_reduce(p: Principle, game: Game) -> ReductionTrace:
    """Iterate ``p``'s permissible map, restricting the game each round, to a fixed point."""
    p = normalize(p)
    if isinstance(p, Cir):
        p = p.inner
    return _reduce(p, game)[0]


def permissible(p: Principle, game: Game, player: int) -> frozenset:
    game._check_player(player)
    return assignment(p, game).sets[player]


def solves(p: Principle, game: Game) -> bool:
    return product_subset(assignment(p, game).sets, game.win)
