"""Win-lose coordination games as relational structures.

A game has ``n`` players, each owning an ordered, nonempty list of choice
names, and a winning relation: a set of ``n``-tuples of choices, the i-th entry
drawn from player i's choices.  Choice names are unique across players, so a
choice identifies its owner.  Players are indexed from 0.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateChoiceName,
    EmptyChoiceSet,
    EmptyRestriction,
    InvalidProfile,
    SamePlayerViolation,
    UnknownChoice,
)

Profile = tuple
ProfileSet = frozenset
ChoiceSet = frozenset


class ChoiceStatus(enum.Enum):
    SURELY_WINNING = "surely-winning"
    SURELY_LOSING = "surely-losing"
    CONTINGENT = "contingent"


class Comparison(enum.Enum):
    BETTER = "better"
    WORSE = "worse"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class Game:
    """Equality ignores the declaration order of each player's choices."""

    choices: tuple[tuple[str, ...], ...]
    win: frozenset[tuple[str, ...]]
    # per-instance memo for derived data (extensions, symmetry partitions, ...)
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.choices:
            raise EmptyChoiceSet("a game needs at least one player")
        owner = {}
        position = {}
        for i, cs in enumerate(self.choices):
            if not cs:
                raise EmptyChoiceSet(f"player {i} has no choices")
            for j, c in enumerate(cs):
                if not isinstance(c, str) or not c:
                    raise DuplicateChoiceName(f"choice names must be nonempty strings, got {c!r}")
                if c in owner:
                    raise DuplicateChoiceName(f"choice {c!r} declared twice")
                owner[c] = i
                position[c] = j
        n = len(self.choices)
        for t in self.win:
            if len(t) != n:
                raise InvalidProfile(f"profile {t!r} has arity {len(t)}, expected {n}")
            for i, c in enumerate(t):
                if owner.get(c) != i:
                    raise InvalidProfile(f"entry {i} of {t!r} is not a choice of player {i}")
        object.__setattr__(self, "_owner", owner)
        object.__setattr__(self, "_position", position)

    def _identity(self):
        return tuple(frozenset(cs) for cs in self.choices), self.win

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self):
        return hash(self._identity())

    @property
    def n_players(self) -> int:
        return len(self.choices)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(cs) for cs in self.choices)

    @property
    def all_choices(self) -> tuple[str, ...]:
        return tuple(c for cs in self.choices for c in cs)

    def owner(self, choice: str) -> int:
        try:
            return self._owner[choice]
        except KeyError:
            raise UnknownChoice(f"unknown choice {choice!r}") from None

    def position(self, choice: str) -> int:
        """Index of ``choice`` within its owner's declared choice list."""
        self.owner(choice)
        return self._position[choice]

    def __contains__(self, choice) -> bool:
        return choice in self._owner

    def profiles(self) -> Iterator[tuple[str, ...]]:
        return itertools.product(*self.choices)

    def n_profiles(self) -> int:
        total = 1
        for cs in self.choices:
            total *= len(cs)
        return total

    def is_winning(self, profile: Sequence[str]) -> bool:
        return tuple(profile) in self.win

    def sorted_win(self) -> list[tuple[str, ...]]:
        """Winning profiles ordered by declaration position of their entries."""
        return sorted(self.win, key=lambda t: tuple(self._position[c] for c in t))

    def sort_choices(self, cs: Iterable[str]) -> list[str]:
        return sorted(cs, key=lambda c: (self._owner[c], self._position[c]))

    def _check_player(self, player: int) -> None:
        if not isinstance(player, int) or not 0 <= player < self.n_players:
            raise IndexError(f"player index {player!r} out of range for {self.n_players} players")

    def _check_choice(self, player: int, choice: str) -> None:
        self._check_player(player)
        if self.owner(choice) != player:
            raise UnknownChoice(f"{choice!r} is not a choice of player {player}")


def build_game(choice_sets: Sequence[Sequence[str]], winning_profiles: Iterable[Sequence[str]]) -> Game:
    """Validate and build a game; duplicate winning profiles are merged."""
    choices = tuple(tuple(cs) for cs in choice_sets)
    win = frozenset(tuple(p) for p in winning_profiles)
    return Game(choices, win)


def _extensions(game: Game) -> dict[str, frozenset]:
    ext = game._memo.get("ext")
    if ext is None:
        buckets = {c: set() for c in game.all_choices}
        for t in game.win:
            for i, c in enumerate(t):
                buckets[c].add(t[:i] + t[i + 1:])
        ext = {c: frozenset(s) for c, s in buckets.items()}
        game._memo["ext"] = ext
    return ext


def _others_size(game: Game, player: int) -> int:
    total = 1
    for j, cs in enumerate(game.choices):
        if j != player:
            total *= len(cs)
    return total


def winning_extension(game: Game, player: int, choice: str) -> ProfileSet:
    """Tuples of the other players' choices that win together with ``choice``."""
    game._check_choice(player, choice)
    return _extensions(game)[choice]


def losing_extension(game: Game, player: int, choice: str) -> ProfileSet:
    game._check_choice(player, choice)
    others = [cs for j, cs in enumerate(game.choices) if j != player]
    return frozenset(itertools.product(*others)) - _extensions(game)[choice]


def degree(game: Game, choice: str) -> int:
    return len(_extensions(game)[choice])


def choice_status(game: Game, player: int, choice: str) -> ChoiceStatus:
    ext = winning_extension(game, player, choice)
    if len(ext) == _others_size(game, player):
        return ChoiceStatus.SURELY_WINNING
    if not ext:
        return ChoiceStatus.SURELY_LOSING
    return ChoiceStatus.CONTINGENT


def surely_winning(game: Game, player: int) -> ChoiceSet:
    full = _others_size(game, player)
    ext = _extensions(game)
    return frozenset(c for c in game.choices[player] if len(ext[c]) == full)


def surely_losing(game: Game, player: int) -> ChoiceSet:
    ext = _extensions(game)
    return frozenset(c for c in game.choices[player] if not ext[c])


def compare_choices(game: Game, player: int, c: str, c2: str) -> Comparison:
    """Weak-dominance comparison of two choices of the same player."""
    game._check_player(player)
    if game.owner(c) != player or game.owner(c2) != player:
        raise SamePlayerViolation(f"{c!r} and {c2!r} are not both choices of player {player}")
    e1, e2 = _extensions(game)[c], _extensions(game)[c2]
    if e1 == e2:
        return Comparison.EQUIVALENT
    if e2 < e1:
        return Comparison.BETTER
    if e1 < e2:
        return Comparison.WORSE
    return Comparison.INCOMPARABLE


def optimal_choices(game: Game, player: int) -> ChoiceSet:
    """Choices whose winning extension contains every other choice's extension."""
    game._check_player(player)
    ext = _extensions(game)
    cs = game.choices[player]
    return frozenset(c for c in cs if all(ext[d] <= ext[c] for d in cs))


def undominated_choices(game: Game, player: int) -> ChoiceSet:
    """Choices that no other choice of the player is better than."""
    game._check_player(player)
    ext = _extensions(game)
    cs = game.choices[player]
    return frozenset(c for c in cs if not any(ext[c] < ext[d] for d in cs))


def restrict(game: Game, kept: Sequence[Iterable[str]]) -> Game:
    """Restriction of ``game`` to the given per-player subsets (declaration order kept)."""
    if len(kept) != game.n_players:
        raise InvalidProfile(f"need {game.n_players} kept sets, got {len(kept)}")
    keep = []
    for i, ks in enumerate(kept):
        ks = set(ks)
        if not ks:
            raise EmptyRestriction(f"restriction leaves player {i} without choices")
        for c in ks:
            game._check_choice(i, c)
        keep.append(ks)
    choices = tuple(tuple(c for c in cs if c in ks) for cs, ks in zip(game.choices, keep))
    win = frozenset(t for t in game.win if all(c in ks for c, ks in zip(t, keep)))
    return Game(choices, win)


def complement(game: Game) -> Game:
    """Same choices; winning and losing profiles swapped."""
    return Game(game.choices, frozenset(game.profiles()) - game.win)


def product_subset(sets: Sequence[Iterable[str]], win: frozenset) -> bool:
    """Whether every profile of the Cartesian product of ``sets`` is in ``win``."""
    return all(p in win for p in itertools.product(*sets))
