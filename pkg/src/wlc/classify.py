"""Game-level classification: solvability reports, structural indeterminacy,
the canonical structural protocol, and corpus enumeration."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import Game, product_subset
from .errors import Indeterminate, SizeLimitExceeded
from .principles import (
    NAMED,
    ReductionTrace,
    SymmetryKind,
    assignment,
    closure_sets,
    exhibits_bad_symmetry,
)
from .symmetry import brute_force_structural_classes, canonical_form, canonical_key

PRINCIPLE_ORDER = ("FIR", "NL", "SW", "BIR", "BCR", "IOC", "BIR+", "COC", "IRC", "CRC", "ECS", "EPS", "ES", "PR")

UNWINNABLE = "Unwinnable"


@dataclass(frozen=True)
class Verdict:
    principle: str
    solved: bool
    sets: tuple[frozenset, ...]
    trace: ReductionTrace | None = None
    flags: frozenset = frozenset()


@dataclass
class SolvabilityReport:
    game: Game
    verdicts: dict[str, Verdict]
    structurally_indeterminate: bool
    unwinnable: bool
    canonical_choice_sets: tuple[frozenset, ...] | None
    flags: frozenset = field(default_factory=frozenset)

    def solved_by(self) -> set[str]:
        return {name for name, v in self.verdicts.items() if v.solved}

    def to_dict(self) -> dict:
        g = self.game

        def listed(sets):
            return [g.sort_choices(s) for s in sets]

        verdicts = {}
        for name, v in self.verdicts.items():
            entry = {"solved": v.solved, "permissible": listed(v.sets), "flags": sorted(v.flags)}
            if v.trace is not None:
                entry["iterations"] = v.trace.iterations
                entry["trace"] = [listed(stage.sets) for stage in v.trace.stages]
            verdicts[name] = entry
        return {
            "players": g.n_players,
            "shape": list(g.shape),
            "verdicts": verdicts,
            "solved_by": [n for n in self.verdicts if self.verdicts[n].solved],
            "structurally_indeterminate": self.structurally_indeterminate,
            "unwinnable": self.unwinnable,
            "canonical_choice_sets": None if self.canonical_choice_sets is None
            else listed(self.canonical_choice_sets),
            "flags": sorted(self.flags),
        }


def is_structurally_indeterminate(game: Game) -> bool:
    """Every winning profile exhibits a bad symmetry; false for unwinnable games."""
    if not game.win:
        return False
    return all(exhibits_bad_symmetry(game, t, SymmetryKind.FULL) for t in game.win)


def canonical_assignment(game: Game) -> tuple[frozenset, ...]:
    """Choice sets of the canonical structural protocol for every player.

    The winning profiles are ordered by their image in the minimal encoding of
    the game; the first one without a bad symmetry is taken and each player
    gets every choice structurally equivalent to one of its entries.  The
    result does not depend on choice names or player order.
    """
    hit = game._memo.get("canonical_assignment")
    if hit is not None:
        return hit
    if not game.win:
        raise Indeterminate("the game has no winning profile")
    form = canonical_form(game)
    for t in sorted(game.win, key=form.profile_key):
        if not exhibits_bad_symmetry(game, t, SymmetryKind.FULL):
            sets = closure_sets(game, t, SymmetryKind.FULL)
            game._memo["canonical_assignment"] = sets
            return sets
    raise Indeterminate("every winning profile exhibits a bad symmetry")


def canonical_protocol(game: Game, player: int) -> frozenset:
    game._check_player(player)
    return canonical_assignment(game)[player]


def brute_force_structural_solvable(game: Game, max_choices: int = 12) -> bool:
    """Whether some renaming-invariant assignment of choice sets wins; exhaustive oracle.

    A per-player assignment is invariant under every full self-renaming exactly
    when its union is a union of structural classes, so candidates are unions
    of classes, tried smallest first.  Classes come from enumerating all
    renamings, independent of the pruned search.
    """
    if len(game.all_choices) > max_choices:
        raise SizeLimitExceeded(f"brute force limited to {max_choices} choices")
    if not game.win:
        return False
    classes = [set(cell) for cell in brute_force_structural_classes(game)]
    for r in range(1, len(classes) + 1):
        for combo in itertools.combinations(classes, r):
            chosen = set().union(*combo)
            sets = [chosen.intersection(cs) for cs in game.choices]
            if all(sets) and product_subset(sets, game.win):
                return True
    return False


def classify(game: Game, principles: Sequence[str] = PRINCIPLE_ORDER) -> SolvabilityReport:
    verdicts = {}
    flags = set()
    for name in principles:
        a = assignment(NAMED[name], game)
        verdicts[name] = Verdict(name, product_subset(a.sets, game.win), a.sets, a.trace, a.flags)
        flags |= a.flags
    unwinnable = not game.win
    if unwinnable:
        flags.add(UNWINNABLE)
    indeterminate = is_structurally_indeterminate(game)
    canonical = None if unwinnable or indeterminate else canonical_assignment(game)
    return SolvabilityReport(game, verdicts, indeterminate, unwinnable, canonical, frozenset(flags))


# --- corpora ------------------------------------------------------------------------------

RAW_LIMIT = 1 << 20


def _relations(shape: Sequence[int]) -> Iterator[Game]:
    names = tuple(tuple(f"p{i + 1}_c{j + 1}" for j in range(k)) for i, k in enumerate(shape))
    profiles = list(itertools.product(*names))
    if (1 << len(profiles)) > RAW_LIMIT:
        raise SizeLimitExceeded(f"shape {tuple(shape)} has 2^{len(profiles)} winning relations")
    for mask in range(1 << len(profiles)):
        yield Game(names, frozenset(p for b, p in enumerate(profiles) if mask >> b & 1))


def enumerate_shape(shape: Sequence[int]) -> Iterator[Game]:
    """One game per isomorphism class among all winning relations on ``shape``."""
    seen = set()
    for g in _relations(shape):
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            yield g


def _caps(players: int, max_choices) -> tuple[int, ...]:
    if isinstance(max_choices, int):
        return (max_choices,) * players
    caps = tuple(max_choices)
    if len(caps) != players:
        raise ValueError(f"need {players} caps, got {len(caps)}")
    return caps


def enumerate_games(players: int, max_choices) -> Iterator[Game]:
    """One game per isomorphism class over every shape with 1..cap choices per player."""
    caps = _caps(players, max_choices)
    seen_keys = set()
    seen_shapes = set()
    for shape in itertools.product(*(range(1, k + 1) for k in caps)):
        if tuple(sorted(shape)) in seen_shapes:
            continue
        seen_shapes.add(tuple(sorted(shape)))
        for g in _relations(shape):
            key = canonical_key(g)
            if key not in seen_keys:
                seen_keys.add(key)
                yield g


def sample_games(players: int, count: int, max_choices=3, seed: int = 0,
                 exclude: set | None = None, min_choices: int = 1) -> list[Game]:
    """``count`` pairwise non-isomorphic random games, none isomorphic to a key in ``exclude``."""
    rng = random.Random(seed)
    caps = _caps(players, max_choices)
    seen = set(exclude or ())
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count + 1000:
            raise RuntimeError(f"could only find {len(out)} new isomorphism classes")
        shape = tuple(rng.randint(min_choices, k) for k in caps)
        names = tuple(tuple(f"p{i + 1}_c{j + 1}" for j in range(k)) for i, k in enumerate(shape))
        density = rng.uniform(0.15, 0.85)
        win = frozenset(p for p in itertools.product(*names) if rng.random() < density)
        g = Game(names, win)
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out
