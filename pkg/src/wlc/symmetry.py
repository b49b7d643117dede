"""Renamings of games: automorphisms, player renamings and full renamings.

A :class:`Renaming` ``(beta, pi)`` from ``g`` to ``h`` sends player ``i`` of
``g`` to player ``beta[i]`` of ``h`` and every choice ``c`` of ``g`` to
``pi[c]``, a choice of player ``beta[owner(c)]`` in ``h``.  It is a full
renaming when the image of ``g``'s winning relation is exactly ``h``'s.
Automorphisms (choice-renamings of a game onto itself) are the self-renamings
with identity ``beta``.

Searches run a backtracking matcher over choices pruned by colour refinement
(the 1-dimensional Weisfeiler-Leman refinement of the winning hypergraph).
Orbits are merged with union-find over every renaming found.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .core import Game, degree
from .errors import MalformedRenaming, SizeLimitExceeded

DEFAULT_SIZE_LIMIT = 10**8


def size_limit() -> int:
    """Search cap; ``WLC_SIZE_LIMIT`` in the environment overrides the default."""
    env = os.environ.get("WLC_SIZE_LIMIT")
    if env:
        try:
            return int(float(env))
        except ValueError:
            raise ValueError(f"WLC_SIZE_LIMIT must be a number, got {env!r}") from None
    return DEFAULT_SIZE_LIMIT


@dataclass(frozen=True)
class Renaming:
    beta: tuple[int, ...]
    pi: tuple[tuple[str, str], ...]

    @classmethod
    def make(cls, beta: Sequence[int], pi: Mapping[str, str]) -> "Renaming":
        return cls(tuple(beta), tuple(sorted(pi.items())))

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pi)

    def __call__(self, choice: str) -> str:
        return self.mapping[choice]

    @property
    def is_choice_renaming(self) -> bool:
        return all(b == i for i, b in enumerate(self.beta))

    def image(self, choices: Iterable[str]) -> frozenset:
        m = self.mapping
        return frozenset(m[c] for c in choices)

    def map_profile(self, profile: Sequence[str]) -> tuple[str, ...]:
        m = self.mapping
        out = [None] * len(profile)
        for i, c in enumerate(profile):
            out[self.beta[i]] = m[c]
        return tuple(out)

    def then(self, other: "Renaming") -> "Renaming":
        """``other`` after ``self``."""
        m1, m2 = self.mapping, other.mapping
        return Renaming.make([other.beta[b] for b in self.beta], {c: m2[d] for c, d in m1.items()})

    def inverse(self) -> "Renaming":
        inv_beta = [0] * len(self.beta)
        for i, b in enumerate(self.beta):
            inv_beta[b] = i
        return Renaming.make(inv_beta, {d: c for c, d in self.pi})


ChoiceRenaming = Renaming
FullRenaming = Renaming


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty cells covering a universe, ordered by first occurrence."""

    cells: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {c: k for k, cell in enumerate(self.cells) for c in cell})

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def cell_of(self, choice: str) -> frozenset:
        return frozenset(self.cells[self._index[choice]])

    def cell_index(self, choice: str) -> int:
        return self._index[choice]

    def as_sets(self) -> set[frozenset]:
        return {frozenset(cell) for cell in self.cells}


def _partition(universe: Sequence[str], find) -> Partition:
    groups: dict = {}
    for c in universe:
        groups.setdefault(find(c), []).append(c)
    return Partition(tuple(tuple(cell) for cell in groups.values()))


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


# --- elementary transformations ------------------------------------------------

def permute_players(game: Game, beta: Sequence[int]) -> Game:
    """The game whose player ``beta[i]`` is ``game``'s player ``i`` (names kept)."""
    n = game.n_players
    choices = [None] * n
    for i, b in enumerate(beta):
        choices[b] = game.choices[i]
    win = set()
    for t in game.win:
        out = [None] * n
        for i, c in enumerate(t):
            out[beta[i]] = c
        win.add(tuple(out))
    return Game(tuple(choices), frozenset(win))


def apply_renaming(game: Game, r: Renaming) -> Game:
    """Rename players by ``beta`` and choices by ``pi``."""
    n = game.n_players
    if sorted(r.beta) != list(range(n)):
        raise MalformedRenaming(f"beta {r.beta} is not a permutation of {n} players")
    m = r.mapping
    if set(m) != set(game.all_choices):
        raise MalformedRenaming("pi must be defined on exactly the game's choices")
    if len(set(m.values())) != len(m):
        raise MalformedRenaming("pi is not injective")
    choices = [None] * n
    for i, cs in enumerate(game.choices):
        choices[r.beta[i]] = tuple(m[c] for c in cs)
    return Game(tuple(choices), frozenset(r.map_profile(t) for t in game.win))


def identity_renaming(game: Game) -> Renaming:
    return Renaming.make(range(game.n_players), {c: c for c in game.all_choices})


def is_full_renaming(g: Game, h: Game, r: Renaming) -> bool:
    try:
        return apply_renaming(g, r) == h
    except (MalformedRenaming, ValueError):
        return False


# --- colour refinement ------------------------------------------------------------

def _rank(colourings):
    values = sorted({v for col in colourings for v in col.values()})
    rank = {v: k for k, v in enumerate(values)}
    return [{c: rank[v] for c, v in col.items()} for col in colourings], len(values)


def _refine(games: Sequence[Game], initial: Sequence[Mapping[str, object]]):
    """Jointly refine colourings of several games with equal player counts until stable.

    Colours are ranks of sorted signatures, so equal inputs up to renaming give
    equal colours and the colour order only ever gets finer.
    """
    cols, count = _rank(initial)
    while True:
        sigs = []
        for g, col in zip(games, cols):
            inc = {c: [] for c in g.all_choices}
            for t in g.win:
                key = tuple(col[x] for x in t)
                for c in t:
                    inc[c].append(key)
            sigs.append({c: (col[c], tuple(sorted(inc[c]))) for c in g.all_choices})
        new, new_count = _rank(sigs)
        if new_count == count:
            return new
        cols, count = new, new_count


def _base_colours(game: Game, marks: Mapping[str, int] = None):
    marks = marks or {}
    return {c: (game.owner(c), marks.get(c, 0), degree(game, c)) for c in game.all_choices}


def _estimate(colours: Mapping[str, int]) -> int:
    total = 1
    for size in Counter(colours.values()).values():
        total *= math.factorial(size)
    return total


# --- isomorphism search -------------------------------------------------------------

class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise SizeLimitExceeded(f"symmetry search exceeded {self.limit} steps "
                                    "(raise WLC_SIZE_LIMIT to allow more)")


def _isomorphisms(src: Game, dst: Game, fixed: Sequence[tuple[str, str]] = (),
                  budget: _Budget = None, check_estimate: bool = False) -> Iterator[dict]:
    """Player-preserving choice bijections ``src -> dst`` carrying win onto win."""
    if src.shape != dst.shape or len(src.win) != len(dst.win):
        return
    budget = budget or _Budget(size_limit())
    smarks = {c: k + 1 for k, (c, _) in enumerate(fixed)}
    dmarks = {d: k + 1 for k, (_, d) in enumerate(fixed)}
    if len(smarks) != len(fixed) or len(dmarks) != len(fixed):
        return
    for c, d in fixed:
        if src.owner(c) != dst.owner(d):
            return
    scol, dcol = _refine([src, dst], [_base_colours(src, smarks), _base_colours(dst, dmarks)])
    if Counter(scol.values()) != Counter(dcol.values()):
        return
    if check_estimate and _estimate(scol) > budget.limit:
        raise SizeLimitExceeded(f"automorphism group may have up to {_estimate(scol)} elements, "
                                f"above the limit {budget.limit}")

    yield from _search(src, dst, scol, dcol, budget)


def _search(src: Game, dst: Game, scol: dict, dcol: dict, budget: _Budget) -> Iterator[dict]:
    """Individualise one choice of the smallest non-singleton cell, refine, recurse.

    Refinement is invariant under isomorphism, so every isomorphism survives in
    exactly one branch and each discrete leaf is checked against the relation.
    """
    sizes = Counter(scol.values())
    open_cells = [k for k, n in sizes.items() if n > 1]
    if not open_cells:
        back = {k: d for d, k in dcol.items()}
        m = {c: back[k] for c, k in scol.items()}
        if all(tuple(m[x] for x in t) in dst.win for t in src.win):
            yield m
        return
    target = min(open_cells, key=lambda k: (sizes[k], k))
    c = next(x for x in src.all_choices if scol[x] == target)
    for d in dst.all_choices:
        if dcol[d] != target:
            continue
        budget.spend()
        ns, nd = _refine([src, dst], [{x: (k, x != c) for x, k in scol.items()},
                                      {x: (k, x != d) for x, k in dcol.items()}])
        if Counter(ns.values()) == Counter(nd.values()):
            yield from _search(src, dst, ns, nd, budget)


def _betas(g: Game, h: Game) -> Iterator[tuple[int, ...]]:
    """Player permutations compatible with the choice-set sizes."""
    if g.n_players != h.n_players:
        return
    for beta in itertools.permutations(range(g.n_players)):
        if all(g.shape[i] == h.shape[b] for i, b in enumerate(beta)):
            yield beta


def automorphisms(game: Game) -> list[Renaming]:
    """Every choice-renaming of ``game`` onto itself, identity first."""
    budget = _Budget(size_limit())
    ident = tuple(range(game.n_players))
    found = [Renaming.make(ident, m) for m in _isomorphisms(game, game, budget=budget, check_estimate=True)]
    return sorted(found, key=lambda r: _sort_key(game, r))


def full_renamings(g: Game, h: Game) -> list[Renaming]:
    """All full renamings from ``g`` to ``h``; empty when the games are not isomorphic."""
    budget = _Budget(size_limit())
    out = []
    for beta in _betas(g, h):
        mid = permute_players(g, beta)
        out.extend(Renaming.make(beta, m)
                   for m in _isomorphisms(mid, h, budget=budget, check_estimate=True))
    return sorted(out, key=lambda r: _sort_key(g, r))


def _sort_key(g: Game, r: Renaming):
    m = r.mapping
    return r.beta, tuple(m[c] for c in g.all_choices)


def find_full_renaming(g: Game, h: Game, fixed: Sequence[tuple[str, str]] = ()) -> Renaming | None:
    """Some full renaming ``g -> h`` sending each ``c`` to ``d`` for ``(c, d)`` in ``fixed``."""
    budget = _Budget(size_limit())
    for beta in _betas(g, h):
        if any(beta[g.owner(c)] != h.owner(d) for c, d in fixed if c in g and d in h):
            continue
        mid = permute_players(g, beta)
        for m in _isomorphisms(mid, h, fixed=fixed, budget=budget):
            return Renaming.make(beta, m)
    return None


def are_isomorphic(g: Game, h: Game) -> bool:
    return find_full_renaming(g, h) is not None


# --- orbits ----------------------------------------------------------------------------

def _orbits(game: Game, allow_player_swaps: bool) -> Partition:
    uf = UnionFind(game.all_choices)
    budget = _Budget(size_limit())
    choices = game.all_choices
    ident = (tuple(range(game.n_players)),)
    betas = list(_betas(game, game)) if allow_player_swaps else ident
    for a, c in enumerate(choices):
        for d in choices[a + 1:]:
            if uf.find(c) == uf.find(d) or degree(game, c) != degree(game, d):
                continue
            i, j = game.owner(c), game.owner(d)
            if not allow_player_swaps and i != j:
                continue
            for beta in betas:
                if beta[i] != j:
                    continue
                mid = permute_players(game, beta)
                m = next(_isomorphisms(mid, game, fixed=[(c, d)], budget=budget), None)
                if m is not None:
                    for x, y in m.items():
                        uf.union(x, y)
                    break
    return _partition(choices, uf.find)


def structural_classes(game: Game) -> Partition:
    """Orbits of all choices under the full renamings of ``game`` onto itself."""
    part = game._memo.get("structural")
    if part is None:
        part = game._memo["structural"] = _orbits(game, allow_player_swaps=True)
    return part


def _choice_orbits(game: Game) -> Partition:
    part = game._memo.get("choice_orbits")
    if part is None:
        part = game._memo["choice_orbits"] = _orbits(game, allow_player_swaps=False)
    return part


def choice_equivalence(game: Game, player: int) -> Partition:
    """Cells of player ``player``'s choices under the automorphisms of ``game``."""
    game._check_player(player)
    mine = set(game.choices[player])
    return Partition(tuple(cell for cell in _choice_orbits(game) if cell[0] in mine))


# --- canonical labelling ------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Minimal encoding of a game over player orders and choice orderings.

    ``key`` is (choice counts, bit string of the winning relation in
    lexicographic profile order) and is equal for two games exactly when they
    are related by a full renaming.  ``beta`` and ``index`` give one renaming
    realising the minimum: choice ``c`` of player ``i`` becomes choice
    ``index[c]`` of canonical player ``beta[i]``.
    """

    key: tuple
    beta: tuple[int, ...]
    index: Mapping[str, int]

    def profile_key(self, profile: Sequence[str]) -> tuple[int, ...]:
        out = [0] * len(profile)
        for i, c in enumerate(profile):
            out[self.beta[i]] = self.index[c]
        return tuple(out)


def _leaves(game: Game, colours: dict, budget: _Budget):
    """Discrete colourings reachable by individualisation and refinement."""
    sizes = Counter(colours.values())
    target = min((k for k, s in sizes.items() if s > 1), default=None)
    if target is None:
        budget.spend()
        yield colours
        return
    for v in (c for c in game.all_choices if colours[c] == target):
        init = {c: (k, 0 if c == v else 1) for c, k in colours.items()}
        yield from _leaves(game, _refine([game], [init])[0], budget)


def _encode(game: Game, colours: dict):
    index = {}
    for cs in game.choices:
        for j, c in enumerate(sorted(cs, key=colours.__getitem__)):
            index[c] = j
    shape = game.shape
    total = game.n_profiles()
    bits = 0
    for t in game.win:
        rank = 0
        for c, k in zip(t, shape):
            rank = rank * k + index[c]
        bits |= 1 << (total - 1 - rank)
    return (shape, bits), index


def canonical_form(game: Game) -> CanonicalForm:
    cached = game._memo.get("canonical")
    if cached is not None:
        return cached
    budget = _Budget(size_limit())
    best = None
    for beta in itertools.permutations(range(game.n_players)):
        mid = permute_players(game, beta)
        start = _refine([mid], [_base_colours(mid)])[0]
        for leaf in _leaves(mid, start, budget):
            key, index = _encode(mid, leaf)
            if best is None or key < best[0]:
                best = (key, beta, index)
    form = CanonicalForm(*best)
    game._memo["canonical"] = form
    return form


def canonical_key(game: Game) -> tuple:
    return canonical_form(game).key


# --- brute-force oracle ---------------------------------------------------------------------

def brute_force_renamings(g: Game, h: Game) -> list[Renaming]:
    """Full renamings ``g -> h`` by exhaustive enumeration; only for small games and tests."""
    out = []
    for beta in _betas(g, h):
        per_player = []
        for i, cs in enumerate(g.choices):
            target = h.choices[beta[i]]
            per_player.append([dict(zip(cs, perm)) for perm in itertools.permutations(target)])
        for parts in itertools.product(*per_player):
            m = {}
            for part in parts:
                m.update(part)
            r = Renaming.make(beta, m)
            if all(r.map_profile(t) in h.win for t in g.win) and len(g.win) == len(h.win):
                out.append(r)
    return sorted(out, key=lambda r: _sort_key(g, r))


def brute_force_structural_classes(game: Game) -> Partition:
    uf = UnionFind(game.all_choices)
    for r in brute_force_renamings(game, game):
        for x, y in r.pi:
            uf.union(x, y)
    return _partition(game.all_choices, uf.find)
