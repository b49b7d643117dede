"""Reproducible checks of the solvability hierarchy over game corpora.

Each check returns a :class:`Check` record instead of asserting, so the same
code backs both the ``verify-hierarchy`` command and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import catalog
from .algebra import game_from_expression, make_path
from .classify import (
    PRINCIPLE_ORDER,
    brute_force_structural_solvable,
    canonical_assignment,
    canonical_protocol,
    classify,
    enumerate_games,
    enumerate_shape,
    is_structurally_indeterminate,
    sample_games,
)
from .core import Game, product_subset, restrict, surely_losing, surely_winning
from .principles import BASE_TAGS, NAMED, assignment, cir, cir_reduce, solves
from .symmetry import Renaming, apply_renaming, canonical_key


@dataclass(frozen=True)
class Check:
    criterion: str
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.criterion}: {self.title} -- {self.detail}"


# --- corpora ----------------------------------------------------------------------------

@dataclass
class Corpus:
    games: list[Game]
    solved: dict[str, set[int]]
    indeterminate: set[int]

    def s(self, name: str) -> set[int]:
        return self.solved[name]


def _verdicts(game: Game) -> tuple[frozenset, bool]:
    report = classify(game)
    return frozenset(report.solved_by()), report.structurally_indeterminate


def build_corpus(games: Sequence[Game], jobs: int = 1) -> Corpus:
    games = list(games)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verdicts, games, chunksize=16))
    else:
        results = [_verdicts(g) for g in games]
    solved = {name: set() for name in PRINCIPLE_ORDER}
    indeterminate = set()
    for k, (names, indet) in enumerate(results):
        for name in names:
            solved[name].add(k)
        if indet:
            indeterminate.add(k)
    return Corpus(games, solved, indeterminate)


def two_player_corpus(max_choices: int = 3, jobs: int = 1) -> Corpus:
    return build_corpus(enumerate_games(2, max_choices), jobs)


def three_player_corpus(sampled: int = 500, max_choices: int = 3, seed: int = 2024, jobs: int = 1) -> Corpus:
    """Every 2x2x2 class plus ``sampled`` further random classes with up to ``max_choices`` per player."""
    base = list(enumerate_shape((2, 2, 2)))
    extra = sample_games(3, sampled, max_choices, seed=seed, exclude={canonical_key(g) for g in base})
    return build_corpus(base + extra, jobs)


# --- criteria -------------------------------------------------------------------------------

def check_lattice(c: Corpus) -> Check:
    bad_fir = c.s("FIR") ^ (c.s("NL") & c.s("SW"))
    bad_bir = c.s("BIR") ^ (c.s("NL") | c.s("SW"))
    ok = not bad_fir and not bad_bir
    return Check("1", "s(FIR) = s(NL) & s(SW) and s(BIR) = s(NL) | s(SW)", ok,
                 f"{len(c.games)} games, counterexamples {len(bad_fir)} / {len(bad_bir)}")


def check_cir_degeneracy(c: Corpus) -> Check:
    bad = []
    for k, g in enumerate(c.games):
        for p in ("NL", "SW"):
            if solves(NAMED[p], g) != solves(cir(NAMED[p]), g):
                bad.append((p, k))
    return Check("2", "s(NL) = s(cir NL) and s(SW) = s(cir SW)", not bad,
                 f"{len(c.games)} games, counterexamples {len(bad)}")


# game name, principles that must solve it, principles that must not
WITNESSES = [
    ("Z2", {"SW"}, {"NL"}),
    ("1x1+bar(1x1)", {"NL"}, {"SW"}),
    ("Z2+bar(1x1)", {"BCR"}, {"BIR"}),
    ("G*", {"IOC"}, {"BCR"}),
    ("G_Sigma", {"BCR"}, {"IOC"}),
    ("G_#", {"IRC"}, {"BIR+", "COC"}),
    ("G**", {"COC"}, {"IRC"}),
    ("Z3", {"CRC"}, {"IRC"}),
]

# each row: solved by at least one of the first set, by none of the second
INDEPENDENCE = [
    ("1x1+2(1x2)", {"ECS"}, {"EPS", "CRC"}),
    ("1x1+1x2+2x1", {"EPS"}, {"ECS", "CRC"}),
    ("table-SW", {"CRC"}, {"ES"}),
    ("1x1+2(2x2)", {"ECS", "EPS"}, {"CRC"}),
    ("table-path", {"ECS", "CRC"}, {"EPS"}),
    ("Z3", {"EPS", "CRC"}, {"ECS"}),
]


def _verdict_table(rows, need_all: bool):
    failures = []
    for name, yes, no in rows:
        g = catalog.named(name)
        got = {p for p in yes | no if solves(NAMED[p], g)}
        hit = yes <= got if need_all else bool(yes & got)
        if not hit or got & no:
            failures.append(f"{name}: solved by {sorted(got)}")
    return failures


def check_witnesses() -> Check:
    failures = _verdict_table(WITNESSES, need_all=True)
    return Check("3", "named witness separations", not failures,
                 "; ".join(failures) or f"{len(WITNESSES)} witnesses exact")


def check_independence() -> Check:
    failures = _verdict_table(INDEPENDENCE, need_all=False)
    return Check("4", "ECS / EPS / CRC independence table", not failures,
                 "; ".join(failures) or f"{len(INDEPENDENCE)} rows exact")


def check_collapse(two: Corpus, three: Corpus) -> Check:
    same = two.s("BCR") == two.s("BIR+") == two.s("COC")
    keys = {canonical_key(g): k for k, g in enumerate(three.games)}
    star = keys.get(canonical_key(catalog.G_STAR))
    separated = three.s("BIR+") - three.s("BCR")
    strict = three.s("BCR") < three.s("BIR+")
    star_ok = star is not None and star in separated
    ok = same and len(three.games) >= 500 and strict and star_ok
    return Check("5", "2-player collapse of BCR, BIR+, COC; 3-player strict separation", ok,
                 f"2-player equal={same} over {len(two.games)}; 3-player classes={len(three.games)}, "
                 f"|s(BIR+) - s(BCR)|={len(separated)}, G* witnesses={star_ok}")


def check_iteration_depth(ns=range(2, 8)) -> Check:
    got = {n: cir_reduce(NAMED["IRC"], make_path(n)).iterations for n in ns}
    ok = all(v == n - 1 for n, v in got.items())
    return Check("6", "cir(IRC) on Z_n needs n-1 iterations", ok,
                 ", ".join(f"Z{n}:{v}" for n, v in got.items()))


def check_claims(*corpora: Corpus) -> Check:
    games = [g for c in corpora for g in c.games]
    claim1 = claim2 = oracle = checked = 0
    for g in games:
        if not g.win:
            continue
        checked += 1
        indet = is_structurally_indeterminate(g)
        if indet == brute_force_structural_solvable(g):
            oracle += 1
        if indet:
            if classify(g).solved_by():
                claim1 += 1
        else:
            sets = canonical_assignment(g)
            if not all(sets) or not product_subset(sets, g.win):
                claim2 += 1
    ok = claim1 == claim2 == oracle == 0
    return Check("7", "Claims I and II against the brute-force oracle", ok,
                 f"{checked} winnable games; oracle mismatches {oracle}, "
                 f"Claim I violations {claim1}, Claim II failures {claim2}")


def check_pr() -> Check:
    expect = [
        ("PR", "1x2+2x1", False),
        ("PR", "1x1+2x2", True),
        ("ES", "2(2x2)+1x1", True),
        ("PR", "2(2x2)+1x1", False),
    ]
    wrong = [f"{p} on {e}" for p, e, want in expect
             if solves(NAMED[p], game_from_expression(e)) != want]
    return Check("8", "PR phenomena", not wrong, "; ".join(wrong) or "4 verdicts exact")


def random_renaming(game: Game, rng: random.Random) -> Renaming:
    """A random full renaming onto fresh names with a random player permutation."""
    beta = list(range(game.n_players))
    rng.shuffle(beta)
    fresh = [f"r{k}" for k in range(len(game.all_choices))]
    rng.shuffle(fresh)
    pi = dict(zip(game.all_choices, fresh))
    return Renaming.make(beta, pi)


def _random_game(rng: random.Random) -> Game:
    n = rng.choice((2, 2, 3))
    shape = [rng.randint(1, 3 if n == 3 else 4) for _ in range(n)]
    names = [[f"p{i + 1}_c{j + 1}" for j in range(k)] for i, k in enumerate(shape)]
    profiles = list(itertools.product(*names))
    density = rng.random()
    return Game(tuple(map(tuple, names)), frozenset(p for p in profiles if rng.random() < density))


def check_structurality(pairs: int = 1000, seed: int = 9) -> Check:
    rng = random.Random(seed)
    violations = []
    principles = list(NAMED)
    for _ in range(pairs):
        g = _random_game(rng)
        r = random_renaming(g, rng)
        h = apply_renaming(g, r)
        for name in principles:
            a, b = assignment(NAMED[name], g).sets, assignment(NAMED[name], h).sets
            if any(r.image(a[i]) != b[r.beta[i]] for i in range(g.n_players)):
                violations.append(name)
        if g.win and not is_structurally_indeterminate(g):
            if any(r.image(canonical_protocol(g, i)) != canonical_protocol(h, r.beta[i])
                   for i in range(g.n_players)):
                violations.append("canonical")
    return Check("9", "structurality under random full renamings", not violations,
                 f"{pairs} pairs x {len(principles)} principles + canonical protocol; "
                 f"violations {len(violations)}{' ' + str(sorted(set(violations))) if violations else ''}")


def _non_losing(g: Game):
    return [frozenset(cs) - surely_losing(g, i) or frozenset(cs) for i, cs in enumerate(g.choices)]


CHARACTERISATIONS: dict[str, Callable[[Game], bool]] = {
    "SW": lambda g: any(surely_winning(g, i) for i in range(g.n_players)),
    "NL": lambda g: bool(g.win) and len(g.win) == _size(_non_losing(g)),
    "FIR": lambda g: any(surely_winning(g, i) and surely_winning(g, i) | surely_losing(g, i) == set(cs)
                         for i, cs in enumerate(g.choices)),
    "BCR": lambda g: (lambda r: any(surely_winning(r, i) for i in range(r.n_players)))(
        restrict(g, _non_losing(g))),
}


def _size(sets):
    total = 1
    for s in sets:
        total *= len(s)
    return total


def check_characterisations(c: Corpus) -> Check:
    bad = {name: 0 for name in CHARACTERISATIONS}
    for k, g in enumerate(c.games):
        for name, test in CHARACTERISATIONS.items():
            if test(g) != (k in c.s(name)):
                bad[name] += 1
    return Check("10", "closed-form characterisations of SW, NL, FIR, BCR", not any(bad.values()),
                 f"{len(c.games)} games, mismatches {bad}")


# paper hierarchy; (smaller, larger) pairs of solvable classes
INCLUSIONS = [
    ("FIR", "NL"), ("FIR", "SW"), ("NL", "BIR"), ("SW", "BIR"), ("BIR", "BCR"), ("BCR", "BIR+"),
    ("BIR+", "COC"), ("COC", "CRC"), ("BIR+", "IRC"), ("IRC", "CRC"),
    ("NL", "ECS"), ("NL", "EPS"), ("ECS", "ES"), ("EPS", "ES"),
]


def check_inclusions(*corpora: Corpus) -> Check:
    broken = []
    for c in corpora:
        for a, b in INCLUSIONS:
            if not c.s(a) <= c.s(b):
                broken.append(f"{a}<={b} ({len(c.s(a) - c.s(b))})")
        for name in BASE_TAGS:
            base, it = NAMED[name], cir(NAMED[name])
            if any(solves(base, g) and not solves(it, g) for g in c.games):
                broken.append(f"{name}<=cir({name})")
    return Check("H", "hierarchy inclusions and s(P) <= s(cir P)", not broken,
                 "; ".join(broken) or f"{len(INCLUSIONS)} inclusions hold")


def run_all(players: Sequence[int] = (2, 3), max_choices: int = 3, jobs: int = 1,
            sampled: int = 500, seed: int = 2024, pairs: int = 1000) -> list[Check]:
    two = two_player_corpus(max_choices, jobs) if 2 in players else None
    three = three_player_corpus(sampled, max_choices, seed, jobs) if 3 in players else None
    checks = []
    if two:
        checks += [check_lattice(two), check_cir_degeneracy(two)]
    checks += [check_witnesses(), check_independence()]
    if two and three:
        checks.append(check_collapse(two, three))
    checks.append(check_iteration_depth())
    corpora = [c for c in (two, three) if c]
    if corpora:
        checks.append(check_claims(*corpora))
    checks += [check_pr(), check_structurality(pairs)]
    if two:
        checks.append(check_characterisations(two))
    if corpora:
        checks.append(check_inclusions(*corpora))
    return checks
