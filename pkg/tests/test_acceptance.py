"""Acceptance criteria 1-10.  Every criterion is an exact combinatorial
identity, so the tolerance is zero counterexamples throughout.

Corpora: all 54 two-player classes with at most 3 choices per player; all 22
classes of shape 2x2x2 plus 500 further seeded random three-player classes
with at most 3 choices per player (seed 2024).  The structurality check uses
1000 seeded random (game, renaming) pairs (seed 9).
"""

import pytest

from wlc import verification as v


@pytest.fixture
def report(capsys):
    def emit(check):
        with capsys.disabled():
            print("\n" + check.line())
        assert check.passed, check.detail
    return emit


def test_criterion_01_lattice(two_corpus, report):
    report(v.check_lattice(two_corpus))


def test_criterion_02_cir_degeneracies(two_corpus, report):
    report(v.check_cir_degeneracy(two_corpus))


def test_criterion_03_witness_separations(report):
    report(v.check_witnesses())


def test_criterion_04_independence_table(report):
    report(v.check_independence())


def test_criterion_05_two_player_collapse(two_corpus, three_corpus, report):
    assert len(three_corpus.games) >= 500
    report(v.check_collapse(two_corpus, three_corpus))


def test_criterion_06_iteration_depth(report):
    report(v.check_iteration_depth(range(2, 8)))


def test_criterion_07_claims(two_corpus, three_corpus, report):
    report(v.check_claims(two_corpus, three_corpus))


def test_criterion_08_pr_phenomena(report):
    report(v.check_pr())


def test_criterion_09_structurality(report):
    report(v.check_structurality(pairs=1000, seed=9))


def test_criterion_10_characterisations(two_corpus, report):
    report(v.check_characterisations(two_corpus))


def test_hierarchy_inclusions(two_corpus, three_corpus, report):
    report(v.check_inclusions(two_corpus, three_corpus))
