"""Empirical inclusion matrix between solvable classes on a game corpus.

Cell (P, Q) reads "<=" when every P-solvable game is Q-solvable, otherwise the
number of games solved by P but not by Q.  Useful to see which of the
hierarchy's missing lines are backed by a counterexample in the corpus.
"""

import argparse
import json

from wlc.classify import PRINCIPLE_ORDER
from wlc.verification import three_player_corpus, two_player_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--players", type=int, choices=(2, 3), default=2)
    parser.add_argument("--max-choices", type=int, default=3)
    parser.add_argument("--sampled", type=int, default=500)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    if args.players == 2:
        corpus = two_player_corpus(args.max_choices, args.jobs)
    else:
        corpus = three_player_corpus(args.sampled, args.max_choices, args.seed, args.jobs)

    matrix = {p: {q: len(corpus.s(p) - corpus.s(q)) for q in PRINCIPLE_ORDER} for p in PRINCIPLE_ORDER}
    if args.json:
        print(json.dumps({"games": len(corpus.games),
                          "solved": {p: len(corpus.s(p)) for p in PRINCIPLE_ORDER},
                          "difference": matrix}, indent=2))
        return
    print(f"{len(corpus.games)} games; |s(P)|: "
          + ", ".join(f"{p}={len(corpus.s(p))}" for p in PRINCIPLE_ORDER))
    print("P \\ Q".ljust(6) + "".join(q.rjust(6) for q in PRINCIPLE_ORDER))
    for p in PRINCIPLE_ORDER:
        cells = ["<=" if matrix[p][q] == 0 else str(matrix[p][q]) for q in PRINCIPLE_ORDER]
        print(p.ljust(6) + "".join(c.rjust(6) for c in cells))


if __name__ == "__main__":
    main()
