"""Print the verdict of every principle on every catalogue game."""

import argparse

from wlc.catalog import GAMES
from wlc.classify import PRINCIPLE_ORDER, classify


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--markdown", action="store_true", help="emit a markdown table")
    args = parser.parse_args()

    head = ["game"] + list(PRINCIPLE_ORDER) + ["indet."]
    rows = []
    for name, game in GAMES.items():
        report = classify(game)
        solved = report.solved_by()
        rows.append([name] + ["x" if p in solved else "." for p in PRINCIPLE_ORDER]
                    + ["x" if report.structurally_indeterminate else "."])
    if args.markdown:
        print("| " + " | ".join(head) + " |")
        print("|" + "---|" * len(head))
        for row in rows:
            print("| " + " | ".join(row) + " |")
        return
    width = max(len(r[0]) for r in rows)
    print(" ".join([head[0].ljust(width)] + [h.rjust(4) for h in head[1:]]))
    for row in rows:
        print(" ".join([row[0].ljust(width)] + [c.rjust(4) for c in row[1:]]))


if __name__ == "__main__":
    main()
