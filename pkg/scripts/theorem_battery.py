#!/usr/bin/env python3
"""Run every theorem check over named and random graphs and tabulate verdicts.

Exit status is 1 if any check comes back Falsified (which would mean a bug here).
"""

import argparse
import collections
import json
import sys

from factorpoly.families import complete, cycle, path, random_graphs
from factorpoly.verify import FALSIFIED, THEOREM_IDS, run_all


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=30, help="number of random multigraphs")
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-m", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--dump", help="write every record as JSON lines here")
    args = ap.parse_args(argv)

    graphs = [cycle(n) for n in range(3, 7)] + [path(n) for n in range(2, 6)] + [complete(n) for n in range(2, 6)]
    graphs += random_graphs(args.random, args.seed, (2, args.max_n), (1, args.max_m))
    table = collections.defaultdict(collections.Counter)
    falsified = []
    sink = open(args.dump, "w", encoding="utf-8") if args.dump else None
    for G in graphs:
        for rec in run_all(G):
            table[rec.theorem][rec.verdict] += 1
            if sink:
                sink.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
            if rec.verdict == FALSIFIED:
                falsified.append(rec)
    if sink:
        sink.close()
    print(f"{'check':<9} {'Confirmed':>9} {'Inapplicable':>12} {'Falsified':>9}")
    for tid in THEOREM_IDS:
        c = table[tid]
        print(f"{tid:<9} {c['Confirmed']:>9} {c['Inapplicable']:>12} {c['Falsified']:>9}")
    for rec in falsified:
        print("FALSIFIED", json.dumps(rec.to_json(), sort_keys=True), file=sys.stderr)
    return 1 if falsified else 0


if __name__ == "__main__":
    sys.exit(main())
