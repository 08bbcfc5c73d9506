"""Run every check on the battery and print a table of graded dimensions.

    python3 scripts/run_battery.py [--max-degree 4] [--json out.json]
"""

import argparse
import json

from pclie.battery import battery, random_gamma, zero_column_items
from pclie.graded import (extend, local_from_pentad, verify_antisymmetry, verify_jacobi,
                          verify_transitivity)
from pclie.oracle import oracle_dims
from pclie.structure import (decompose, gamma_invariance, verify_corollary,
                             verify_invertible_shortcut, verify_lemma2, verify_lemma3,
                             verify_theorem2)


def run(name, p, N):
    G = extend(local_from_pentad(p), N)
    reports = [verify_jacobi(G), verify_antisymmetry(G), verify_transitivity(G),
               verify_theorem2(p, N, G), verify_corollary(p, N, G),
               verify_invertible_shortcut(p, N, G), verify_lemma2(p, N, G),
               verify_lemma3(p, N, G), gamma_invariance(p, random_gamma(p.n), N, G)]
    oracle_ok = N > 5 or oracle_dims(local_from_pentad(p), N) == G.dims
    return {"name": name, "dims": [G.dims[m] for m in G.degrees()],
            "degree0": decompose(p).dims, "oracle": oracle_ok,
            "checks": {r.name: r.passed for r in reports}}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--json")
    args = ap.parse_args()
    rows = [run(k, p, args.max_degree)
            for k, p in {**battery(), **zero_column_items()}.items()]
    for row in rows:
        ok = all(row["checks"].values()) and row["oracle"]
        print(f"{row['name']:<16} {'ok ' if ok else 'BAD'} U0'/z/Delta={row['degree0']} "
              f"dims={row['dims']}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
