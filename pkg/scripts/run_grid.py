#!/usr/bin/env python3
"""Verify every construction over its parameter grid and print a table.

Each row reports the instance, the palette size, the exact verification
verdict at the target k, and the smallest per-pair path count found by the
verifier in maximize mode (so the slack over k is visible).
"""

import argparse
import time

from rainbowk.bounds import f_formula
from rainbowk.constructions import (
    color_2_4_16,
    color_bipartite4,
    color_ctk,
    color_extension,
    color_mnn,
)
from rainbowk.core import PartitionSpec
from rainbowk.verifier import verify_rainbow_k_connected


def rows(max_k: int):
    for k in range(1, max_k + 1):
        for a, b in ((2 * k, 2 * k), (2 * k, 2 * k + 1), (2 * k + 1, 2 * k + 3)):
            yield f"bipartite4 K_{{{a},{b}}}", k, color_bipartite4(a, b, k)[0]
    for t, k in ((3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 4)):
        f = f_formula(k, t)
        for sizes in (tuple([f] * t), tuple([f] * (t - 1) + [f + 2])):
            label = "K_{" + ",".join(map(str, sizes)) + "}"
            yield f"ctk {label}", k, color_ctk(PartitionSpec(sizes), k)[0]
    for m, n in ((1, 2), (2, 2), (3, 2), (4, 2), (1, 4), (5, 4), (16, 4)):
        yield f"mnn K_{{{m},{n},{n}}}", 2, color_mnn(m, n)[0]
    yield "k2416 K_{2,4,16}", 2, color_2_4_16()[0]
    coloring, meta = color_mnn(2, 2)
    for _ in range(3):
        coloring, meta = color_extension(coloring, 0, 1, base_meta=meta)
        label = "K_{" + ",".join(map(str, coloring.spec.sizes)) + "}"
        yield f"extension {label}", 2, coloring


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=3)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    print(f"{'instance':34} {'k':>2} {'colors':>6} {'verdict':>8} {'min pairs':>9} {'time':>7}")
    failures = 0
    for label, k, coloring in rows(args.max_k):
        t0 = time.time()
        report = verify_rainbow_k_connected(coloring, k, mode="maximize", jobs=args.jobs)
        slack = min(report.counts.values())
        verdict = "pass" if report.ok else "FAIL"
        failures += not report.ok
        print(
            f"{label:34} {k:>2} {coloring.num_colors:>6} {verdict:>8} "
            f"{slack:>9} {time.time() - t0:>6.2f}s"
        )
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
