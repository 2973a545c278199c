#!/usr/bin/env python3
"""Stress the analyzer against the exhaustive search on random input.

Samples sequences (uniform and deliberately structured), runs both
searches, and reports any cost gap.  The greedy scan is supposed to hit
the exhaustive minimum exactly; a nonzero gap is a bug in one of the
two, so the script exits nonzero if it finds one.

Example:
    python scripts/audit_oracle_agreement.py --n 2000 --max-len 6 --seed 7
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from seqsurprise.analyzer import analyze
from seqsurprise.oracle import SearchBudget, oracle_min_cost


def structured(rng: random.Random, length: int) -> list[int]:
    # runs, ramps and digit-twin tokens: the inputs where moves compete
    seq = [rng.randint(0, 49)]
    while len(seq) < length:
        roll = rng.random()
        if roll < 0.35:
            seq.append(seq[-1])
        elif roll < 0.7:
            seq.append(seq[-1] + rng.choice((1, 2)))
        elif roll < 0.85:
            d = rng.randint(1, 4)
            seq.append(11 * d)
        else:
            seq.append(rng.randint(0, 49))
    return seq[:length]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=1000, help="samples per family")
    parser.add_argument("--max-len", type=int, default=6)
    parser.add_argument("--max-token", type=int, default=49)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    budget = SearchBudget()
    mismatches = 0
    checked = 0
    start = time.perf_counter()
    for family in ("uniform", "structured"):
        for _ in range(args.n):
            length = rng.randint(1, args.max_len)
            if family == "uniform":
                seq = [rng.randint(0, args.max_token) for _ in range(length)]
            else:
                seq = structured(rng, length)
            greedy = analyze(seq).total_cost
            minimal, _ = oracle_min_cost(seq, budget=budget)
            checked += 1
            if greedy != minimal:
                mismatches += 1
                print(f"GAP {seq}: greedy={greedy!r} exhaustive={minimal!r}")
    elapsed = time.perf_counter() - start
    print(f"checked {checked} sequences in {elapsed:.1f}s, {mismatches} gaps")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
