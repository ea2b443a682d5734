#!/usr/bin/env python3
"""Randomized self-check sweep over the exact backend.

Samples random elements and pairs, then counts discrepancies between
closed-form results and the elimination-based oracles: solution-space
dimensions vs matrix ranks, Penrose identities, determinant closed
forms, and root residuals.  Exits nonzero if anything disagrees.

Usage: python scripts/consistency_sweep.py [N] [--seed S]
"""

import argparse
import math
import random
import sys
import warnings

sys.path.insert(0, "tests")

from splitquat import (
    ZERO,
    check_penrose_coherence,
    left_matrix,
    mp_inverse,
    nth_roots,
    power,
    right_matrix,
    s_det,
    s_matrix,
    solve_axb,
    solve_xa_bx,
    solve_xa_bxbar,
    t_det,
    t_matrix,
)

from conftest import (
    rand_causal,
    rand_lightlike,
    rand_nonreal,
    rand_quat,
    rand_rank3_pair,
    rand_similar_pair,
)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("count", nargs="?", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    n = args.count
    bad = 0

    for i in range(n):
        kind = i % 4
        if kind == 0:
            a, b = rand_nonreal(rng), rand_nonreal(rng)
        elif kind == 1:
            a, b = rand_similar_pair(rng)
        elif kind == 2:
            a, b = rand_rank3_pair(rng)
        else:
            a, b = rand_nonreal(rng), rand_nonreal(rng)
        if solve_xa_bx(a, b).dimension != 4 - t_matrix(a, b).rank():
            bad += 1
        if solve_xa_bxbar(a, b).dimension != 4 - s_matrix(a, b).rank():
            bad += 1
        if t_det(a, b) != t_matrix(a, b).det() or s_det(a, b) != s_matrix(a, b).det():
            bad += 1
    print(f"dimension + determinant sweep: {n} pairs, {bad} discrepancies")

    penrose_bad = 0
    for i in range(n):
        a = rand_causal(rng, ("lightlike", "timelike", "spacelike")[i % 3])
        p = mp_inverse(a)
        if a * p * a != a or p * a * p != p:
            penrose_bad += 1
        if not all(check_penrose_coherence(a).values()):
            penrose_bad += 1
    print(f"Penrose sweep: {n} elements, {penrose_bad} discrepancies")

    solver_bad = 0
    for _ in range(n):
        a, b, w = rand_lightlike(rng), rand_lightlike(rng), rand_quat(rng)
        d = a * w * b
        outcome = solve_axb(a, b, d)
        if not outcome.solvable or a * outcome.family.at(ZERO) * b != d:
            solver_bad += 1
    print(f"solver sweep: {n} constructed systems, {solver_bad} discrepancies")

    root_bad = 0
    produced = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(n):
            q = rand_lightlike(rng).to_float()
            deg = rng.randint(2, 6)
            for w in nth_roots(q, deg):
                produced += 1
                residual = power(w, deg) - q
                scale = 1 + math.sqrt(sum(float(c) ** 2 for c in q.coeffs))
                if math.sqrt(sum(float(c) ** 2 for c in residual.coeffs)) > 1e-8 * scale:
                    root_bad += 1
    print(f"root sweep: {produced} roots verified, {root_bad} over tolerance")

    total = bad + penrose_bad + solver_bad + root_bad
    print("all consistent" if total == 0 else f"{total} total discrepancies")
    return 0 if total == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
