#!/usr/bin/env python3
"""Randomized common-factor extraction trials with summary statistics.

Samples families of anisotropic 3-fold forms from a small slot pool and
tries to pull out an m-fold common factor.  The point is to watch how often
the slot intersection supports a factor as the family grows, and to time
the extraction; the acceptance suite pins one specific configuration, this
script lets you vary it.

    python scripts/sharing_trials.py --trials 50 --family-size 3 --m 2
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from collections import Counter

from pflab import (
    BilinearPfister,
    CompletionNotFound,
    FieldContext,
    common_factor,
)


def build_pool(ctx):
    a1, a2, a3 = ctx.gens
    one = ctx.one
    return [a1, a2, a3, a1 * a2, a1 * a3, a2 * a3, one + a1, one + a2 * a3]


def random_form(rng, ctx, pool):
    # resample until the three slots are 2-independent
    while True:
        form = BilinearPfister(ctx, rng.sample(pool, 3))
        if form.is_anisotropic():
            return form


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--family-size", type=int, default=3)
    ap.add_argument("--m", type=int, default=2, help="fold of the factor to extract")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show-witnesses", action="store_true")
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    ctx = FieldContext(3)
    pool = build_pool(ctx)

    found = 0
    empty = 0
    stuck = 0
    rebuilt_bad = 0
    rho_counter: Counter = Counter()
    t0 = time.monotonic()
    for trial in range(args.trials):
        forms = [random_form(rng, ctx, pool) for _ in range(args.family_size)]
        try:
            witness = common_factor(args.m, forms)
        except CompletionNotFound:
            stuck += 1
            continue
        if witness is None:
            empty += 1
            continue
        found += 1
        rho_slots = ", ".join(str(s) for s in witness.rho.slots)
        rho_counter[rho_slots] += 1
        for f, comp in zip(forms, witness.complements):
            if not BilinearPfister(ctx, witness.rho.slots + comp).is_isometric(f):
                rebuilt_bad += 1
        if args.show_witnesses:
            print(f"trial {trial}: rho = <<{rho_slots}>>_b")
    elapsed = time.monotonic() - t0

    print(f"{args.trials} trials, family size {args.family_size}, m={args.m}, "
          f"seed {args.seed}  ({elapsed:.2f}s)")
    print(f"  witness found      {found}")
    print(f"  empty intersection {empty}")
    print(f"  completion stuck   {stuck}")
    if rebuilt_bad:
        print(f"  BAD REBUILDS       {rebuilt_bad}")
    if rho_counter:
        print("  most common factors:")
        for slots, count in rho_counter.most_common(5):
            print(f"    {count:>4}  <<{slots}>>_b")
    return 1 if rebuilt_bad else 0


if __name__ == "__main__":
    sys.exit(main())
