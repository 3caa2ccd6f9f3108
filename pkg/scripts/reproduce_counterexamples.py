#!/usr/bin/env python3
"""Rebuild the three counterexample constructions and re-run every check.

Walks the same verification the CLI performs, but through the library API
and for several ranks in one go, printing a compact pass/fail table.  Handy
when touching the elimination or valuation internals: a regression shows up
here as a named failing check rather than a wrong certificate downstream.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from dataclasses import dataclass, field

from pflab import (
    FieldContext,
    SqSubspace,
    build_no_common_slot_family,
    build_quadratic_family,
    build_quat_triple,
    common_slot_space,
    insep_obstruction,
    quat_triple_obstruction,
)


@dataclass
class RunConfig:
    bilinear_ranks: tuple[int, ...] = (2, 3)
    quadratic_ranks: tuple[int, ...] = (2, 3)
    quaternion: bool = True
    failures: list[str] = field(default_factory=list)

    def check(self, label: str, ok: bool) -> None:
        mark = "ok" if ok else "FAIL"
        print(f"  {label:<52} {mark}")
        if not ok:
            self.failures.append(label)


def bilinear_section(cfg: RunConfig, n: int) -> None:
    t0 = time.monotonic()
    family = build_no_common_slot_family(n)
    ctx = family[0].ctx
    print(f"bilinear family, n={n} ({len(family)} forms)")
    cfg.check("every member anisotropic", all(f.is_anisotropic() for f in family))

    pure_ok = True
    pair_ok = True
    base = family[0]
    for k in range(1, 2**n):
        d = tuple(k >> i & 1 for i in range(n))
        others = [
            ctx.monomial(e)
            for e in itertools.product((0, 1), repeat=n)
            if any(e) and e != d
        ]
        claimed = SqSubspace.span(ctx, others + [ctx.one + ctx.monomial(d)])
        pure_ok = pure_ok and claimed == family[k].pure_value_space()
        pair = base.pure_value_space().intersection(family[k].pure_value_space())
        pair_ok = pair_ok and pair == SqSubspace.span(ctx, others)
    cfg.check("pure value spaces match the closed form", pure_ok)
    cfg.check("pairwise intersections drop exactly {1, a^d}", pair_ok)

    cfg.check("no common slot across the family", common_slot_space(family).is_zero)
    loo = [common_slot_space(family[:k] + family[k + 1 :]).dim for k in range(len(family))]
    cfg.check("every leave-one-out subfamily shares a slot", all(d > 0 for d in loo))
    print(f"  ({time.monotonic() - t0:.2f}s, leave-one-out dims {loo})")


def quadratic_section(cfg: RunConfig, n: int) -> None:
    t0 = time.monotonic()
    family = build_quadratic_family(n)
    cert = insep_obstruction(family)
    print(f"quadratic family, n={n} ({len(family)} forms)")
    cfg.check("dominant-term hypotheses hold", all(cert.hypothesis_checks))
    cfg.check("pure parity images intersect in 0 only", cert.intersection.is_zero_only)
    sizes = [len(img.classes) for img in cert.per_form_images]
    cfg.check(
        "each image misses exactly one parity class",
        all(s == 2**n - 1 for s in sizes),
    )
    print(f"  ({time.monotonic() - t0:.2f}s, image sizes {sizes})")


def quaternion_section(cfg: RunConfig) -> None:
    t0 = time.monotonic()
    ctx = FieldContext(2)
    a1, a2 = ctx.gens
    cert = quat_triple_obstruction(a1, a2)
    print("quaternion triple over GF(2)(a1,a2)")
    cfg.check("triple certificate valid", cert.valid)

    norms = {q.norm_form() for q in build_quat_triple(a1, a2)}
    cfg.check(
        "norm forms recover the rank-2 quadratic family",
        norms == set(build_quadratic_family(2)),
    )
    print(f"  ({time.monotonic() - t0:.2f}s)")


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3, choices=(2, 3, 4),
                    help="largest bilinear rank to verify (4 takes a few seconds)")
    ap.add_argument("--skip-quat", action="store_true")
    args = ap.parse_args(argv)

    cfg = RunConfig(
        bilinear_ranks=tuple(range(2, args.max_n + 1)),
        quadratic_ranks=(2, 3),
        quaternion=not args.skip_quat,
    )
    for n in cfg.bilinear_ranks:
        bilinear_section(cfg, n)
    for n in cfg.quadratic_ranks:
        quadratic_section(cfg, n)
    if cfg.quaternion:
        quaternion_section(cfg)

    if cfg.failures:
        print(f"\n{len(cfg.failures)} check(s) failed:")
        for f in cfg.failures:
            print(f"  - {f}")
        return 1
    print("\nall checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
