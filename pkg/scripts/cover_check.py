"""Check that 2-bridge replacements and lens-space torus-knot surgeries agree.

A distance-d replacement between S(p,q) and S(u,v) should exist exactly when
some 1/n surgery with |n| = d on a torus knot in L(p,q) yields L(u,v).

    python scripts/cover_check.py --pmax 30 --d 2 3
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from math import gcd

from tanglekit.lens import LensSpace, torus_knot_surgery_solve
from tanglekit.twobridge import TwoBridgeLink, tb_rsr_decide


@dataclass
class CoverConfig:
    pmax: int = 30
    ds: list[int] = field(default_factory=lambda: [2, 3, 4])


def classes(pmax: int) -> list[tuple[int, int]]:
    out, seen = [(0, 1)], set()
    for p in range(1, pmax + 1):
        for q in range(p):
            if gcd(p, q) == 1:
                key = (p, min(TwoBridgeLink(p, q).q_representatives()))
                if key not in seen:
                    seen.add(key)
                    out.append((p, q))
    return out


def run(cfg: CoverConfig) -> dict:
    t0 = time.perf_counter()
    cls = classes(cfg.pmax)
    related = disagree = 0
    examples = []
    for (x, y), d in product(product(cls, repeat=2), cfg.ds):
        tb = tb_rsr_decide(TwoBridgeLink(*x), TwoBridgeLink(*y), d) is not None
        sv = bool(torus_knot_surgery_solve(LensSpace(*x), LensSpace(*y), d))
        related += tb
        if tb != sv:
            disagree += 1
            examples.append({"x": x, "y": y, "d": d, "two_bridge": tb, "surgery": sv})
    return {
        "config": asdict(cfg),
        "classes": len(cls),
        "related_pairs": related,
        "disagreements": disagree,
        "examples": examples[:10],
        "seconds": round(time.perf_counter() - t0, 1),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmax", type=int, default=CoverConfig.pmax)
    ap.add_argument("--d", type=int, nargs="+", default=[2, 3, 4])
    ns = ap.parse_args()
    print(json.dumps(run(CoverConfig(ns.pmax, ns.d)), indent=2))


if __name__ == "__main__":
    main()
