"""Compare classify_rsr against brute-force family generation on a slope box.

    python scripts/oracle_sweep.py --box 30 --bounds 30 50
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from math import gcd

from tanglekit.rational import INFINITY, Slope, pair_class_ints
from tanglekit.rsr import FAMILIES, classify_rsr, family_general_members


@dataclass
class SweepConfig:
    box: int = 30
    max_d: int = 5
    bounds: list[int] = field(default_factory=lambda: [30, 50])


def class_oracle(bound: int, max_d: int):
    orc = {}
    for d in range(1, max_d + 1):
        for f in FAMILIES:
            orc[d, f] = {
                pair_class_ints(1, 0, s.num, s.den)
                for s, _ in family_general_members(INFINITY, d, f, bound, cofactor_bound=0)
            }
    dists = {d: {c.dist for f in FAMILIES for c in orc[d, f]} for d in range(1, max_d + 1)}
    return orc, dists


def sweep(cfg: SweepConfig) -> dict:
    t0 = time.perf_counter()
    oracles = {b: class_oracle(b, cfg.max_d) for b in cfg.bounds}
    B = cfg.box
    slopes = [INFINITY] + [Slope(n, q) for q in range(1, B + 1) for n in range(-B, B + 1) if gcd(n, q) == 1]
    mismatches = {b: 0 for b in cfg.bounds}
    tally = {f.value: 0 for f in FAMILIES}
    for i, x in enumerate(slopes):
        for y in slopes[i + 1:]:
            dist = abs(x.num * y.den - x.den * y.num)
            cls = None
            for d in range(1, cfg.max_d + 1):
                got = {w.family for w in classify_rsr(x, y, d)}
                for f in got:
                    tally[f.value] += 1
                for b, (orc, dists) in oracles.items():
                    want = set()
                    if dist in dists[d]:
                        cls = cls or pair_class_ints(x.num, x.den, y.num, y.den)
                        want = {f for f in FAMILIES if cls in orc[d, f]}
                    mismatches[b] += want != got
    return {
        "config": asdict(cfg),
        "slopes": len(slopes),
        "family_hits": tally,
        "mismatches_by_bound": mismatches,
        "seconds": round(time.perf_counter() - t0, 1),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--box", type=int, default=SweepConfig.box)
    ap.add_argument("--max-d", type=int, default=SweepConfig.max_d)
    ap.add_argument("--bounds", type=int, nargs="+", default=[30, 50])
    ns = ap.parse_args()
    print(json.dumps(sweep(SweepConfig(ns.box, ns.max_d, ns.bounds)), indent=2))


if __name__ == "__main__":
    main()
