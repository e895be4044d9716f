"""Tabulate 2-bridge links with a banding to the unknot or to the 2-component unlink.

    python scripts/banding_table.py --pmax 60 --csv bandings.csv
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from math import gcd

from tanglekit.twobridge import TwoBridgeLink, greene_check, lisca_check


@dataclass
class TableConfig:
    pmax: int = 60
    only_hits: bool = True


def link_classes(pmax: int):
    for p in range(2, pmax + 1):
        seen = set()
        for q in range(1, p):
            if gcd(p, q) != 1 or q in seen:
                continue
            L = TwoBridgeLink(p, q)
            seen.update(L.q_representatives())
            yield L


def rows(cfg: TableConfig):
    for L in link_classes(cfg.pmax):
        g, gc = greene_check(L)
        l, lc = lisca_check(L)
        if cfg.only_hits and not (g or l):
            continue
        yield {
            "link": str(L),
            "unknot": g,
            "unknot_conditions": " ".join(sorted({str(c["cond"]) for c in gc})),
            "unlink": l,
            "unlink_conditions": " ".join(sorted({str(c["cond"]) for c in lc})),
        }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmax", type=int, default=TableConfig.pmax)
    ap.add_argument("--all", action="store_true", help="include links with neither banding")
    ap.add_argument("--csv", help="output file (default stdout)")
    ns = ap.parse_args()
    cfg = TableConfig(ns.pmax, not ns.all)
    fields = ["link", "unknot", "unknot_conditions", "unlink", "unlink_conditions"]
    out = open(ns.csv, "w", newline="") if ns.csv else sys.stdout
    try:
        w = csv.DictWriter(out, fieldnames=fields)
        w.writeheader()
        w.writerows(rows(cfg))
    finally:
        if ns.csv:
            out.close()


if __name__ == "__main__":
    main()
