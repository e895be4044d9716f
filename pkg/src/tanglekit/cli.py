"""Command-line front end.

Single queries print one JSON object.  ``--batch FILE`` reads JSON lines of
the form ``{"command": ..., "args": {...}}`` (``-`` for stdin) and writes
one response line per request, in input order.

Exit status: 0 on success, 1 if any request failed, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable

import jsonschema

from .lens import (
    LensSpace,
    is_core_knot,
    klein_fiber_classify,
    klein_fiber_surgeries,
    seifert_knot_catalog,
    torus_knot_surgery,
    torus_knot_surgery_solve,
)
from .plat import PlatDesc, cf_to_plat, parse_cf, parse_slope, parse_value, plat_render
from .rational import cf_expand, pair_canonical
from .rsr import classify_rsr, family_general_members
from .schemas import ARG_SCHEMAS, COMMANDS, REQUEST_SCHEMA
from .twobridge import TwoBridgeLink, greene_check, lisca_check, tb_rsr_decide, tb_rsr_site_cf


class RequestError(ValueError):
    pass


def _check(name: str, fn: Callable[[TwoBridgeLink], tuple[bool, list]], link: str) -> dict:
    L = TwoBridgeLink.parse(link)
    holds, certs = fn(L)
    return {"link": str(L), "holds": holds, "certificates": certs}


def _cmd_eval(a: dict) -> dict:
    return {"slope": str(parse_value(a["value"]))}


def _cmd_expand(a: dict) -> dict:
    return {"cf": str(cf_expand(parse_slope(a["slope"])))}


def _cmd_pair(a: dict) -> dict:
    return pair_canonical(parse_value(a["x"]), parse_value(a["y"])).to_json()


def _cmd_classify(a: dict) -> dict:
    ws = classify_rsr(parse_value(a["x"]), parse_value(a["y"]), a["d"], verbose=a.get("verbose", False))
    fams = []
    for w in ws:
        if w.family.value not in fams:
            fams.append(w.family.value)
    return {"families": fams, "witnesses": [w.to_json() for w in ws]}


def _cmd_enumerate(a: dict) -> dict:
    members = family_general_members(parse_value(a["base"]), a["d"], a["family"], a["bound"])
    return {"members": [{"slope": str(s), "witness": w.to_json()} for s, w in members]}


def _cmd_tb_rsr(a: dict) -> dict:
    w = tb_rsr_decide(TwoBridgeLink.parse(a["x"]), TwoBridgeLink.parse(a["y"]), a["d"], a.get("oriented", False))
    return {"witness": None if w is None else w.to_json()}


def _cmd_tb_site(a: dict) -> dict:
    x, y = TwoBridgeLink.parse(a["x"]), TwoBridgeLink.parse(a["y"])
    w = tb_rsr_decide(x, y, a["d"], a.get("oriented", False))
    if w is None:
        return {"witness": None, "before": None, "after": None}
    before, after = tb_rsr_site_cf(x, y, w)
    return {"witness": w.to_json(), "before": str(before), "after": str(after)}


def _cmd_surgery(a: dict) -> dict:
    L = torus_knot_surgery(a["r"], a["s"], a["P"], a["Q"], a["n"])
    return {**L.to_json(), "core": is_core_knot(a["r"], a["s"], a["P"], a["Q"]), "order": L.order}


def _cmd_surgery_solve(a: dict) -> dict:
    ws = torus_knot_surgery_solve(
        LensSpace.parse(a["source"]), LensSpace.parse(a["target"]), a["d"], a.get("oriented", False)
    )
    return {"witnesses": [w.to_json() for w in ws]}


def _cmd_klein(a: dict) -> dict:
    k = a["k"]
    return {
        "k": k,
        "type": klein_fiber_classify(k).value,
        "surgeries": [
            {"slope": str(s), "lens": [L.p, L.q], "oriented": True} for s, L in klein_fiber_surgeries(k, a["bound"])
        ],
    }


def _cmd_catalog(a: dict) -> dict:
    Y = LensSpace.parse(a["lens"])
    return {"lens": [Y.p, Y.q], "descriptors": seifert_knot_catalog(Y)}


def _cmd_render(a: dict) -> dict:
    fmt = a.get("format", "ascii")
    plat = cf_to_plat(parse_cf(a["value"]), site=a.get("site"))
    return {"format": fmt, "text": plat_render(plat, fmt)}


HANDLERS: dict[str, Callable[[dict], dict]] = {
    "eval": _cmd_eval,
    "expand": _cmd_expand,
    "pair-canon": _cmd_pair,
    "classify-rsr": _cmd_classify,
    "enumerate-family": _cmd_enumerate,
    "tb-rsr": _cmd_tb_rsr,
    "tb-site": _cmd_tb_site,
    "greene": lambda a: _check("greene", greene_check, a["link"]),
    "lisca": lambda a: _check("lisca", lisca_check, a["link"]),
    "surgery": _cmd_surgery,
    "surgery-solve": _cmd_surgery_solve,
    "klein": _cmd_klein,
    "catalog": _cmd_catalog,
    "render": _cmd_render,
}
assert set(HANDLERS) == set(COMMANDS)


def dispatch(command: str, args: dict) -> dict:
    """Validate and run one request; raises on any failure."""
    if command not in HANDLERS:
        raise RequestError(f"unknown command {command!r}")
    try:
        jsonschema.validate(args, ARG_SCHEMAS[command])
    except jsonschema.ValidationError as exc:
        raise RequestError(f"invalid args for {command}: {exc.message}") from None
    return HANDLERS[command](args)


def respond(index: int, line: str) -> dict:
    command = None
    try:
        req = json.loads(line)
        jsonschema.validate(req, REQUEST_SCHEMA)
        command = req["command"]
        return {"index": index, "command": command, "ok": True, "result": dispatch(command, req["args"])}
    except jsonschema.ValidationError as exc:
        return {"index": index, "command": command, "ok": False, "error": f"invalid request: {exc.message}"}
    except Exception as exc:  # every failure is reported on its own line
        return {"index": index, "command": command, "ok": False, "error": f"{type(exc).__name__}: {exc}"}


def thread_count() -> int:
    env = os.environ.get("TANGLEKIT_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return cap


def run_batch(lines: list[str]) -> list[dict]:
    work = [(i, ln) for i, ln in enumerate(lines) if ln.strip()]
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        return list(pool.map(lambda item: respond(*item), work))


# ---------------------------------------------------------------- argparse


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="replacement distance")
    common.add_argument("--bound", type=int, help="parameter bound for enumerations")
    common.add_argument("--oriented", action="store_true", help="distinguish mirror images")
    common.add_argument("--format", choices=["ascii", "svg"], default=None)
    common.add_argument("--verbose", action="store_true", help="report every witness")

    ap = argparse.ArgumentParser(prog="tanglekit", description=__doc__.splitlines()[0], parents=[common])
    ap.add_argument("--batch", metavar="FILE", help="JSON-lines request file ('-' for stdin)")
    sub = ap.add_subparsers(dest="command")

    def add(name: str, *pos: str, extra: Callable[[argparse.ArgumentParser], None] | None = None, help: str = ""):
        sp = sub.add_parser(name, parents=[common], help=help)
        for p in pos:
            sp.add_argument(p)
        if extra:
            extra(sp)
        return sp

    add("eval", "value", help="value of a continued fraction or slope")
    add("expand", "slope", help="canonical continued fraction of a slope")
    add("pair-canon", "x", "y", help="canonical class of a slope pair")
    add("classify-rsr", "x", "y", help="replacement families containing a pair")
    add("enumerate-family", "base", extra=lambda sp: sp.add_argument("--family", required=True,
        choices=["O", "I", "II", "III", "IV"]), help="members of a family around a base slope")
    add("tb-rsr", "x", "y", help="distance >= 2 replacement between 2-bridge links")
    add("tb-site", "x", "y", help="site continued fractions for a 2-bridge replacement")
    add("greene", "link", help="banding to the unknot")
    add("lisca", "link", help="banding to the 2-component unlink")

    def surgery_args(sp):
        for name in ("r", "s", "P", "Q", "n"):
            sp.add_argument(name, type=int)

    add("surgery", extra=surgery_args, help="1/n surgery on a torus knot in a lens space")
    add("surgery-solve", "source", "target", help="torus-knot surgeries between lens spaces")
    add("klein", extra=lambda sp: sp.add_argument("k", type=int), help="Klein-bottle fiber surgeries")
    add("catalog", "lens", help="Seifert-exterior knot types with lens surgeries")

    def render_args(sp):
        sp.add_argument("value")
        sp.add_argument("--site", type=int)
        sp.add_argument("--raw", action="store_true", help="print the drawing instead of JSON")

    add("render", extra=render_args, help="draw the 4-plat of a continued fraction")
    return ap


def _args_for(ns: argparse.Namespace, ap: argparse.ArgumentParser) -> dict:
    c = ns.command

    def need(flag: str) -> int:
        v = getattr(ns, flag)
        if v is None:
            ap.error(f"{c} requires --{flag}")
        return v

    if c == "eval":
        return {"value": ns.value}
    if c == "expand":
        return {"slope": ns.slope}
    if c == "pair-canon":
        return {"x": ns.x, "y": ns.y}
    if c == "classify-rsr":
        return {"x": ns.x, "y": ns.y, "d": need("d"), "verbose": ns.verbose}
    if c == "enumerate-family":
        return {"base": ns.base, "d": need("d"), "family": ns.family, "bound": need("bound")}
    if c in ("tb-rsr", "tb-site"):
        return {"x": ns.x, "y": ns.y, "d": need("d"), "oriented": ns.oriented}
    if c in ("greene", "lisca"):
        return {"link": ns.link}
    if c == "surgery":
        return {"r": ns.r, "s": ns.s, "P": ns.P, "Q": ns.Q, "n": ns.n}
    if c == "surgery-solve":
        return {"source": ns.source, "target": ns.target, "d": need("d"), "oriented": ns.oriented}
    if c == "klein":
        return {"k": ns.k, "bound": need("bound")}
    if c == "catalog":
        return {"lens": ns.lens}
    if c == "render":
        return {"value": ns.value, "format": ns.format or "ascii", "site": ns.site}
    raise AssertionError(c)


def _emit(obj: Any, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def run(argv: list[str] | None = None, stdout=None, stdin=None) -> int:
    out = stdout or sys.stdout
    ap = _build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.batch is not None:
        if ns.command:
            print("tanglekit: --batch takes no subcommand", file=sys.stderr)
            return 2
        try:
            if ns.batch == "-":
                lines = (stdin or sys.stdin).read().splitlines()
            else:
                with open(ns.batch, encoding="utf-8") as fh:
                    lines = fh.read().splitlines()
        except OSError as exc:
            print(f"tanglekit: {exc}", file=sys.stderr)
            return 2
        responses = run_batch(lines)
        for r in responses:
            _emit(r, out)
        return 0 if all(r["ok"] for r in responses) else 1
    if not ns.command:
        ap.print_usage(sys.stderr)
        return 2
    try:
        args = _args_for(ns, ap)
    except SystemExit as exc:
        return int(exc.code or 2)
    try:
        result = dispatch(ns.command, args)
    except Exception as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}"}, out)
        return 1
    if ns.command == "render" and getattr(ns, "raw", False):
        out.write(result["text"])
    else:
        _emit(result, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
