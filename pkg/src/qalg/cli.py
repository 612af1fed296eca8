"""Command-line driver: ``qalg <command> FILE [options]``.

Exit codes: 0 ok, 1 invalid input, 2 precondition failure, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra import validate
from .chains import chains, classify_stacked, proj_dim_simple
from .errors import ParseError, QalgError
from .hochschild import cocycle_support, find_generators
from .homology import (ext_basis, fg2_factorization_probe, injective, projective, resolve, simple)
from .parser import parse_spec
from .report import SCHEMA, build_report, center_json, presentation_json, render_text, verdict_json
from .varieties import classify_simples

DEFAULT_DEGREE = 12
DEFAULT_RESOLVE = 20


def _bound(value: int | None, default: int) -> int:
    if value is not None:
        return value
    env = os.environ.get("QALG_MAX_DEGREE")
    return int(env) if env else default


def _window(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like a..b, got {text!r}") from None


def _module(text: str) -> tuple[str, str]:
    kind, sep, v = text.partition(":")
    if not sep or kind not in ("simple", "proj", "inj") or not v:
        raise argparse.ArgumentTypeError(f"module must be simple:<v>, proj:<v> or inj:<v>, got {text!r}")
    return kind, v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qalg", description="Stacked monomial algebras: chains, HH*/N, varieties, homology.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help=".qalg input file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="parse and check the relations")
    c = sub.add_parser("chains", parents=[common], help="list R^0..R^n")
    c.add_argument("--max-degree", type=int)
    sub.add_parser("stacked", parents=[common], help="decide (D,A)-stackedness")
    sub.add_parser("hh", parents=[common], help="presentation of HH*/N")
    sub.add_parser("classify-simples", parents=[common], help="trivial/nontrivial variety per simple")
    c = sub.add_parser("pd", parents=[common], help="projective dimension of simples")
    c.add_argument("--vertex")
    c = sub.add_parser("resolve", parents=[common], help="minimal projective resolution of a standard module")
    c.add_argument("--module", type=_module, required=True, metavar="{simple|proj|inj}:V")
    c.add_argument("--max", type=int, dest="n_max")
    c.add_argument("--linear", action="store_true", help="use linear algebra at every step")
    sub.add_parser("center", parents=[common], help="the center Z(Lambda)")
    c = sub.add_parser("ext", parents=[common], help="chain basis of the Ext algebra")
    c.add_argument("--max-degree", type=int)
    c = sub.add_parser("fg-probe", parents=[common], help="factorization heuristic for (Fg2)")
    c.add_argument("--window", type=_window)
    c = sub.add_parser("report", parents=[common], help="full pipeline")
    c.add_argument("--parallel", action="store_true")
    c.add_argument("--timing", action="store_true", help="append wall-clock time (output no longer reproducible)")
    c.add_argument("--max", type=int, dest="n_max", help="resolution bound for injective dimensions")
    return p


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return text, validate(parse_spec(text))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_validate(args, src, alg):
    payload = {"ok": True, "name": alg.name, "vertices": len(alg.quiver.vertices), "arrows": alg.quiver.n_arrows,
               "relations": [str(r) for r in alg.rho], "dimension": alg.dimension, "warnings": list(alg.warnings)}
    text = [f"ok: {alg.name}: {payload['vertices']} vertices, {payload['arrows']} arrows, "
            f"{len(alg.rho)} relations, dimension {alg.dimension}"]
    text += [f"warning: {w}" for w in alg.warnings]
    _emit(args, payload, "\n".join(text))


def _cmd_chains(args, src, alg):
    n = _bound(args.max_degree, DEFAULT_DEGREE)
    sets = chains(alg, n)
    payload = {"chains": {str(k): [str(c) for c in cs] for k, cs in sets.items()}}
    lines = []
    for k, cs in sets.items():
        lines.append(f"R^{k} ({len(cs)}): " + ", ".join(str(c) for c in cs))
    _emit(args, payload, "\n".join(lines))


def _cmd_stacked(args, src, alg):
    v = classify_stacked(alg)
    if v.is_stacked:
        text = f"stacked: D={v.D} A={v.A} d={v.d}" + "".join(f"\n  {f}" for f in v.flags)
    else:
        text = f"not stacked: {v.reason}"
    _emit(args, {"stacked": verdict_json(v)}, text)


def _cmd_hh(args, src, alg):
    pres = find_generators(alg, classify_stacked(alg))
    js = presentation_json(alg, pres)
    lines = [f"HH*/N = {js['presentation']}"]
    for g in pres.generators:
        lines.append(f"  {g}")
        for c, v in cocycle_support(alg, g, pres.d).items():
            lines.append(f"    {c} -> e_{v}")
    lines += [f"  note: {n}" for n in pres.notes]
    _emit(args, {"hochschild": js}, "\n".join(lines))


def _cmd_classify(args, src, alg):
    pres = find_generators(alg, classify_stacked(alg))
    reports = classify_simples(alg, pres)
    lines = []
    for r in reports:
        wit = ", ".join(f"x{i}" for i in r.witnesses) or "-"
        lines.append(f"S_{r.vertex}: {r.status}  witnesses {wit}")
    _emit(args, {"varieties": {r.vertex: r.to_json() for r in reports}}, "\n".join(lines))


def _cmd_pd(args, src, alg):
    vs = [args.vertex] if args.vertex else list(alg.quiver.vertices)
    pds = {v: proj_dim_simple(alg, v) for v in vs}
    _emit(args, {"pd": {v: d.to_json() for v, d in pds.items()}}, "\n".join(f"pd S_{v} = {d}" for v, d in pds.items()))


def _cmd_resolve(args, src, alg):
    kind, v = args.module
    M = {"simple": simple, "proj": projective, "inj": injective}[kind](alg, v)
    trace = resolve(M, _bound(args.n_max, DEFAULT_RESOLVE), "linear" if args.linear else "auto")
    lines = [f"resolution of {trace.module}:"]
    for n, t in enumerate(trace.terms):
        lines.append(f"  P_{n}: " + (" + ".join(f"e_{w}^{k}" for w, k in t.items()) or "0"))
    lines.append(f"  outcome: {trace.outcome.to_json()}")
    _emit(args, {"resolution": trace.to_json()}, "\n".join(lines))


def _cmd_center(args, src, alg):
    js = center_json(alg)
    lines = [f"Z dimension {js['dimension']} ({js['identity_components']} component identities)"]
    lines += [f"  z = {g}" for g in js["radical_generators"]]
    lines += [f"  {z} nilpotent of order {k}" for z, k in js["nilpotency"].items()]
    _emit(args, {"center": js}, "\n".join(lines))


def _cmd_ext(args, src, alg):
    n = _bound(args.max_degree, DEFAULT_DEGREE)
    basis = {k: [str(c) for c in ext_basis(alg, k)] for k in range(n + 1)}
    lines = [f"E^{k}: {len(b)}" for k, b in basis.items()]
    _emit(args, {"ext_basis": {str(k): b for k, b in basis.items()}}, "\n".join(lines))


def _cmd_fg(args, src, alg):
    pres = find_generators(alg, classify_stacked(alg))
    ev = fg2_factorization_probe(alg, pres, args.window)
    lines = [f"fg2 probe {ev.window[0]}..{ev.window[1]}: {ev.verdict} ({ev.caveat})"]
    lines += [f"  not factoring: degree {c.degree}: {c}" for c in ev.non_factoring]
    _emit(args, {"fg2_probe": ev.to_json()}, "\n".join(lines))


def _cmd_report(args, src, alg):
    start = time.perf_counter()
    rep = build_report(alg, src, os.path.basename(args.file), _bound(args.n_max, DEFAULT_RESOLVE), args.parallel)
    if args.timing:
        rep["timing"] = time.perf_counter() - start
    if args.json:
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(rep))


COMMANDS = {
    "validate": _cmd_validate,
    "chains": _cmd_chains,
    "stacked": _cmd_stacked,
    "hh": _cmd_hh,
    "classify-simples": _cmd_classify,
    "pd": _cmd_pd,
    "resolve": _cmd_resolve,
    "center": _cmd_center,
    "ext": _cmd_ext,
    "fg-probe": _cmd_fg,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        src, alg = _load(args.file)
        COMMANDS[args.command](args, src, alg)
    except ParseError as e:
        print(f"{args.file}:{e}", file=sys.stderr)
        return e.exit_code
    except QalgError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except Exception as e:  # anything else is a bug
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
