"""Command-line front end.

Exit codes: 0 property verified, 1 property false, 2 inconclusive (solver
budget), 3 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import bounds as B
from .checks import check_lemma4, check_recurrence, check_valtr_lift
from .constructions import (ConstructionParams, RefinementError, build_kv_certified,
                            build_Y)
from .mc import mc
from .pointio import dumps, load_pointset, pointset_to_dict, save_json
from .verifiers import (general_position_decomposition, is_convex_position,
                        is_general_position, max_hyperplane_incidence)

log = logging.getLogger("eslab")

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
STATUS_EXIT = {"pass": EXIT_OK, "fail": EXIT_FALSE, "inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


def instance_name(kind: str, d: int, i: int, seed: int, l: int | None = None) -> str:
    if kind == "Y":
        return f"Y_d{d}_l{l}_i{i}_s{seed}"
    return f"X_d{d}_i{i}_s{seed}"


def run_config(args, keys) -> dict:
    return {"command": args.command, **{k: getattr(args, k) for k in keys}}


def emit(doc: dict, out: str | None, default_name: str) -> None:
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    if out is None:
        sys.stdout.write(dumps(doc))
        return
    path = Path(out)
    if path.suffix != ".json":
        path.mkdir(parents=True, exist_ok=True)
        path = path / default_name
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
    save_json(doc, path)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n for n in missing))


# --------------------------------------------------------------------------
# commands

def cmd_construct(args) -> int:
    _require(args, "d", "i")
    if args.kind == "Y":
        _require(args, "l")
    name = instance_name(args.kind, args.d, args.i, args.seed, args.l)
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    try:
        if args.kind == "X":
            P, used, cert = build_kv_certified(ConstructionParams(args.d, args.i, seed=args.seed))
            meta = {"kind": "X", "instance": name, "params": used.to_dict(),
                    "n_points": len(P), "certification": cert}
        else:
            Y = build_Y(ConstructionParams(args.d, args.i, l=args.l, seed=args.seed))
            P = Y.base
            meta = {"kind": "Y", "instance": name, "n_points": len(P), **Y.metadata()}
    except RefinementError as exc:
        log.error("%s", exc)
        return EXIT_FALSE
    meta["run_config"] = run_config(args, ["kind", "d", "l", "i", "seed"])
    (out / f"{name}.json").write_text(dumps(pointset_to_dict(P)))
    save_json({"schema_version": SCHEMA_VERSION, **meta}, out / f"{name}.meta.json")
    print(f"{name}: {len(P)} points written to {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    """Exit status reflects the requested properties only; with none
    requested every property is reported and the exit status is 0."""
    P = load_pointset(args.input)
    doc = {"check": "verify", "instance": Path(args.input).stem, "values": {}, "witnesses": {}}
    asserted = list(args.property or [])
    if args.assert_incidence_below is not None and "incidence" not in asserted:
        asserted.append("incidence")
    props = asserted or ["general-position", "convex-position", "incidence"]
    holds = {}
    for prop in props:
        if prop == "incidence":
            cert = max_hyperplane_incidence(P)
            doc["values"]["max_hyperplane_incidence"] = cert.max_count
            doc["witnesses"]["incidence"] = cert.to_dict()
            if args.assert_incidence_below is not None:
                doc["values"]["incidence_below"] = args.assert_incidence_below
            holds[prop] = (args.assert_incidence_below is None
                           or cert.max_count < args.assert_incidence_below)
        else:
            test = is_general_position if prop == "general-position" else is_convex_position
            r = test(P)
            key = prop.replace("-", "_")
            doc["values"][key] = r.ok
            doc["witnesses"][key] = list(r.witness) if r.witness else None
            holds[prop] = r.ok
    ok = all(holds[p] for p in asserted)
    doc["status"] = "pass" if ok else "fail"
    doc["run_config"] = run_config(args, ["input", "property", "assert_incidence_below"])
    emit(doc, args.out, f"{Path(args.input).stem}.verify.json")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_mc(args) -> int:
    P = load_pointset(args.input, allow_duplicates=True)
    r = mc(P, args.budget, args.method)
    doc = {"check": "mc", "instance": Path(args.input).stem, "values": r.to_dict(),
           "status": "pass" if r.conclusive else "inconclusive",
           "run_config": run_config(args, ["input", "budget", "method"])}
    emit(doc, args.out, f"{Path(args.input).stem}.mc.json")
    return EXIT_OK if r.conclusive else EXIT_INCONCLUSIVE


def cmd_decompose(args) -> int:
    P = load_pointset(args.input)
    rep = general_position_decomposition(P, args.l)
    status = "pass" if rep.bound_holds in (True, None) else "fail"
    doc = {"check": "decompose", "instance": Path(args.input).stem, "values": rep.to_dict(),
           "status": status, "run_config": run_config(args, ["input", "l"])}
    emit(doc, args.out, f"{Path(args.input).stem}.decompose.json")
    return STATUS_EXIT[status]


def _level(args, i):
    if args.kind == "X":
        P, _, _ = build_kv_certified(ConstructionParams(args.d, i, seed=args.seed))
        return P
    return build_Y(ConstructionParams(args.d, i, l=args.l, seed=args.seed))


def cmd_recurrence(args) -> int:
    _require(args, "d", "i")
    if args.kind == "Y":
        _require(args, "l")
    if args.kind == "Y" and args.i < 1:
        raise UsageError("Y levels start at i = 1")
    rep = check_recurrence(_level(args, args.i), _level(args, args.i + 1), args.budget)
    rep.instance = instance_name(args.kind, args.d, args.i, args.seed, args.l)
    doc = {**rep.to_dict(), "run_config": run_config(args, ["kind", "d", "l", "i", "seed", "budget"])}
    emit(doc, args.out, f"{rep.instance}.recurrence.json")
    return STATUS_EXIT[rep.status]


def cmd_lemma4(args) -> int:
    _require(args, "d", "l", "i")
    Y = build_Y(ConstructionParams(args.d, args.i, l=args.l, seed=args.seed))
    rep = check_lemma4(Y, budget=args.budget)
    rep.instance = instance_name("Y", args.d, args.i, args.seed, args.l)
    doc = {**rep.to_dict(), "run_config": run_config(args, ["d", "l", "i", "seed", "budget"])}
    emit(doc, args.out, f"{rep.instance}.lemma4.json")
    return STATUS_EXIT[rep.status]


def cmd_lift(args) -> int:
    P = load_pointset(args.input)
    try:
        rep = check_valtr_lift(P, args.seed, budget=args.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep.instance = Path(args.input).stem
    doc = {**rep.to_dict(), "run_config": run_config(args, ["input", "seed", "budget"])}
    emit(doc, args.out, f"{rep.instance}.lift.json")
    return STATUS_EXIT[rep.status]


def _bound_values(args) -> list[B.BoundValue]:
    name = args.name
    c = Fraction(args.c)
    out = []

    def want(n):
        return name in ("all", n)

    n, d, l = args.n, args.d, args.l
    if want("es2_upper_1935") and n is not None:
        out.append(B.es2_upper_1935(n))
    if want("es2_upper_kp") and n is not None:
        out.append(B.es2_upper_kp(n))
    if want("es2_lower") and n is not None:
        out.append(B.es2_lower(n))
    if want("karolyi_upper") and None not in (d, n):
        out.append(B.karolyi_upper(d, n))
    if want("kv_es_lower") and None not in (d, n):
        out.append(B.kv_es_lower(d, n, c, args.mode))
    if want("thm11_upper") and None not in (l, d):
        es_dn = args.es_dn if args.es_dn is not None else B.karolyi_upper(d, n).value
        out.append(B.thm11_upper(l, n, d, es_dn))
    if want("thm12_lower") and None not in (l, n, d):
        out.append(B.thm12_lower(l, n, d, c, args.mode))
    if want("conlon") and None not in (l, n):
        out.extend(B.conlon_bounds(l, n, c, args.mode))
    if want("twr") and args.k is not None and args.x is not None:
        out.append(B.twr(args.k, args.x))
    if not out:
        raise UsageError(f"no bound named {name!r} can be evaluated from the given options")
    return out


def cmd_bounds(args) -> int:
    try:
        values = _bound_values(args)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    rows = [v.to_dict() for v in values]
    if args.format == "json":
        emit({"check": "bounds", "values": rows,
              "run_config": run_config(args, ["name", "n", "d", "l", "c", "es_dn", "k", "x", "mode"])},
             args.out, "bounds.json")
    else:
        for r in rows:
            value = r["value"] if r["value"] is not None else r["formula"]
            params = ", ".join(f"{k}={v}" for k, v in r["params"].items())
            print(f"{r['name']}({params}) = {value}  [bits={r['bit_length']}]")
    return EXIT_OK


# --------------------------------------------------------------------------
# report

REPORT_COLUMNS = ["instance", "kind", "d", "l", "i", "seed", "n_points", "max_incidence",
                  "incidence_ok", "mc_Y", "mc_X", "lemma4", "recurrence_mc_next",
                  "recurrence_rhs", "recurrence"]


def _read_json(path: Path):
    try:
        return path, json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        log.warning("skipping %s: %s", path, exc)
        return path, None


def aggregate(directory: Path, jobs: int = 1) -> list[dict]:
    files = sorted(directory.glob("*.json"))
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        docs = list(pool.map(_read_json, files))
    rows: dict[str, dict] = {}

    def row(name):
        return rows.setdefault(name, {"instance": name})

    for path, doc in docs:
        if not isinstance(doc, dict) or "instance" not in doc:
            continue
        r = row(doc["instance"])
        if path.name.endswith(".meta.json"):
            p = doc.get("params", {})
            cert = doc.get("certification", {})
            r.update(kind=doc.get("kind"), d=p.get("d"), l=p.get("l"), i=p.get("i"),
                     seed=p.get("seed"), n_points=doc.get("n_points"),
                     max_incidence=cert.get("max_hyperplane_incidence"),
                     incidence_ok=cert.get("incidence_ok"))
        elif doc.get("check") == "lemma4":
            v = doc.get("values", {})
            r.update(mc_Y=v.get("mc_Y"), mc_X=v.get("mc_X"), lemma4=doc.get("status"))
        elif doc.get("check") == "recurrence":
            v = doc.get("values", {})
            r.update(recurrence_mc_next=v.get("mc_next"), recurrence_rhs=v.get("rhs"),
                     recurrence=doc.get("status"))
    return [rows[k] for k in sorted(rows)]


def render_svg(points: list, cluster_of: list | None, size: int = 400) -> str:
    xs = [float(p[0]) for p in points]
    ys = [float(p[1]) for p in points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    sx = (size - 20) / ((x1 - x0) or 1.0)
    sy = (size - 20) / ((y1 - y0) or 1.0)
    palette = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
               "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    for k, (x, y) in enumerate(zip(xs, ys)):
        c = palette[(cluster_of[k] if cluster_of else 0) % len(palette)]
        cx, cy = 10 + (x - x0) * sx, size - 10 - (y - y0) * sy
        parts.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="3" fill="{c}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_report(args) -> int:
    directory = Path(args.input)
    if not directory.is_dir():
        raise UsageError(f"{directory} is not a directory")
    rows = aggregate(directory, args.jobs)
    if not rows:
        log.warning("no run outputs found in %s", directory)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["schema_version"] + REPORT_COLUMNS,
                                extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({"schema_version": SCHEMA_VERSION, **r})
        text = buf.getvalue()
    else:
        text = dumps({"schema_version": SCHEMA_VERSION, "rows": rows})
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        svg_dir = Path(args.out).parent if args.out else directory
        for r in rows:
            if r.get("d") != 2:
                continue
            pts_file = directory / f"{r['instance']}.json"
            meta_file = directory / f"{r['instance']}.meta.json"
            if not pts_file.exists():
                continue
            P = load_pointset(pts_file)
            meta = json.loads(meta_file.read_text()) if meta_file.exists() else {}
            (svg_dir / f"{r['instance']}.svg").write_text(render_svg(P.points, meta.get("cluster_of")))
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eslab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p, kind=True):
        if kind:
            p.add_argument("--kind", choices=["X", "Y"], default="Y")
        p.add_argument("--d", type=int)
        p.add_argument("--l", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--seed", type=int, default=0)

    def budget(p):
        p.add_argument("--budget", type=int, default=None,
                       help="branch-and-bound node cap (default ESLAB_BUDGET or 10^7)")

    p = sub.add_parser("construct", help="build X_i or Y_i and certify it")
    params(p)
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="general position / convex position / incidence")
    p.add_argument("input")
    p.add_argument("--property", action="append",
                   choices=["general-position", "convex-position", "incidence"])
    p.add_argument("--assert-incidence-below", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mc", help="largest subset in convex position")
    p.add_argument("input")
    p.add_argument("--method", choices=["auto", "dp", "bnb"], default="auto")
    budget(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("decompose", help="maximal general-position subset and covering hyperplanes")
    p.add_argument("input")
    p.add_argument("--l", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    for name, func, kind in (("recurrence", cmd_recurrence, True), ("lemma4", cmd_lemma4, False)):
        p = sub.add_parser(name)
        params(p, kind)
        budget(p)
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("lift", help="project, solve, lift back, check convexity")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    budget(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("bounds", help="evaluate closed-form bounds exactly")
    p.add_argument("--name", default="all",
                   choices=["all", "es2_upper_1935", "es2_upper_kp", "es2_lower", "karolyi_upper",
                            "kv_es_lower", "thm11_upper", "thm12_lower", "conlon", "twr"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--c", default="1", help="asymptotic constant (rational)")
    p.add_argument("--es-dn", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--mode", choices=list(B.MODES), default="floor")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("report", help="aggregate a directory of run outputs")
    p.add_argument("input")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--svg", action="store_true", help="also draw d=2 instances")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
