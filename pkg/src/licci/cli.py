"""Command-line front end.

Usage errors exit with status 2, domain errors print a JSON object
``{"error": code, "message": ...}`` and exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional

from . import admissibility, constructions, enumgraph, families, linkage, torclass, weyl
from .core import Decoration, canonical_partition, format_of
from .errors import LicciError

OUT_DIR_ENV = "LICCI_OUT_DIR"


@dataclass
class Config:
    max_steps: int = admissibility.DEFAULT_MAX_STEPS
    max_k: int = 6
    budget: Optional[int] = None
    max_length: int = 14


def load_config(path: Optional[str]) -> Config:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    cfg = Config()
    if not path:
        return cfg
    names = {f.name for f in fields(Config)}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in names:
            raise SystemExit(f"bad config line: {line!r}")
        setattr(cfg, key, int(value.strip().strip('"')))
    return cfg


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _find_decoration(obj) -> dict:
    if isinstance(obj, dict):
        if {"c", "lambda", "mu"} <= obj.keys():
            return obj
        for key in ("decoration", "target"):
            if key in obj:
                return _find_decoration(obj[key])
    raise UsageError("JSON input holds no decoration")


def decoration_from_args(args) -> Decoration:
    if getattr(args, "from_json", None):
        src = args.from_json
        if src == "-":
            text = sys.stdin.read()
        elif src.lstrip().startswith("{"):
            text = src
        else:
            try:
                text = Path(src).read_text()
            except OSError as exc:
                raise UsageError(f"cannot read {src}: {exc.strerror}") from None
        try:
            return Decoration.from_json(_find_decoration(json.loads(text)))
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON: {exc}") from None
    if args.lam is None or args.mu is None:
        raise UsageError("give --lambda and --mu, or --from-json")
    lam, mu = _int_list(args.lam), _int_list(args.mu)
    for name, raw in (("lambda", lam), ("mu", mu)):
        if any(x < 0 for x in raw):
            continue  # rejected by the constructor as a domain error
        canon = list(canonical_partition(raw))
        if canon != raw:
            if args.strict:
                raise UsageError(f"--{name} is not in canonical form (expected {canon})")
            print(f"note: --{name} canonicalized to {','.join(map(str, canon))}", file=sys.stderr)
    return Decoration(args.c, tuple(lam), tuple(mu))


def _dec_row(dec: Decoration) -> str:
    return f"{dec.short():40s} k={dec.k:<3d} format={format_of(dec)}"


def emit(payload: dict, table: str, args) -> None:
    text = json.dumps(payload, sort_keys=True) if args.format == "json" else table
    out = getattr(args, "out", None)
    if out:
        path = Path(out)
        base = os.environ.get(OUT_DIR_ENV)
        if base and not path.is_absolute():
            path = Path(base) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


# subcommands


def cmd_check(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    if args.method == "descent":
        v = admissibility.is_decoration_descent(dec)
    elif args.method == "chain":
        v = admissibility.is_decoration_smallest_chain(dec, args.max_steps or cfg.max_steps)
    else:
        v = admissibility.is_decoration(dec)
    payload = {"decoration": dec.to_json(), "verdict": v.to_json()}
    if dec.c >= 4:
        payload["note"] = "combinatorial vertex of the codimension c graph"
    lines = [f"{dec}: {v.status.value} ({v.reason})"]
    lines += [f"  {s.choice} p={s.p} -> {s.target.short()}" for s in v.certificate]
    emit(payload, "\n".join(lines), args)
    return 0


def cmd_neighbors(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    rs = linkage.neighbors(dec)
    payload = {"decoration": dec.to_json(), "neighbors": [r.to_json() for r in rs]}
    table = "\n".join(
        f"{','.join(map(str, r.choice)):>12s}  p={r.p:<4d} {_dec_row(r.target)}" for r in rs
    )
    emit(payload, table, args)
    return 0


def cmd_link(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    r = linkage.link(dec, _int_list(args.choice))
    payload = {"decoration": dec.to_json(), **r.to_json()}
    emit(payload, f"p={r.p} {_dec_row(r.target)}", args)
    return 0


def cmd_path(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    v = admissibility.is_decoration_smallest_chain(dec, args.max_steps or cfg.max_steps)
    steps = [{"decoration": dec.to_json(), "betti": constructions.betti_shape(dec).to_json()}]
    lines = [_dec_row(dec)]
    for s in v.certificate:
        steps.append(
            {"choice": list(s.choice), "p": s.p, "decoration": s.target.to_json(),
             "betti": constructions.betti_shape(s.target).to_json()}
        )
        lines.append(f"  {s.choice} p={s.p} -> {_dec_row(s.target)}")
    lines.append(f"{v.status.value} ({v.reason})")
    emit({"decoration": dec.to_json(), "status": v.status.value, "reason": v.reason, "path": steps},
         "\n".join(lines), args)
    return 0


def _graph_json(graph: enumgraph.LicciGraph, vertices) -> dict:
    return {
        "c": graph.c,
        "max_k": graph.max_k,
        "complete": graph.complete,
        "vertices": [v.to_json() for v in vertices],
        "count": len(vertices),
    }


def cmd_enumerate(args, cfg: Config) -> int:
    max_k = args.max_k if args.max_k is not None else cfg.max_k
    budget = args.budget if args.budget is not None else cfg.budget
    if args.method == "bfs":
        graph = enumgraph.enumerate_bfs(args.c, max_k, budget=budget)
    else:
        graph = enumgraph.enumerate_levels(args.c, max_k, with_edges=args.export is not None)
    verts = sorted(graph.vertices)
    if args.format_filter:
        d, t = _int_list(args.format_filter)
        verts = [v for v in verts if v.d == d and v.t == t]
        graph = enumgraph.LicciGraph(graph.c, graph.max_k, set(verts),
                                     {e for e in graph.edges if e[0] in verts and e[3] in verts},
                                     graph.complete)
    if args.export:
        data = enumgraph.export(graph, args.export).decode()
        if args.out:
            emit({}, data.rstrip("\n"), argparse.Namespace(format="table", out=args.out))
        else:
            sys.stdout.write(data)
        return 0
    emit(_graph_json(graph, verts), "\n".join(_dec_row(v) for v in verts), args)
    return 0


def _parse_class_format(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) == 4 and vals[0] == 1:
        r1, r3 = vals[1], vals[3]
    elif len(vals) == 2:
        r1, r3 = vals
    else:
        raise UsageError("--format takes r1,r3 (e.g. 5,2) or a full format 1,r1,r2,r3")
    if r1 < 3 or r3 < 1:
        raise UsageError(f"no codimension 3 format has r1={r1}, r3={r3}")
    return r1 - 3, r3


def cmd_classes(args, cfg: Config) -> int:
    if args.c != 3:
        raise UsageError("classes is defined for c = 3")
    d, t = _parse_class_format(args.class_format)
    verts = enumgraph.classes_by_format(d, t, args.max_k)
    payload = {"format": [1, d + 3, d + t + 2, t], "count": len(verts), "classes": [v.to_json() for v in verts]}
    emit(payload, "\n".join(_dec_row(v) for v in verts) + f"\n{len(verts)} classes", args)
    return 0


def cmd_tor(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    prof = torclass.tor_profile(dec)
    emit({"decoration": dec.to_json(), **prof.to_json()}, f"{dec}: {prof.label}", args)
    return 0


def cmd_betti(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    shape = constructions.betti_shape(dec)
    emit({"decoration": dec.to_json(), "betti": shape.to_json()}, shape.table(), args)
    return 0


def cmd_double(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    out = constructions.doubling(dec)
    emit({"source": dec.to_json(), "decoration": out.to_json()}, str(out), args)
    return 0


def cmd_hyperplane(args, cfg: Config) -> int:
    dec = decoration_from_args(args)
    out = constructions.hyperplane_section(dec)
    emit({"source": dec.to_json(), "decoration": out.to_json()}, str(out), args)
    return 0


def cmd_family(args, cfg: Config) -> int:
    if args.chain:
        rep = families.family_chain_check(args.name, *(int(p) for p in args.params[:1]))
        emit(rep.to_json(), f"{rep.name}: {rep.steps} steps, {'ok' if rep.ok else 'MISMATCH'}", args)
        return 0
    res = families.family(args.name, *args.params)
    items = res if isinstance(res, list) else [res]
    payload = {"family": args.name, "params": args.params, "decorations": [d.to_json() for d in items]}
    if not isinstance(res, list):
        payload["decoration"] = res.to_json()
    emit(payload, "\n".join(str(d) for d in items), args)
    return 0


def cmd_oracle(args, cfg: Config) -> int:
    length = args.max_length if args.max_length is not None else cfg.max_length
    rep = weyl.verify_against_formula(length)
    payload = rep.to_json()
    table = (
        f"length <= {length}: {payload['vertices']} vertices, {payload['edges']} edges; "
        f"vertices {'agree' if rep.vertices_agree else 'DIFFER'}, edges {'agree' if rep.edges_agree else 'DIFFER'}"
    )
    emit(payload, table, args)
    return 0


def _add_decoration_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c", type=int, default=3, help="codimension (default 3)")
    p.add_argument("--lambda", dest="lam", help="comma-separated parts of lambda")
    p.add_argument("--mu", help="comma-separated parts of mu")
    p.add_argument("--from-json", help="decoration JSON: literal, file path, or - for stdin")
    p.add_argument("--strict", action="store_true", help="reject non-canonical input")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="licci", description="Combinatorics of the licci graph.")
    parser.add_argument("--format", choices=["json", "table"], default="json", help="output style")
    parser.add_argument("--config", help="file of key=value defaults (max_steps, max_k, budget, max_length)")
    parser.add_argument("--out", help=f"write output here (relative to ${OUT_DIR_ENV} if set)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a pair is a decoration")
    _add_decoration_args(p)
    p.add_argument("--method", choices=["auto", "descent", "chain"], default="auto")
    p.add_argument("--max-steps", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("neighbors", help="all links of a decoration")
    _add_decoration_args(p)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("link", help="link with an explicit choice")
    _add_decoration_args(p)
    p.add_argument("--choice", required=True, help="c comma-separated parts of lambda (zeros allowed)")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("path-to-ci", help="smallest minimal link chain with Betti shapes")
    _add_decoration_args(p)
    p.add_argument("--max-steps", type=int)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("enumerate", help="all decorations up to a level")
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--max-k", type=int)
    p.add_argument("--budget", type=int, help="intermediate level budget (bfs method)")
    p.add_argument("--method", choices=["levels", "bfs"], default="levels")
    p.add_argument("--format-filter", help="d,t")
    p.add_argument("--export", choices=["dot", "jsonl"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classes", help="classes of a codimension 3 format")
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--format", dest="class_format", required=True, help="r1,r3 or 1,r1,r2,r3")
    p.add_argument("--max-k", type=int, help="level cap (required for non-Dynkin formats)")
    p.set_defaults(func=cmd_classes)

    for name, func, help_ in (
        ("tor-class", cmd_tor, "Tor algebra multiplication profile (c = 3)"),
        ("betti", cmd_betti, "graded shifts of the resolution"),
        ("double", cmd_double, "Gorenstein doubling one codimension up"),
        ("hyperplane", cmd_hyperplane, "hyperplane section"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_decoration_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("family", help="named decorations and families")
    p.add_argument("name", help=", ".join(families.FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--chain", action="store_true", help="replay the family's link chain")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("oracle", help="Weyl group oracle")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    v = osub.add_parser("verify", help="compare orbit and linkage formula (c = 3)")
    v.add_argument("--max-length", type=int)
    v.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = load_config(args.config)
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except LicciError as exc:
        print(json.dumps(exc.to_json(), sort_keys=True))
        return 1
    except OverflowError as exc:
        print(json.dumps({"error": "overflow", "message": str(exc)}, sort_keys=True))
        return 1


def main() -> int:
    return run()


if __name__ == "__main__":
    raise SystemExit(main())
