"""Command line interface.

    nutamari enumerate --nu ENEENEE
    nutamari poset --pair "I=1,2,4;J=0,3" --mode B --n 4 --format dot
    nutamari hvector --pair "I=0,1,2;J=0,1,2" --mode B
    nutamari tropical --nu "(NE)^3" --format svg --out pentagon.svg
    nutamari check --all --max-size 9
    nutamari render --nu "(NE^2)^2" --what complex --format svg
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool
from typing import Optional

from .checks import CheckResult, _check_row, has_failure, run_checks
from .complexes import TamariComplex
from .core import IndexPair, nu_of_pair, normalize, pair_of_nu, parse_nu, parse_pair
from .heights import HeightFunction, default_height
from .paths import enumerate_paths_above, rho
from .posets import build_tree_poset, lattice_check, to_dot
from .render import complex_payload, complex_to_svg, hvector_payload, to_json
from .tropical import build_geometric_complex
from .trees import Tree, enumerate_trees


def _add_pair_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--pair", help='index pair, e.g. "I=0,1,3;J=2,5,8"')
    sp.add_argument("--nu", help='path word, e.g. ENEENEE or "(NE^2)^3"')
    sp.add_argument("--mode", choices=("A", "B"), default="A")
    sp.add_argument("--n", type=int, default=-1, help="ambient maximum (mode B)")
    sp.add_argument("--height", help="JSON file with exact rational heights")


def _add_out_args(sp: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    sp.add_argument("--format", choices=formats, default=formats[0])
    sp.add_argument("--out", help="output file (stdout when omitted)")


def _resolve_pair(args) -> IndexPair:
    if args.nu and args.pair:
        raise SystemExit("give either --pair or --nu, not both")
    if args.nu:
        if args.mode == "B":
            raise SystemExit("--nu describes a linear pair; use --pair for mode B")
        return pair_of_nu(parse_nu(args.nu))
    if not args.pair:
        raise SystemExit("one of --pair or --nu is required")
    p = parse_pair(args.pair, args.mode, args.n)
    if p.mode == "A" and not p.is_standing():
        q = normalize(p)
        print(f"note: normalized {p.label()} to {q.label()}", file=sys.stderr)
        return q
    return p


def _resolve_height(args, p: IndexPair) -> Optional[HeightFunction]:
    if not getattr(args, "height", None):
        return None
    with open(args.height) as fh:
        data = json.load(fh)
    entries = data.get("entries", data)
    return HeightFunction.from_json_entries(p, entries)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tree_label(t: Tree) -> str:
    return " ".join(f"{i}-{j}" for i, j in t)


def cmd_enumerate(args) -> int:
    p = _resolve_pair(args)
    trees = enumerate_trees(p)
    lines = [f"pair {p.label()} mode {p.mode}"]
    if p.mode == "A":
        nu = nu_of_pair(p)
        lines.append(f"nu {nu}")
        paths = enumerate_paths_above(nu)
        lines.append(f"trees {len(trees)}, paths above nu {len(paths)}")
        for k, t in enumerate(trees):
            lines.append(f"T{k}: {_tree_label(t)}  ->  {rho(p, t)}")
    else:
        lines.append(f"trees {len(trees)}")
        for k, t in enumerate(trees):
            lines.append(f"T{k}: {_tree_label(t)}")
    if args.format == "json":
        obj = {
            "pair": {"I": list(p.I), "J": list(p.J), "mode": p.mode, "n": p.n},
            "count": len(trees),
            "trees": [[list(a) for a in t] for t in trees],
        }
        if p.mode == "A":
            obj["nu"] = nu_of_pair(p)
            obj["paths"] = list(enumerate_paths_above(obj["nu"]))
        _emit(to_json(obj), args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_poset(args) -> int:
    p = _resolve_pair(args)
    P = build_tree_poset(p)
    if args.format == "dot":
        _emit(to_dot(P, labeler=_tree_label, name="tamari"), args.out)
        return 0
    lat = lattice_check(P)
    if args.format == "json":
        obj = {
            "pair": {"I": list(p.I), "J": list(p.J), "mode": p.mode, "n": p.n},
            "elements": [[list(a) for a in t] for t in P.elements],
            "covers": [list(e) for e in P.cover_pairs()],
            "minima": list(P.minima()),
            "maxima": list(P.maxima()),
            "is_lattice": lat.is_lattice,
        }
        _emit(to_json(obj), args.out)
        return 0
    lines = [f"pair {p.label()} mode {p.mode}: {len(P)} elements"]
    for a, b in P.cover_pairs():
        lines.append(f"T{a} < T{b}")
    lines.append(f"minima {list(P.minima())}, maxima {list(P.maxima())}")
    lines.append("lattice" if lat.is_lattice else f"not a lattice: {lat.failure}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _trim(h) -> tuple[int, ...]:
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def cmd_hvector(args) -> int:
    p = _resolve_pair(args)
    payload = hvector_payload(p)
    if args.format == "json":
        _emit(to_json(payload), args.out)
        return 0
    lines = [
        f"pair {p.label()} mode {p.mode}",
        f"facets {payload['facet_count']}",
        f"f = {tuple(payload['f_vector'])}",
        f"h = {_trim(payload['h_vector'])}",
    ]
    if p.mode == "A":
        lines.append(f"h (shelling) = {_trim(payload['h_vector_shelling'])}")
        lines.append(f"narayana     = {_trim(payload['narayana'])}")
        ok = _trim(payload["h_vector"]) == _trim(payload["h_vector_shelling"]) == _trim(
            payload["narayana"]
        )
    else:
        lines.append(f"h (formula)  = {_trim(payload['h_formula'])}")
        ok = _trim(payload["h_vector"]) == _trim(payload["h_formula"])
    lines.append("agreement PASS" if ok else "agreement FAIL")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_tropical(args) -> int:
    p = _resolve_pair(args)
    h = _resolve_height(args, p)
    gc = build_geometric_complex(p, h)
    if args.format == "svg":
        poset = build_tree_poset(p) if args.arrows else None
        _emit(complex_to_svg(gc, poset=poset, show_apexes=not args.no_apexes), args.out)
        return 0
    if args.format == "json":
        _emit(to_json(complex_payload(gc)), args.out)
        return 0
    lines = [f"pair {p.label()} mode {p.mode}: {len(gc.trees)} vertices"]
    for d in range(max(c.dim for c in gc.cells) + 1):
        lines.append(f"cells of dim {d}: {len(gc.cells_of_dim(d))}")
    for k, pt in enumerate(gc.coords):
        lines.append(f"T{k}: ({', '.join(str(c) for c in pt)})")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_render(args) -> int:
    p = _resolve_pair(args)
    if args.what == "poset":
        if args.format != "dot":
            raise SystemExit("poset rendering is DOT only")
        P = build_tree_poset(p)
        _emit(to_dot(P, labeler=_tree_label, name="tamari"), args.out)
        return 0
    h = _resolve_height(args, p)
    gc = build_geometric_complex(p, h)
    if args.format == "svg":
        poset = build_tree_poset(p) if args.arrows else None
        _emit(complex_to_svg(gc, poset=poset), args.out)
    else:
        _emit(to_json(complex_payload(gc)), args.out)
    return 0


def _format_results(label: str, results: list[CheckResult]) -> str:
    lines = [label]
    for r in results:
        lines.append(f"  {r.status:<4} {r.name}: {r.detail}")
    return "\n".join(lines)


def _all_pairs(max_size: int) -> list[IndexPair]:
    out = []
    for length in range(0, max_size - 1):
        words = [""]
        for _ in range(length):
            words = [w + c for w in words for c in "EN"]
        for w in sorted(words):
            if len(w) == length:
                out.append(pair_of_nu(w))
    seen = set()
    pairs = []
    for p in out:
        if p not in seen:
            seen.add(p)
            pairs.append(p)
    for n in range(1, (max_size - 2) // 2 + 1):
        r = tuple(range(n + 1))
        pairs.append(IndexPair(r, r, "B"))
    pairs.append(IndexPair((0, 3, 4), (1, 2), "B", 4))
    pairs.append(IndexPair((1, 2, 4), (0, 3), "B", 4))
    return pairs


def cmd_check(args) -> int:
    if args.all:
        pairs = _all_pairs(args.max_size)
        tasks = [(p, None) for p in pairs]
        if args.jobs > 1:
            with Pool(args.jobs) as pool:
                rows = pool.map(_check_row, tasks)
        else:
            rows = [_check_row(t) for t in tasks]
        failed = 0
        lines = []
        for label, results in rows:
            bad = [r for r in results if r.status == "FAIL"]
            findings = [r for r in results if r.status == "INFO"]
            status = "PASS" if not bad else "FAIL"
            failed += bool(bad)
            summary = "; ".join(f"{r.name}" for r in bad) or ", ".join(
                f"{r.name}:{r.detail}" for r in findings if "not a lattice" in r.detail
            )
            lines.append(f"{status}  {label:<32} {summary}")
        lines.append(
            f"{len(rows) - failed}/{len(rows)} pairs passed all verifications"
        )
        _emit("\n".join(lines) + "\n", None)
        return 1 if failed else 0
    p = _resolve_pair(args)
    h = _resolve_height(args, p)
    results = run_checks(p, h)
    print(_format_results(f"pair {p.label()} mode {p.mode}", results))
    return 1 if has_failure(results) else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="nutamari",
        description="nu-Tamari lattices, cyclic analogues, and exact tropical realizations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="list trees (and paths above nu)")
    _add_pair_args(sp)
    _add_out_args(sp, ("text", "json"))
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("poset", help="the flip poset / nu-Tamari lattice")
    _add_pair_args(sp)
    _add_out_args(sp, ("text", "dot", "json"))
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("hvector", help="f/h-vectors, shelling and Narayana refinements")
    _add_pair_args(sp)
    _add_out_args(sp, ("text", "json"))
    sp.set_defaults(func=cmd_hvector)

    sp = sub.add_parser("tropical", help="exact geometric realization")
    _add_pair_args(sp)
    _add_out_args(sp, ("text", "json", "svg"))
    sp.add_argument("--arrows", action="store_true", help="draw flip-order arrows")
    sp.add_argument("--no-apexes", action="store_true", help="hide apex markers")
    sp.set_defaults(func=cmd_tropical)

    sp = sub.add_parser("check", help="verification bundle for one pair or a sweep")
    _add_pair_args(sp)
    sp.add_argument("--all", action="store_true", help="sweep all pairs up to --max-size")
    sp.add_argument("--max-size", type=int, default=9, help="bound on |I|+|J|")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("render", help="pictures: complex (svg/json) or poset (dot)")
    _add_pair_args(sp)
    sp.add_argument("--what", choices=("complex", "poset"), default="complex")
    _add_out_args(sp, ("svg", "json", "dot"))
    sp.add_argument("--arrows", action="store_true")
    sp.set_defaults(func=cmd_render)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
