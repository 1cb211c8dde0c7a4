"""Command-line interface: ``qpcluster <command> ...``.

Reports go to stdout as JSON (sorted keys, so output is byte-deterministic);
errors go to stderr as ``{"error": code, "message": ...}``. Exit status is 0
when every requested check passes, 1 on a failed check or a library error,
and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog as cat
from .errors import QPClusterError
from .fano import ascii_plot, fano_polygon, seed_from_polygon
from .jsonio import (
    nullroot_to_json,
    polygon_from_json,
    seed_from_json,
    seed_to_json,
    toric_from_json,
    toric_to_json,
    word_from_json,
)
from .symbolic import DEFAULT_SIMPLIFY_THRESHOLD
from .toric import boundary_data, classify_type, k_form, null_root, smooth_complete_fan, star_subdivide


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _fan(data, extra):
    fan = smooth_complete_fan(data)
    if extra is not None:
        fan = star_subdivide(fan, extra)
    return fan


def _threshold(args):
    t = args.simplify_threshold
    return None if t is not None and t < 0 else t


# -- commands -----------------------------------------------------------------


def cmd_classify(args) -> int:
    data = toric_from_json(_load(args.file))
    fan = _fan(data, args.fan_extra_subdivision)
    cl = classify_type(data, fan)
    if not args.json:
        _emit(cl.label, args.out)
        return 0
    bd = boundary_data(data, fan)
    nr = null_root(data, fan, bd)
    kf = k_form(data, fan, bd)
    rep = nullroot_to_json(fan, bd, nr)
    rep.update({
        "label": cl.label,
        "k_circ_basis": [list(b) for b in kf.basis],
        "gram": [list(r) for r in kf.gram],
        "invariants": {"rank": cl.quotient_rank, "det": cl.quotient_det, "min_norm": cl.min_norm},
    })
    _emit(_dump(rep), args.out)
    return 0


def cmd_nullroot(args) -> int:
    data = toric_from_json(_load(args.file))
    fan = _fan(data, args.fan_extra_subdivision)
    bd = boundary_data(data, fan)
    _emit(_dump(nullroot_to_json(fan, bd, null_root(data, fan, bd))), args.out)
    return 0


def cmd_polygon(args) -> int:
    obj = _load(args.file)
    poly = polygon_from_json(obj) if ("vertices" in obj or "facets" in obj) else fano_polygon(toric_from_json(obj))
    text = ascii_plot(poly) if args.plot else _dump(poly.to_json())
    _emit(text, args.out)
    return 0


def cmd_seed_from_polygon(args) -> int:
    poly = polygon_from_json(_load(args.file))
    _emit(_dump(toric_to_json(seed_from_polygon(poly))), args.out)
    return 0


def cmd_mutate(args) -> int:
    seed = seed_from_json(_load(args.seed))
    word = word_from_json(seed, _load(args.word))
    _emit(_dump(seed_to_json(word.target)), args.out)
    return 0


def _checks_report(checks) -> tuple[str, int]:
    checks = sorted(checks, key=lambda c: c.name)
    ok = all(c.ok for c in checks)
    rep = {"status": "pass" if ok else "fail", "checks": [c.to_json() for c in checks]}
    return _dump(rep), 0 if ok else 1


def _run_task(task):
    label, suite, index, fast, threshold = task
    return cat.run_task(label, suite, index, fast, threshold)


def cmd_verify(args) -> int:
    entry = cat.catalog_entry(args.label)
    checks = cat.verify_entry(entry, args.fast_path == "on", _threshold(args))
    text, code = _checks_report(checks)
    _emit(text, args.out)
    return code


def cmd_verify_all(args) -> int:
    fast, thr = args.fast_path == "on", _threshold(args)
    tasks = [t + (fast, thr) for label in cat.LABELS for t in cat.suite_tasks(label)]
    tasks.append(("pentagon", "relations", None, fast, thr))
    checks = []
    if args.jobs == 1:
        for t in tasks:
            checks.extend(_run_task(t))
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for res in pool.map(_run_task, tasks):
                checks.extend(res)
    text, code = _checks_report(checks)
    _emit(text, args.out)
    return code


def cmd_qp6(args) -> int:
    from . import qp6

    ctx = qp6.build_qp6_context()
    if args.action == "identities":
        rep = qp6.verify_qp6_identities(ctx, fast_path=args.fast_path == "on", threshold=_threshold(args))
        ok = all(c.ok for c in rep)
        _emit(_dump({"status": "pass" if ok else "fail", "checks": [c.to_json() for c in rep]}), args.out)
        return 0 if ok else 1
    params = _load(args.params) if args.params else qp6.DEFAULT_PARAMS
    res = qp6.run_orbit(ctx, params, args.steps, args.order)
    text = qp6.orbit_to_json(res.rows) if args.format == "json" else qp6.orbit_to_csv(res.rows)
    _emit(text, args.out)
    err = res.max_error
    summary = {"steps": args.steps, "order": args.order, "max_relative_error": err}
    print(_dump(summary), file=sys.stderr)
    return 0 if err is None or err <= args.tolerance else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qpcluster", description="Cluster X-varieties of q-Painleve type.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fan=False, symbolic=False):
        sp.add_argument("--out", help="write the report to FILE")
        if fan:
            sp.add_argument("--fan-extra-subdivision", type=int, metavar="J",
                            help="star-subdivide the cone between rays J and J+1 first")
        if symbolic:
            sp.add_argument("--simplify-threshold", type=int, default=DEFAULT_SIMPLIFY_THRESHOLD,
                            help="reduce fractions above this size (negative: never)")
            sp.add_argument("--fast-path", choices=("on", "off"), default="on",
                            help="modular rejection before the symbolic check")

    sp = sub.add_parser("classify", help="type label of toric seed data")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true", help="full report instead of the label")
    common(sp, fan=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("nullroot", help="fan, H, c' and delta")
    sp.add_argument("file")
    common(sp, fan=True)
    sp.set_defaults(func=cmd_nullroot)

    sp = sub.add_parser("polygon", help="Fano polygon of toric data, or a polygon file")
    sp.add_argument("file")
    sp.add_argument("--plot", action="store_true", help="ASCII lattice plot")
    common(sp)
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("seed-from-polygon", help="toric data from a polygon without remainders")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_seed_from_polygon)

    sp = sub.add_parser("mutate", help="apply a word to a seed")
    sp.add_argument("seed")
    sp.add_argument("word")
    common(sp)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("verify", help="catalog suite for one type")
    sp.add_argument("label")
    common(sp, symbolic=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("verify-all", help="catalog suites for every type")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (1: serial)")
    common(sp, symbolic=True)
    sp.set_defaults(func=cmd_verify_all)

    sp = sub.add_parser("qp6", help="the sixth q-Painleve system")
    sp.add_argument("action", choices=("identities", "orbit"))
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--params", help="JSON with t or a (six values), f and g")
    sp.add_argument("--order", choices=("c2-first", "c1-first"), default="c2-first")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--tolerance", type=float, default=1e-9,
                    help="allowed relative error between the exact and float orbits")
    common(sp, symbolic=True)
    sp.set_defaults(func=cmd_qp6)
    return p


def _error(code: str, message: str) -> None:
    print(json.dumps({"error": code, "message": message}, sort_keys=True), file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "steps", 0) is not None and getattr(args, "steps", 0) < 0:
            raise UsageError("--steps must be nonnegative")
        return args.func(args)
    except UsageError as exc:
        _error("UsageError", str(exc))
        return 2
    except QPClusterError as exc:
        _error(exc.code, str(exc))
        return 1
    except (KeyError, TypeError, ValueError) as exc:
        _error("InvalidInput", f"{type(exc).__name__}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
