"""Command-line surface: dimensions, characters, branching, verification.

Commands print human-readable output by default; --format json gives the
canonical machine form (byte-identical across runs), --format tsv flat
grids, and --format ascii draws multiplicity diagrams with the second
label increasing upward.  Exit codes: 0 success or verified, 1 a
verification sweep found a mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import schur as sc
from .branching import branch_oracle, coefficient_sum_report, splint_case
from .characters import (
    configure_disk_cache,
    dim_weyl,
    freudenthal_character,
    wcf_consistency,
)
from .errors import SplintError
from .lattice import char_to_obj
from .rootsystems import CATALOG_LABELS, build, rs_to_obj
from .rules import hexagon_multiplicity, rule_for, verify_rule

_VERIFY_CASES = (
    "I2", "I3", "II2", "II3", "III", "IV",
    "V_F4_B4", "V_B4_D4", "V_F4_D4", "schur", "wcf",
)

_DEFAULT_MAX = {
    "I2": 3, "I3": 3, "II2": 6, "II3": 3, "III": 3, "IV": 4,
    "V_F4_B4": 2, "V_B4_D4": 2, "V_F4_D4": 2, "schur": 6, "wcf": 1,
}


def _emit(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ----------------------------------------------------------------------
# Tables
# ----------------------------------------------------------------------


def table_grid(which: str) -> list[list[int]]:
    """Reference grid, indexed grid[beta][alpha] (or grid[l][k])."""
    if which == "fig1a":
        a2 = build("A2")
        return [[dim_weyl(a2, (a, b)) for a in range(7)] for b in range(7)]
    if which == "fig1b":
        g2 = build("G2")
        return [[dim_weyl(g2, (k, l)) for k in range(4)] for l in range(4)]
    if which == "fig2a":
        return [[hexagon_multiplicity(3, 2, a, b) for a in range(7)] for b in range(7)]
    raise SplintError(f"unknown table {which!r}")


def _print_grid(grid: list[list[int]], fmt: str, meta: dict) -> None:
    if fmt == "json":
        _emit(_jdump({**meta, "grid": grid}))
        return
    if fmt == "tsv":
        for row in grid:
            _emit("\t".join(str(x) for x in row))
        return
    width = max(len(str(x)) for row in grid for x in row)
    for row in reversed(grid):  # second index increases upward
        _emit(" ".join(str(x).rjust(width) for x in row))


def cmd_table(args) -> int:
    grid = table_grid(args.which)
    _print_grid(grid, args.format, {"table": args.which})
    return 0


# ----------------------------------------------------------------------
# dim / char
# ----------------------------------------------------------------------


def cmd_dim(args) -> int:
    rs = build(args.system)
    d = dim_weyl(rs, args.weight)
    if args.format == "json":
        _emit(_jdump({"system": args.system, "weight": args.weight, "dim": d}))
    else:
        _emit(str(d))
    return 0


def cmd_char(args) -> int:
    rs = build(args.system)
    irr = freudenthal_character(rs, args.weight)
    obj = char_to_obj(irr.character)
    if args.format == "json":
        _emit(_jdump({"system": args.system, "weight": args.weight,
                      "dim": irr.dimension, "char": obj}))
    else:
        _emit(f"dim {irr.dimension}, {len(irr.character)} distinct weights")
        for term in obj["terms"]:
            _emit(f"  {term['w2']}  {term['c']}")
    return 0


def cmd_system(args) -> int:
    _emit(_jdump(rs_to_obj(build(args.system))))
    return 0


# ----------------------------------------------------------------------
# branch
# ----------------------------------------------------------------------


def _hexagon_ascii(k: int, l: int) -> list[str]:
    size = k + l + 1
    width = len(str(min(k, l) + 1))
    lines = []
    for beta in reversed(range(size)):
        cells = []
        for alpha in range(size):
            n = hexagon_multiplicity(k, l, alpha, beta)
            cells.append((str(n) if n else ".").rjust(width))
        lines.append(" ".join(cells))
    return lines


def cmd_branch(args) -> int:
    case = splint_case(args.case)
    rank = build(case.ambient).rank
    if args.series is not None:
        if len(args.weight) != 1:
            raise SplintError("--series takes a single series index")
        k = args.weight[0]
        weight = (k, 0, 0, 0) if args.series == "first" else (0, 0, 0, k)
    else:
        weight = tuple(args.weight)
    if len(weight) != rank:
        raise SplintError(
            f"case {args.case} expects {rank} weight coordinates, got {len(weight)}"
        )
    res = rule_for(args.case, weight) if args.mode == "rule" else branch_oracle(case, weight)
    if args.format == "json":
        _emit(_jdump(res.to_obj()))
        return 0
    if args.format == "ascii" and args.case == "IV":
        for line in _hexagon_ascii(*weight):
            _emit(line)
        return 0
    _emit(f"{args.case}: {case.ambient} {list(weight)} -> {case.sub}")
    for nu in sorted(res.summands):
        _emit(f"  {list(nu)}  x{res.summands[nu]}")
    _emit(f"coefficient sum {res.coefficient_sum}, dimensions check: {res.dim_check}")
    return 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def _sweep_weights(rank: int, bound: int):
    import itertools
    return itertools.product(range(bound + 1), repeat=rank)


def _verify_case(tag: str, bound: int, fmt: str) -> tuple[int, list[dict]]:
    failures = 0
    records = []
    case = splint_case(tag)
    rank = build(case.ambient).rank
    if tag in ("V_F4_B4", "V_F4_D4"):
        sweep = [(k, 0, 0, 0) for k in range(bound + 1)]
        sweep += [(0, 0, 0, k) for k in range(bound + 1)]
    elif tag == "III":
        sweep = [w for w in _sweep_weights(3, bound)
                 if w[2] == 0 or (w[0] == 0 and w[1] == 0)]
    else:
        sweep = list(_sweep_weights(rank, bound))
    for w in sweep:
        rep = verify_rule(tag, w)
        records.append(rep.to_obj())
        status = "ok" if rep.equal else "MISMATCH"
        if fmt != "json":
            _emit(f"{tag} {list(w)}: {status} ({rep.expected})")
        if not rep.equal and rep.expected == "theorem":
            failures += 1
    return failures, records


def _verify_schur(bound: int, fmt: str) -> int:
    failures = 0
    for k in range(bound + 1):
        for l in range(bound + 1):
            ok = sc.verify_theorem(k, l) and sc.verify_lemma_triangle(k, l)
            ok = ok and all(sc.verify_lemma_hex(i, k, l) for i in range(min(k, l)))
            if fmt != "json":
                _emit(f"schur ({k},{l}): {'ok' if ok else 'MISMATCH'}")
            failures += 0 if ok else 1
    return failures


def _verify_wcf(bound: int, fmt: str) -> int:
    import itertools
    failures = 0
    for label in CATALOG_LABELS:
        rs = build(label)
        for w in itertools.product(range(bound + 1), repeat=rs.rank):
            ok = wcf_consistency(rs, w)
            if not ok and fmt != "json":
                _emit(f"wcf {label} {list(w)}: MISMATCH")
            failures += 0 if ok else 1
        if fmt != "json":
            _emit(f"wcf {label}: swept coordinates <= {bound}")
    return failures


def cmd_verify(args) -> int:
    bound = args.max if args.max is not None else _DEFAULT_MAX.get(args.case, 3)
    if args.case == "schur":
        failures = _verify_schur(bound, args.format)
    elif args.case == "wcf":
        failures = _verify_wcf(bound, args.format)
    else:
        failures, records = _verify_case(args.case, bound, args.format)
        if args.format == "json":
            _emit(_jdump({"case": args.case, "max": bound, "reports": records}))
    if args.case not in ("schur", "wcf") and args.format != "json":
        _emit(f"{args.case}: {'all agree' if failures == 0 else f'{failures} hard mismatches'}")
    return 1 if failures else 0


# ----------------------------------------------------------------------
# schur subcommand
# ----------------------------------------------------------------------


def _schur_obj(s: sc.SchurSum) -> list[dict]:
    return [{"a": a, "b": b, "c": s[(a, b)]} for a, b in sorted(s)]


def cmd_schur(args) -> int:
    if args.op == "h":
        out = sc.h_point(args.params[0], args.params[1])
    elif args.op == "layer":
        out = sc.h_layer(args.params[0], args.params[1], args.params[2])
    elif args.op == "normalize":
        idx = sc.schur_normalize(*args.params)
        out = {} if idx is None else {idx: 1}
    elif args.op == "theorem":
        k, l = args.params
        ok = sc.verify_theorem(k, l)
        if args.format == "json":
            _emit(_jdump({"k": k, "l": l, "equal": ok}))
        else:
            _emit(f"theorem ({k},{l}): {'ok' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    else:
        raise SplintError(f"unknown schur op {args.op!r}")
    if args.format == "json":
        _emit(_jdump(_schur_obj(out)))
    else:
        for a, b in sorted(out):
            _emit(f"  s[{a},{b}]  {out[(a, b)]:+d}")
    return 0


# ----------------------------------------------------------------------
# coefficient sums
# ----------------------------------------------------------------------


def cmd_sums(args) -> int:
    case = splint_case(args.case)
    if case.aux is None:
        raise SplintError(f"case {args.case} carries no auxiliary dimension claim")
    res = branch_oracle(case, args.weight)
    rep = coefficient_sum_report(res, build(case.aux), args.weight)
    if args.format == "json":
        _emit(_jdump({"case": args.case, "weight": args.weight, **rep.to_obj()}))
    else:
        _emit(f"sum {rep.coefficient_sum} vs dim {rep.aux_dim} "
              f"({case.aux}): {'equal' if rep.equal else 'DIFFERENT'}")
    return 0 if rep.equal else 1


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------


def _add_format(p, default="human"):
    p.add_argument("--format", choices=("human", "json", "tsv", "ascii"),
                   default=default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="splintbr",
        description="Exact branching rules for splint root-system pairs.",
    )
    ap.add_argument("--cache-dir", default=None,
                    help="on-disk character cache (default: SPLINT_CACHE_DIR)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="irreducible dimension")
    p.add_argument("system", choices=CATALOG_LABELS)
    p.add_argument("weight", type=int, nargs="+")
    _add_format(p)
    p.set_defaults(fn=cmd_dim)

    p = sub.add_parser("char", help="irreducible character (weight multiplicities)")
    p.add_argument("system", choices=CATALOG_LABELS)
    p.add_argument("weight", type=int, nargs="+")
    _add_format(p)
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("system", help="dump a catalog root system as JSON")
    p.add_argument("system", choices=CATALOG_LABELS)
    p.set_defaults(fn=cmd_system)

    p = sub.add_parser("table", help="reference grids")
    p.add_argument("which", choices=("fig1a", "fig1b", "fig2a"))
    _add_format(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("branch", help="branch one irreducible")
    p.add_argument("case")
    p.add_argument("weight", type=int, nargs="*")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle", dest="mode", action="store_const",
                   const="oracle", default="oracle")
    g.add_argument("--rule", dest="mode", action="store_const", const="rule")
    p.add_argument("--series", choices=("first", "last"), default=None)
    _add_format(p)
    p.set_defaults(fn=cmd_branch)

    p = sub.add_parser("verify", help="sweep a rule against the oracle")
    p.add_argument("case", choices=_VERIFY_CASES)
    p.add_argument("--max", type=int, default=None)
    _add_format(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("schur", help="Schur-basis operators and identities")
    p.add_argument("op", choices=("h", "layer", "normalize", "theorem"))
    p.add_argument("params", type=int, nargs="+")
    _add_format(p)
    p.set_defaults(fn=cmd_schur)

    p = sub.add_parser("sums", help="coefficient sums vs auxiliary dimension")
    p.add_argument("case")
    p.add_argument("weight", type=int, nargs="+")
    _add_format(p)
    p.set_defaults(fn=cmd_sums)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        # parse_known_args so weight entries may follow optional flags
        # (e.g. "branch V_F4_D4 --series last 1 --rule").
        args, extra = ap.parse_known_args(argv)
        if extra:
            if hasattr(args, "weight") and all(t.isdigit() for t in extra):
                args.weight = list(args.weight) + [int(t) for t in extra]
            else:
                ap.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    cache_dir = args.cache_dir or os.environ.get("SPLINT_CACHE_DIR")
    if cache_dir:
        configure_disk_cache(cache_dir)
    try:
        return args.fn(args)
    except SplintError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
