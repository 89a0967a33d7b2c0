"""growthlab command line.

Exit codes: 0 all assertions pass, 1 an assertion failed, 2 bad configuration,
3 a memory/size budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import asymptotics as asy
from . import groups as grp
from . import lenfun as lf
from . import seqgen as sg
from . import smallcanc as sc
from .asymptotics import FunctionTable
from .experiments import PRESETS, ExperimentReport, run_preset

EXIT_OK, EXIT_ASSERT, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the artifact here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=_positive, help="max ball size (default GROWTHLAB_BUDGET or 5e6)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="growthlab", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("ball", "growth"):
        p = sub.add_parser(name)
        p.add_argument("--group", required=True)
        p.add_argument("--radius", type=_positive, required=True)
        _common(p)
    for name in ("relgrowth", "distortion"):
        p = sub.add_parser(name)
        p.add_argument("--group", required=True)
        p.add_argument("--subgroup", required=True)
        p.add_argument("--radius", type=_positive, required=True)
        _common(p)

    p = sub.add_parser("closure", help="superadditive closure of an r,value table")
    p.add_argument("--input", required=True)
    _common(p)

    p = sub.add_parser("equiv", help="compare two r,value tables")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--relation", choices=("sim", "approx", "theta"), default="approx")
    p.add_argument("--cmax", type=_positive, default=64)
    _common(p)

    p = sub.add_parser("check-cd", help="(C) on an n,l table or (D) on word length of a ball")
    p.add_argument("--input")
    p.add_argument("--group")
    p.add_argument("--radius", type=_positive)
    _common(p)

    p = sub.add_parser("lenfun-build")
    p.add_argument("--kind", choices=("inverse", "ps", "locally-finite"), required=True)
    p.add_argument("--input", required=True, help="r,value table of f (or F)")
    p.add_argument("--imax", type=_positive, default=4)
    _common(p)

    p = sub.add_parser("signed-sum", help="l(n) for |n| <= horizon from a weighted system")
    p.add_argument("--system", required=True, help='JSON {"pairs": [[n_i, a_i], ...]}')
    p.add_argument("--horizon", type=_positive, required=True)
    _common(p)

    p = sub.add_parser("seq", help="build a sequence pair and run the counting checks")
    p.add_argument("--count", type=_positive, default=4)
    p.add_argument("--surrogate", choices=sorted(sg.SURROGATES), default="poly")
    p.add_argument("--r", type=_positive, action="append", dest="r_values",
                   help="radius for the count check (repeatable)")
    _common(p)

    p = sub.add_parser("smallcanc")
    p.add_argument("action", nargs="?", choices=("check",), default="check")
    p.add_argument("--k-max", type=_positive, default=64)
    _common(p)

    p = sub.add_parser("experiment", help=f"run a preset: {', '.join(PRESETS)}")
    p.add_argument("name", nargs="?")
    p.add_argument("--preset")
    _common(p)
    return ap


# ----------------------------------------------------------------------


def _read_table(path: str) -> FunctionTable:
    text = Path(path).read_text()
    return FunctionTable.from_json(text) if text.lstrip().startswith("{") else FunctionTable.from_csv(text)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_table(args, t: FunctionTable) -> None:
    _emit(args, t.to_csv() if args.format == "csv" else t.to_json() + "\n")


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2, default=str) + "\n")


def _group_sub(args):
    G = grp.parse_group(args.group)
    return G, grp.parse_subgroup(G, args.subgroup)


def _known_lower_bounds(G, sub, radius: int) -> dict[int, int]:
    """Exact lower bounds on distortion that hold by explicit witnesses."""
    out = {}
    if isinstance(G, grp.Heisenberg) and sub.generator in ((0, 0, 1), (0, 0, -1)):
        for k in range(1, radius // 4 + 1):
            out[4 * k] = k * k  # c^{k^2} = [a^k, b^k]
    if isinstance(G, grp.BS12) and sub.generator == G.generator("a"):
        for k in range(1, (radius - 1) // 2 + 1):
            out[2 * k + 1] = 2 ** k  # a^{2^k} = b^k a b^-k
    return out


def cmd_ball(args) -> int:
    idx = grp.ball(grp.parse_group(args.group), args.radius, args.budget)
    if args.format == "csv":
        _emit(args, idx.to_csv())
    else:
        fmt = idx.group.format_key
        _emit_json(args, {"group": idx.group.name, "radius": idx.radius,
                          "sphere_sizes": idx.sphere_sizes,
                          "lengths": {fmt(e): n for e, n in sorted(idx.lengths.items(),
                                                                   key=lambda kv: (kv[1], kv[0]))}})
    return EXIT_OK


def cmd_growth(args) -> int:
    _emit_table(args, grp.growth_function(grp.parse_group(args.group), args.radius, args.budget))
    return EXIT_OK


def cmd_relgrowth(args) -> int:
    G, sub = _group_sub(args)
    _emit_table(args, grp.relative_growth(G, sub, args.radius, args.budget))
    return EXIT_OK


def cmd_distortion(args) -> int:
    G, sub = _group_sub(args)
    d = grp.distortion(G, sub, args.radius, args.budget)
    bounds = _known_lower_bounds(G, sub, args.radius)
    rep = ExperimentReport("distortion", {"group": args.group, "subgroup": args.subgroup,
                                          "radius": args.radius})
    rep.tables["distortion"] = d
    for r, b in sorted(bounds.items()):
        rep.check(f"Delta({r}) >= {b}", d(r) >= b, {"r": r, "value": d(r)})
    if args.format == "csv":
        rows = "".join(f"{r},{v},{bounds.get(r, '')}\n" for r, v in d.items())
        _emit(args, "r,value,lower_bound\n" + rows)
    else:
        _emit_json(args, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_ASSERT


def cmd_closure(args) -> int:
    _emit_table(args, asy.superadditive_closure(_read_table(args.input)))
    return EXIT_OK


def cmd_equiv(args) -> int:
    f, g = _read_table(args.f), _read_table(args.g)
    if args.relation == "theta":
        w = asy.theta_equiv(f, g, args.cmax)
        out = {"relation": "THETA", "witness": w.to_dict() if w else None}
    else:
        fn = asy.sim_equiv if args.relation == "sim" else asy.approx_equiv
        pair = fn(f, g, args.cmax)
        out = {"relation": args.relation.upper(),
               "f_below_g": pair[0].to_dict() if pair else None,
               "g_below_f": pair[1].to_dict() if pair else None}
        w = pair
    _emit_json(args, out)
    return EXIT_OK if w else EXIT_ASSERT


def cmd_check_cd(args) -> int:
    if args.input:
        rep = lf.check_C(lf.LengthTable.from_csv(Path(args.input).read_text()))
    elif args.group and args.radius:
        idx = grp.ball(grp.parse_group(args.group), args.radius, args.budget)
        rep = lf.check_D(lf.GroupLengthTable.from_ball(idx))
    else:
        raise ConfigError("check-cd needs --input, or --group with --radius")
    _emit_json(args, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_ASSERT


def cmd_lenfun_build(args) -> int:
    f = _read_table(args.input)
    if args.kind == "inverse":
        l = lf.build_from_superadditive(f)
        if args.format == "csv":
            _emit(args, l.to_csv())
        else:
            _emit_json(args, {"levels": list(l.levels), "complete_up_to": l.complete_up_to})
    elif args.kind == "ps":
        _emit(args, lf.ps_system_from_target(f).to_json() + "\n")
    else:
        lfl = lf.locally_finite_length(f, args.imax)
        _emit_json(args, {"weights": list(lfl.weights), "sizes": list(lfl.sizes),
                          "next_weight": lfl.next_weight, "complete_up_to": lfl.complete_up_to})
    return EXIT_OK


def cmd_signed_sum(args) -> int:
    system = lf.WeightedSystem.from_json(Path(args.system).read_text())
    table = lf.signed_sum_length(system, args.horizon)
    if args.format == "csv":
        _emit(args, table.to_csv())
    else:
        _emit_json(args, {"values": list(table.values), "complete_up_to": table.complete_up_to})
    return EXIT_OK


def cmd_seq(args) -> int:
    seq = sg.build_seq(args.count, args.surrogate)
    r_values = args.r_values or [seq.a[1], 10 * seq.a[1]]
    fpt = sg.fpt_upper_bound_check(seq, r_values)
    wit = sg.distortion_witness(seq)
    out = {"a": list(seq.a), "n": list(seq.n),
           "surrogate": seq.surrogate, "invariant_failures": sg.verify_seq(seq),
           "fpt": fpt["rows"], "distortion_witness": wit}
    _emit_json(args, out)
    ok = fpt["ok"] and not out["invariant_failures"] and all(r["ok"] for r in wit)
    return EXIT_OK if ok else EXIT_ASSERT


def cmd_smallcanc(args) -> int:
    rows = sc.check(args.k_max)
    _emit_json(args, rows)
    return EXIT_OK if all(r["clause_a"] and r["clause_b"] for r in rows) else EXIT_ASSERT


def cmd_experiment(args) -> int:
    name = args.preset or args.name
    if not name:
        raise ConfigError(f"name a preset: {', '.join(PRESETS)}")
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
    rep = run_preset(name, args.seed)
    _emit_json(args, rep.to_dict())
    for a in rep.assertions:
        print(f"{'PASS' if a.ok else 'FAIL'}  {a.name}", file=sys.stderr)
    print(f"{name}: {rep.elapsed:.2f} s", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_ASSERT


COMMANDS = {
    "ball": cmd_ball, "growth": cmd_growth, "relgrowth": cmd_relgrowth,
    "distortion": cmd_distortion, "closure": cmd_closure, "equiv": cmd_equiv,
    "check-cd": cmd_check_cd, "lenfun-build": cmd_lenfun_build, "signed-sum": cmd_signed_sum,
    "seq": cmd_seq, "smallcanc": cmd_smallcanc, "experiment": cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (grp.BudgetExceeded, lf.WindowTooLarge, sg.BoxTooLarge, MemoryError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError, IndexError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
