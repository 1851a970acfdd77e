"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 precision or
internal-consistency error.
"""

import argparse
import json
import sys

import mpmath

from . import __version__
from .errors import (
    ConsistencyError,
    DomainError,
    InvalidTypeError,
    ModulipicError,
    PrecisionError,
    ResourceError,
    ShapeError,
)
from .root_system import LieType, build
from .rep_theory import dynkin_index
from .verlinde import DEFAULT_PRECISION_BITS, VerlindeQuery, count_P_ell, verlinde_dim
from .wps import WpsWeights, generator_degree, hilbert_dim, wps_from_group
from .picard import report
from . import selftest, tables


def _envelope(command, inputs, result, precision_bits=None):
    env = {"command": command, "inputs": inputs, "result": result}
    if precision_bits is not None:
        env["precision_bits"] = precision_bits
    env["version"] = __version__
    return env


def _flatten(prefix, obj, lines):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}{k}." if prefix else f"{k}.", v, lines) \
                if isinstance(v, dict) else lines.append((f"{prefix}{k}", v))
    else:
        lines.append((prefix.rstrip("."), obj))


def _emit(env, fmt, out_path):
    if fmt == "json":
        text = json.dumps(env)
    else:
        lines = []
        _flatten("", env, lines)
        width = max(len(k) for k, _ in lines)
        text = "\n".join(f"{k.ljust(width)} = {v}" for k, v in lines)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_weight(token, rank):
    try:
        coords = tuple(int(x) for x in token.split(","))
    except ValueError:
        raise DomainError(f"cannot parse weight {token!r}; expected comma-separated integers")
    if len(coords) != rank:
        raise ShapeError(f"weight has {len(coords)} coordinates, rank is {rank}")
    return coords


def cmd_report(args):
    rep = report(LieType.parse(args.type), args.genus)
    env = _envelope("report", {"type": args.type, "genus": args.genus}, rep.to_dict())
    _emit(env, args.format, args.out)
    return 0


def cmd_verlinde(args):
    lie = LieType.parse(args.type)
    res = verlinde_dim(VerlindeQuery(lie, args.genus, args.level),
                       precision_bits=args.precision_bits)
    with mpmath.workprec(res.precision_bits):
        value_decimal = mpmath.nstr(res.value, 30)
    result = {
        "value_decimal": value_decimal,
        "rounded": res.rounded,
        "abs_gap": res.abs_gap,
        "count_P_ell": count_P_ell(build(lie), args.level),
    }
    env = _envelope("verlinde",
                    {"type": args.type, "genus": args.genus, "level": args.level,
                     "jobs": args.jobs},
                    result, precision_bits=res.precision_bits)
    _emit(env, args.format, args.out)
    return 0


def cmd_index(args):
    datum = build(LieType.parse(args.type))
    weight = _parse_weight(args.weight, datum.rank)
    m = dynkin_index(datum, weight)
    env = _envelope("index", {"type": args.type, "weight": list(weight)},
                    {"dynkin_index": m})
    _emit(env, args.format, args.out)
    return 0


def _wps_weights(args):
    if args.weights:
        try:
            return WpsWeights(tuple(int(x) for x in args.weights.split(",")))
        except ValueError:
            raise DomainError(f"cannot parse weights {args.weights!r}")
    if args.type:
        return wps_from_group(build(LieType.parse(args.type)))
    raise DomainError("one of --weights or --type is required")


def cmd_wps(args):
    n = _wps_weights(args)
    if args.wps_command == "generator":
        result = {"weights": list(n.weights), "generator_degree": generator_degree(n)}
    else:
        result = {"weights": list(n.weights), "degree": args.degree,
                  "dimension": hilbert_dim(n, args.degree)}
    env = _envelope(f"wps.{args.wps_command}",
                    {"weights": args.weights, "type": args.type}, result)
    _emit(env, args.format, args.out)
    return 0


def cmd_tables(args):
    rows = {"prop23": tables.prop23_rows, "wps": tables.wps_rows,
            "comarks": tables.comark_rows}[args.table]()
    if args.format == "json":
        env = _envelope(f"tables.{args.table}", {"table": args.table}, rows)
        _emit(env, "json", args.out)
        return 0
    cols = list(rows[0].keys())

    def cell(v):
        return ",".join(map(str, v)) if isinstance(v, list) else str(v)

    if args.format == "csv":
        lines = [";".join(cols)] + [";".join(cell(r[c]) for c in cols) for r in rows]
    else:  # markdown
        lines = ["| " + " | ".join(cols) + " |",
                 "|" + "|".join("---" for _ in cols) + "|"]
        lines += ["| " + " | ".join(cell(r[c]) for c in cols) + " |" for r in rows]
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_selftest(args):
    failures = selftest.run(args.level)
    return 1 if failures else 0


def build_parser():
    p = argparse.ArgumentParser(prog="modulipic",
                                description="Picard groups of moduli of semistable G-bundles: "
                                            "indices, theta bundles, Verlinde dimensions")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "text")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", default=None, help="write output to this path")

    sp = sub.add_parser("report", help="Picard report for (type, genus)")
    sp.add_argument("--type", required=True, help="type token, e.g. E8, A3, G2")
    sp.add_argument("--genus", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_report)

    sp = sub.add_parser("verlinde", help="Verlinde dimension F_g(level)")
    sp.add_argument("--type", required=True)
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
    sp.add_argument("--jobs", type=int, default=1,
                    help="worker cap for the level sum (output is deterministic regardless)")
    common(sp)
    sp.set_defaults(fn=cmd_verlinde)

    sp = sub.add_parser("index", help="Dynkin index of a dominant weight")
    sp.add_argument("--type", required=True)
    sp.add_argument("--weight", required=True, help="comma-separated coordinates, e.g. 1,0,2")
    common(sp)
    sp.set_defaults(fn=cmd_index)

    sp = sub.add_parser("wps", help="weighted projective space utilities")
    wsub = sp.add_subparsers(dest="wps_command", required=True)
    for name in ("generator", "hilbert"):
        wsp = wsub.add_parser(name)
        wsp.add_argument("--weights", default=None, help="comma-separated, e.g. 1,2,3,2,1")
        wsp.add_argument("--type", default=None, help="use (1, comarks) of this type")
        if name == "hilbert":
            wsp.add_argument("--degree", type=int, required=True)
        common(wsp)
        wsp.set_defaults(fn=cmd_wps)

    sp = sub.add_parser("tables", help="regenerate the summary tables")
    sp.add_argument("table", choices=("prop23", "wps", "comarks"))
    common(sp, formats=("json", "markdown", "csv"))
    sp.set_defaults(fn=cmd_tables)

    sp = sub.add_parser("selftest", help="run the acceptance battery")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    sp.set_defaults(fn=cmd_selftest)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidTypeError, DomainError, ShapeError, ResourceError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 3
    except (PrecisionError, ConsistencyError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 4
    except ModulipicError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
