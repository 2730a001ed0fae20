"""Command-line front end: ``a2fusion <command> ...``.

Exit status is 0 on success, 1 when ``verify`` or ``prove`` finds a
disagreement, and 2 for malformed arguments or invalid weights.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bmw import bmw_fusion, bmw_intermediates
from .fusion import MODES, fusion_coefficient, fusion_decomposition
from .multiplicity import diagram_to_json, mult, weight_diagram
from .tensor import table_to_json, tensor_coefficient, tensor_decomposition


class UsageError(Exception):
    pass


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _pair(values):
    return (values[0], values[1])


def _format_table(table, header=("e", "f", "N")):
    rows = [(str(k[0]), str(k[1]), str(v)) for k, v in sorted(table.items())]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


def cmd_mult(args, out):
    lam = (args.a, args.b)
    m = mult(lam, (args.x, args.y))
    if args.json:
        out.write(json.dumps({"lambda": list(lam), "weight": [args.x, args.y], "mult": m}) + "\n")
    else:
        out.write(f"{m}\n")
    return 0


def cmd_weights(args, out):
    lam = (args.a, args.b)
    diagram = weight_diagram(lam)
    if args.json:
        out.write(json.dumps({"lambda": list(lam), "diagram": diagram_to_json(diagram)}) + "\n")
    else:
        out.write(_format_table(diagram, ("x", "y", "mult")) + "\n")
    return 0


def cmd_tensor(args, out):
    lam, mu = (args.a, args.b), (args.c, args.d)
    if args.nu is not None:
        nu = _pair(args.nu)
        n = tensor_coefficient(lam, mu, nu)
        if args.json:
            out.write(json.dumps({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "N": n}) + "\n")
        else:
            out.write(f"{n}\n")
        return 0
    table = tensor_decomposition(lam, mu)
    if args.json:
        out.write(json.dumps({"lambda": list(lam), "mu": list(mu), "table": table_to_json(table)}) + "\n")
    else:
        out.write(_format_table(table) + "\n")
    return 0


def cmd_fuse(args, out):
    lam, mu = (args.a, args.b), (args.c, args.d)
    head = {"lambda": list(lam), "mu": list(mu), "level": args.level, "mode": args.mode}
    if args.nu is not None:
        nu = _pair(args.nu)
        n = fusion_coefficient(lam, mu, nu, args.level, mode=args.mode)
        if args.json:
            out.write(json.dumps({**head, "nu": list(nu), "N": n}) + "\n")
        else:
            out.write(f"{n}\n")
        return 0
    table = fusion_decomposition(lam, mu, args.level, mode=args.mode)
    if args.json:
        out.write(json.dumps({**head, "table": table_to_json(table)}) + "\n")
    else:
        out.write(_format_table(table) + "\n")
    return 0


def cmd_bmw(args, out):
    lam, mu, nu = (args.a, args.b), (args.c, args.d), (args.e, args.f)
    n = bmw_fusion(lam, mu, nu, args.level)
    if args.explain:
        im = bmw_intermediates(lam, mu, nu, args.level)
        out.write(json.dumps(im.to_json(n)) + "\n")
    else:
        out.write(f"{n}\n")
    return 0


def cmd_verify(args, out):
    from .verify import sweep

    result = sweep(args.max_level, jobs=args.jobs)
    out.write(f"checked {result.triples} triples for levels 0..{args.max_level}\n")
    status = 0
    for label, cases in (("fold vs alcoves", result.fold_vs_alcoves), ("Kac-Walton vs closed formula", result.fold_vs_bmw)):
        if cases:
            level, lam, mu, nu, x, y = cases[0]
            out.write(
                f"{label}: {len(cases)} mismatches; first at level {level}, "
                f"lambda={lam}, mu={mu}, nu={nu}: {x} != {y}\n"
            )
            status = 1
        else:
            out.write(f"{label}: all agree\n")
    return status


def cmd_prove(args, out):
    from .symbolic import bmw_symbolic, certificate, compare_piecewise, symbolic_kac_walton

    def progress(entry):
        out.write(f"  {entry['word']:>8}: {entry['pieces']:3d} pieces ({entry['nonzero']} nonzero)\n")
        out.flush()

    out.write("symbolic Kac-Walton over the 13 contributing alcoves\n")
    kw = symbolic_kac_walton(progress=progress)
    out.write(f"Kac-Walton: {kw.nonzero_count} nonzero, {kw.zero_count} zero pieces in {kw.elapsed:.1f}s\n")
    bmw = bmw_symbolic()
    out.write(f"closed formula: {len(bmw.nonzero_pieces())} nonzero, {len(bmw.zero_pieces())} zero pieces\n")
    report = compare_piecewise(kw.pieces, bmw)
    out.write(report.summary() + "\n")
    if args.emit_cones:
        data = {"kac_walton": kw.pieces.to_json(), "closed_formula": bmw.to_json()}
        Path(args.emit_cones).write_text(json.dumps(data, indent=1) + "\n")
    if args.emit_certificate:
        Path(args.emit_certificate).write_text(certificate(kw.pieces, bmw, report) + "\n")
    return 0 if report.equivalent else 1


def build_parser():
    p = argparse.ArgumentParser(prog="a2fusion", description="Exact A2 tensor and fusion coefficients.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mult", help="multiplicity of (X, Y) in V((A, B))")
    for name in ("a", "b"):
        s.add_argument(name, type=_nonneg)
    s.add_argument("x", type=int)
    s.add_argument("y", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(run=cmd_mult)

    s = sub.add_parser("weights", help="weight diagram of V((A, B))")
    for name in ("a", "b"):
        s.add_argument(name, type=_nonneg)
    s.add_argument("--json", action="store_true")
    s.set_defaults(run=cmd_weights)

    s = sub.add_parser("tensor", help="tensor product decomposition")
    for name in "abcd":
        s.add_argument(name, type=_nonneg)
    s.add_argument("--nu", nargs=2, type=_nonneg, metavar=("E", "F"))
    s.add_argument("--json", action="store_true")
    s.set_defaults(run=cmd_tensor)

    s = sub.add_parser("fuse", help="level-L fusion product")
    for name in "abcd":
        s.add_argument(name, type=_nonneg)
    s.add_argument("--level", type=_nonneg, required=True)
    s.add_argument("--nu", nargs=2, type=_nonneg, metavar=("E", "F"))
    s.add_argument("--json", action="store_true")
    s.add_argument("--mode", choices=MODES, default="fold")
    s.set_defaults(run=cmd_fuse)

    s = sub.add_parser("bmw", help="closed-formula fusion coefficient")
    for name in "abcdef":
        s.add_argument(name, type=_nonneg)
    s.add_argument("--level", type=_nonneg, required=True)
    s.add_argument("--explain", action="store_true", help="print the intermediates as JSON")
    s.set_defaults(run=cmd_bmw)

    s = sub.add_parser("verify", help="exhaustive sweep of Kac-Walton against the closed formula")
    s.add_argument("--max-level", type=_nonneg, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("prove", help="symbolic Kac-Walton compared with the closed formula")
    s.add_argument("--emit-cones", metavar="PATH")
    s.add_argument("--emit-certificate", metavar="PATH")
    s.set_defaults(run=cmd_prove)
    return p


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.run(args, out)
    except ValueError as exc:
        err.write(f"a2fusion {args.command}: {exc}\n")
        return 2


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
