"""Command-line front end.

JSON output (``--json``) is compact and deterministic: record fields keep
their declaration order, divisor classes are 10-element integer arrays,
exact rationals are strings "p/q", and certificates serialize as
{name, parameters, steps: [{desc, anchor, lhs, rel, rhs, holds[, phi]}],
verdict[, notes]}.

Exit codes: 0 success, 1 invalid input or failed precondition,
2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import certificates as cert
from .errors import InvariantViolation, PreconditionError
from .expr import format_divisor, parse_divisor
from .gonality import bounds, decompositions, gon_ceiling, gon_window, steiner_report
from .lattice import (
    DivisorClass, Polarization, ample_by_criterion, chi, classify_system, genus, is_nef, pairing,
)
from .selftest import run_all
from .slices import phi

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# -- JSON ----------------------------------------------------------------------------------


def to_jsonable(obj):
    if isinstance(obj, DivisorClass):
        return list(obj.coords)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, cert.Step):
        out = {k: to_jsonable(getattr(obj, k)) for k in ("desc", "anchor", "lhs", "rel", "rhs", "holds")}
        if obj.phi is not None:
            out["phi"] = obj.phi
        return out
    if isinstance(obj, cert.Certificate):
        out = {"name": obj.name, "parameters": to_jsonable(obj.parameters),
               "steps": to_jsonable(obj.steps), "verdict": obj.verdict}
        if obj.notes:
            out["notes"] = list(obj.notes)
        return out
    if hasattr(obj, "_fields"):
        return {k: to_jsonable(v) for k, v in zip(obj._fields, obj)}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        q = Fraction(int(obj.numerator), int(obj.denominator))
        return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def emit_json(result):
    return json.dumps(to_jsonable(result), separators=(",", ":"), ensure_ascii=False)


# -- human-readable tables -----------------------------------------------------------------


def _fmt(v):
    if isinstance(v, DivisorClass):
        return format_divisor(v)
    if isinstance(v, (list, tuple)) and v and all(isinstance(x, DivisorClass) for x in v):
        return ", ".join(format_divisor(x) for x in v)
    if isinstance(v, Fraction):
        return str(v)
    if v is None:
        return "-"
    return str(v)


def _table(rows):
    rows = [(str(k), _fmt(v)) for k, v in rows]
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _decomposition_table(decs):
    if not decs:
        return "(no decompositions)"
    head = ("d", "mode", "L", "M", "L^2", "M^2", "(M-L)^2", "L type", "minimal")
    body = [(str(x.d), x.mode, format_divisor(x.L), format_divisor(x.M), str(x.L_sq), str(x.M_sq),
             str(x.diff_sq), x.L_type, "yes" if x.minimal else "") for x in decs]
    widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [head] + body)


def _report_text(rep, with_window):
    rows = [("C", rep.C), ("g", rep.g), ("phi", rep.phi), ("phi minimizers", rep.phi_minimizers),
            ("BN cliff ceiling", rep.bn_cliff_ceiling), ("BN gon ceiling", rep.bn_gon_ceiling),
            ("[(g-2)/2] + 2", rep.half_genus_gon_ceiling), ("cliff <= 2 phi - 2", rep.lemma_cliff_upper),
            ("gon <= 2 phi", rep.gon_upper_from_pencil)]
    if with_window:
        lo, hi = rep.window
        rows += [("candidate gon(|C|)", rep.candidate_gon_linear_system), ("window", f"[{_fmt(lo)}, {hi}]")]
        if rep.decompositions:
            best = rep.decompositions[0]
            rows += [("minimal L", f"{format_divisor(best.L)} ({best.L_type})"), ("minimal M", best.M)]
    text = _table(rows)
    if with_window and rep.steiner is not None:
        s = rep.steiner
        text += "\n\nsteiner\n" + _steiner_text(s)
    for n in rep.notes:
        text += f"\nnote: {n}"
    return text


def _steiner_text(s):
    return _table([("C", s.C), ("base points L", s.base_points_L), ("base points M", s.base_points_M),
                   ("gon upper", s.gon_upper), ("cliff candidate", s.cliff_candidate),
                   ("dim |C|", s.dim_C), ("stratum codim", s.stratum_codim)])


def _cert_text(c):
    lines = [f"certificate {c.name}", _table(c.parameters.items()), ""]
    for i, s in enumerate(c.steps):
        mark = "ok  " if s.holds else "FAIL"
        lines.append(f"[{i:2d}] {mark} {_fmt(s.lhs)} {s.rel} {_fmt(s.rhs)}   {s.desc} ({s.anchor})")
    lines.append(f"verdict: {c.verdict}")
    lines += [f"note: {n}" for n in c.notes]
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------------------


def _class(text):
    return parse_divisor(text)


def _ceiling(args):
    return getattr(args, "phi_ceiling", None)


def cmd_pair(args, h):
    v = pairing(_class(args.A), _class(args.B))
    return {"value": v}, str(v)


def cmd_genus(args, h):
    v = genus(_class(args.C))
    return {"value": v}, str(v)


def cmd_chi(args, h):
    v = chi(_class(args.D))
    return {"value": v}, str(v)


def cmd_phi(args, h):
    res = phi(_class(args.C), h, _ceiling(args))
    return {"value": res.value, "minimizers": res.minimizers}, _table(
        [("phi", res.value), ("minimizers", res.minimizers)])


def cmd_bounds(args, h):
    rep = bounds(_class(args.C), h, _ceiling(args))
    data = to_jsonable(rep)
    for k in ("decompositions", "window", "steiner", "candidate_gon_linear_system"):
        data.pop(k)
    return data, _report_text(rep, False)


def cmd_decompose(args, h):
    c = _class(args.C)
    d_max = args.dmax
    if d_max is None:
        d_max = gon_ceiling(genus(c))
    if d_max < 1:
        raise PreconditionError(f"--dmax must be >= 1, got {d_max}")
    decs = decompositions(c, d_max, h)
    return {"decompositions": decs}, _decomposition_table(decs)


def cmd_window(args, h):
    rep = gon_window(_class(args.C), h, _ceiling(args))
    text = _report_text(rep, True)
    if rep.decompositions:
        text += "\n\ndecompositions\n" + _decomposition_table(rep.decompositions)
    return rep, text


def cmd_steiner(args, h):
    s = steiner_report(_class(args.L), _class(args.M), h)
    return s, _steiner_text(s)


def cmd_classify(args, h):
    d = _class(args.D)
    if not is_nef(d, h):
        raise PreconditionError(f"classify needs a nef class; D^2 = {pairing(d, d)}")
    st = classify_system(d, h)
    data = dict(to_jsonable(st))
    data["ample"] = ample_by_criterion(d, h)
    return data, _table(list(st._asdict().items()) + [("ample", data["ample"])])


def cmd_cert(args, h):
    if args.kind == "plane-curve":
        if args.degree is None:
            raise PreconditionError("cert plane-curve needs --degree")
        c = cert.plane_curve_certificate(args.degree)
    elif args.kind == "cliffdim":
        if args.r is None:
            raise PreconditionError("cert cliffdim needs --r")
        if args.case == 1:
            c = cert.cliffdim_case1_certificate(args.r)
        else:
            c = cert.cliffdim_case2_bounds(args.r, args.genus)
    else:
        if args.C is None:
            raise PreconditionError("cert lemma needs a class C")
        c = cert.lemma_bound_certificate(_class(args.C), h, _ceiling(args))
        if c.verdict == cert.INVARIANT_VIOLATION:
            raise InvariantViolation(f"phi exceeds its ceiling: {_cert_text(c)}")
    return c, _cert_text(c)


def cmd_selftest(args, h):
    results = run_all()
    data = {"suites": [r._asdict() for r in results], "ok": all(r.ok for r in results)}
    text = "\n".join(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<14} {r.detail}" for r in results)
    if not data["ok"]:
        raise _SelftestFailed(data, text)
    return data, text


class _SelftestFailed(InvariantViolation):
    def __init__(self, data, text):
        super().__init__("selftest failed")
        self.data, self.text = data, text


# -- argument parsing ----------------------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--polarization", metavar="EXPR", default=argparse.SUPPRESS,
                        help='reference class h for effectivity (default "E1+E2")')
    common.add_argument("--phi-ceiling", metavar="N", type=int, default=argparse.SUPPRESS,
                        help="raise the phi search bound above floor(sqrt(C^2))")

    p = _Parser(prog="enriques", parents=[common],
                description="Divisor classes, phi, and gonality bounds on an Enriques surface.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_, *positionals):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(fn=fn)
        return sp

    add("pair", cmd_pair, "intersection number A.B", "A", "B")
    add("genus", cmd_genus, "arithmetic genus of C", "C")
    add("chi", cmd_chi, "Euler characteristic of O(D)", "D")
    add("phi", cmd_phi, "phi(C) and its minimizing half-fibres", "C")
    add("bounds", cmd_bounds, "Clifford index and gonality bounds", "C")
    add("decompose", cmd_decompose, "splittings C = L + M", "C").add_argument(
        "--dmax", type=int, default=None, help="largest L.M to search")
    add("window", cmd_window, "candidate gon(|C|) and its window", "C")
    add("steiner", cmd_steiner, "Steiner construction from |L| and |M|", "L", "M")
    add("classify", cmd_classify, "type of the linear system |D|", "D")
    sc = add("cert", cmd_cert, "evaluated inequality-chain certificates")
    sc.add_argument("kind", choices=["plane-curve", "cliffdim", "lemma"])
    sc.add_argument("C", nargs="?", default=None)
    sc.add_argument("--degree", type=int)
    sc.add_argument("--r", type=int)
    sc.add_argument("--case", type=int, choices=[1, 2], default=1)
    sc.add_argument("--genus", type=int)
    add("selftest", cmd_selftest, "run the invariant suites")
    return p


def run(argv: Sequence[str] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    as_json = getattr(args, "json", False)
    try:
        pol = getattr(args, "polarization", None)
        h = Polarization(parse_divisor(pol)) if pol is not None else None
        data, text = args.fn(args, h)
    except _SelftestFailed as exc:
        print(emit_json(exc.data) if as_json else exc.text, file=out)
        return EXIT_INVARIANT
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=err)
        return EXIT_INVARIANT
    except (PreconditionError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    print(emit_json(data) if as_json else text, file=out)
    return EXIT_OK


def main():
    sys.exit(run())
