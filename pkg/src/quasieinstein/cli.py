"""Command-line interface: catalog, solve, interval, certify, checks, report.

Exit codes: 0 success, 1 certification or check failure, 2 input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from . import qem_solver as qs
from . import verifier as vf
from .catalog import FIXED, EmbeddingCase, UnknownCase, list_cases, make_case, parse_case_id
from .lie_core import LieAlgebraError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den``, an integer or a decimal string exactly."""
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed rational {text!r}") from None
    return q


def _positive(text: str) -> Fraction:
    q = parse_rational(text)
    if q <= 0:
        raise InputError(f"expected a positive value, got {text!r}")
    return q


def resolve_case(args) -> EmbeddingCase:
    text = args.case
    extra = {k: getattr(args, k) for k in ("k", "l1", "l2") if getattr(args, k, None) is not None}
    try:
        if "(" in text:
            if extra:
                raise InputError("give case parameters either in the id or as flags, not both")
            return parse_case_id(text)
        if text in FIXED:
            if extra:
                raise InputError(f"{text} takes no parameters")
            return make_case(text)
        return make_case(text, **extra)
    except UnknownCase as exc:
        raise InputError(str(exc.args[0] if exc.args else exc)) from None


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False, default=_json_default)


def _json_default(obj):
    if isinstance(obj, (Fraction, qs.Surd)):
        return qs.exact_json(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _clean(doc):
    """Replace non-finite floats by strings so the document stays valid JSON."""
    if isinstance(doc, dict):
        return {k: _clean(v) for k, v in doc.items()}
    if isinstance(doc, (list, tuple)):
        return [_clean(v) for v in doc]
    if isinstance(doc, float) and not math.isfinite(doc):
        return repr(doc)
    return doc


def _q(x) -> str:
    return str(x) if isinstance(x, qs.Surd) else str(Fraction(x))


# -- subcommands --------------------------------------------------------------


def cmd_catalog(args, out) -> int:
    cases = list_cases(args.max_rank)
    if args.json:
        keys = ("id", "params", "n", "s", "c", "d", "realizable")
        doc = {"cases": [{k: c.to_dict()[k] for k in keys} for c in cases]}
        out.write(dumps(doc) + "\n")
        return EXIT_OK
    out.write(f"{'id':<24} {'r':>2} {'n':>4} {'s':<10} {'c':<12} {'realizable':<10} description\n")
    for c in cases:
        s = ",".join(map(str, c.s))
        cs = ",".join(_q(x) for x in c.c) or "-"
        out.write(f"{c.id:<24} {c.r:>2} {c.n:>4} {s:<10} {cs:<12} {str(c.realizable):<10} {c.description}\n")
    return EXIT_OK


def _solve(case: EmbeddingCase, args):
    given = {k: getattr(args, k) for k in ("a1", "a2", "p") if getattr(args, k, None) is not None}
    if case.family == "F4_TABLE1":
        return qs.solve_f4_table1()
    if case.family in ("E8_TABLE2", "F4_TABLE2", "G2_TABLE2"):
        return qs.solve_tableII(case)
    need = {0: "p", 1: "a1", 2: "a2"}[case.r]
    if set(given) != {need}:
        raise InputError(f"{case.id} needs exactly --{need}")
    val = parse_rational(given[need])
    if case.r == 0:
        return qs.solve_r0(val)
    if case.r == 1:
        return qs.solve_r1(case, val)
    pd = case.param_dict
    return qs.solve_r2_su(pd["l1"], pd["l2"], val)


def _print_params(sol: qs.QEMParams, out) -> None:
    for i, v in enumerate(sol.a_k):
        out.write(f"a{i} = {_q(v)}\n")
    out.write(f"p = {_q(sol.p)}\n")
    out.write(f"lambda = {_q(sol.lam)}\n")
    out.write(f"{sol.n0_formula}\n")
    out.write("trivial\n" if sol.trivial else "nontrivial\n")


def cmd_solve(args, out) -> int:
    case = resolve_case(args)
    res = _solve(case, args)
    if args.json:
        out.write(dumps(res.to_dict()) + "\n")
        return EXIT_OK
    out.write(f"case {case.id}\n")
    if isinstance(res, qs.QEMParams):
        _print_params(res, out)
        return EXIT_OK
    for sol in res.solutions:
        out.write("--\n")
        _print_params(sol, out)
    for d in res.discrepancies:
        out.write(f"discrepancy {d.kind}: {d.note}\n")
    for note in res.notes:
        out.write(f"note: {note}\n")
    return EXIT_OK


def cmd_interval(args, out) -> int:
    case = resolve_case(args)
    if case.r != 1 or not case.isotropy_irreducible:
        raise InputError(f"{case.id} is not an r = 1 isotropy-irreducible case")
    iv = qs.interval_r1(case)
    if args.json:
        doc = {"case": case.id, "interval": iv.to_dict(), "lorentz": qs.lorentz_branches_r1(case).to_dict()}
        out.write(dumps(doc) + "\n")
    else:
        out.write(f"{iv}\n")
    return EXIT_OK


def _certify_scalars(case: EmbeddingCase, args) -> list:
    if args.params:
        return [parse_rational(t) for t in args.params.split(",")]
    if case.r == 0 and args.p is not None:
        p = parse_rational(args.p)
        if p == -1:
            raise InputError("p = -1 has no solution")
        return [2 / (p + 1)]
    flag = {1: "a1", 2: "a2"}.get(case.r)
    val = getattr(args, flag, None) if flag else None
    if val is None:
        raise InputError(f"{case.id} needs --params" + (f" or --{flag}" if flag else " or --p"))
    return [parse_rational(val)]


def cmd_certify(args, out) -> int:
    case = resolve_case(args)
    scalars = _certify_scalars(case, args)
    m = _positive(args.m)
    if args.dual:
        cert = vf.certify_dual(case, scalars, m, tol=args.tol if args.tol is not None else vf.DUAL_TOL)
    else:
        cert = vf.certify_case(case, scalars, m, tol=args.tol if args.tol is not None else vf.DEFAULT_TOL)
    if args.json:
        out.write(dumps(_clean(cert.to_dict())) + "\n")
    else:
        out.write(f"case {cert.case_id}\n")
        for k, v in cert.params.items():
            out.write(f"{k} = {_q(v) if not isinstance(v, float) else repr(v)}\n")
        out.write(f"lambda_fit = {cert.lambda_fit!r}\n")
        out.write(f"residual = {cert.residual!r}\n")
        out.write(f"killing_defect = {cert.killing_defect!r}\n")
        out.write(f"signature = {cert.signature}\n")
        out.write(("pass" if cert.passed else "FAIL") + "\n")
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_checks(args, out) -> int:
    case = resolve_case(args)
    tol = args.tol if args.tol is not None else vf.DEFAULT_TOL
    res = vf.structural_checks(case)
    ok = vf.checks_pass(res, tol)
    if args.json:
        out.write(dumps(_clean({"case": case.id, "residuals": res, "tol": tol, "pass": ok})) + "\n")
    else:
        for k in sorted(res):
            out.write(f"{k:<40} {res[k]:.3e}\n")
        out.write(("pass" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- report -------------------------------------------------------------------


def _r1_samples(case: EmbeddingCase) -> list[Fraction]:
    iv = qs.interval_r1(case)
    pts = []
    if not iv.empty:
        pts.append((iv.lo + iv.hi) / 2)
    pts.append(Fraction(-1))
    x2 = qs.lorentz_branches_r1(case).x2
    pts.append(Fraction(math.floor(float(x2)) + 1))
    return pts


def case_entry(case: EmbeddingCase) -> dict:
    """Solutions, certificates, discrepancies and structural checks for one case."""
    entry = {"case": case.id, "params": case.to_dict(), "solutions": [], "certificates": [],
             "discrepancies": [], "structural_checks": {}, "notes": []}
    certs = []
    if case.realizable:
        res = vf.structural_checks(case)
        entry["structural_checks"] = {"residuals": res, "pass": vf.checks_pass(res)}
        certs.append(vf.bi_invariant_certificate(case))
    if case.r == 0:
        for p in (Fraction(0), Fraction(-2, 3)):
            sol = qs.solve_r0(p)
            entry["solutions"].append(sol.to_dict())
            certs.append(vf.certify_case(case, [sol.a_k[0]], 1))
    elif case.r == 1 and case.isotropy_irreducible:
        entry["interval"] = qs.interval_r1(case).to_dict()
        entry["lorentz"] = qs.lorentz_branches_r1(case).to_dict()
        for a1 in _r1_samples(case):
            sol = qs.solve_r1(case, a1)
            entry["solutions"].append(sol.to_dict())
            if case.realizable:
                certs.append(vf.certify_case(case, [a1], 1))
                if a1 < 0:
                    certs.append(vf.certify_dual(case, [a1], 1))
        if not case.realizable:
            entry["notes"].append("no matrix realization: solutions are exact but not tensor-certified")
    elif case.family == "SU_L1L2":
        pd = case.param_dict
        l1, l2 = pd["l1"], pd["l2"]
        x1, x2 = qs.roots_r2(l1, l2)
        disc, formula = qs.discriminant_r2(l1, l2)
        entry["roots"] = {"x1": qs.exact_json(x1), "x2": qs.exact_json(x2),
                          "discriminant": disc, "discriminant_formula": formula}
        entry["notes"].append(qs.r2_other_branch(l1, l2))
        samples = [Fraction(-1)]
        if x1.is_rational and x2.is_rational:
            samples.insert(0, (x1.u + x2.u) / 2)
        for a2 in samples:
            sol = qs.solve_r2_su(l1, l2, a2)
            entry["solutions"].append(sol.to_dict())
            certs.append(vf.certify_case(case, [a2], 1))
        certs.append(vf.certify_dual(case, [Fraction(-1)], 1))
    else:
        rep = qs.solve_f4_table1() if case.family == "F4_TABLE1" else qs.solve_tableII(case)
        doc = rep.to_dict()
        entry["solutions"] = doc["solutions"]
        entry["alternatives"] = doc["alternatives"]
        entry["discrepancies"] = doc["discrepancies"]
        entry["notes"] = doc["notes"]
    entry["certificates"] = [_clean(c.to_dict()) for c in certs]
    return entry


def product_entry() -> dict:
    certs = [vf.expanding_product_example(m) for m in (1, 3)]
    return {"case": "SU2_R0+H2", "params": {"a0": "6/1", "p": "-2/3"}, "solutions": [],
            "certificates": [_clean(c.to_dict()) for c in certs], "discrepancies": [],
            "structural_checks": {}, "notes": ["product with the hyperbolic plane; X in the su(2) center"]}


def emit_report(entries: list[dict], command: str = "") -> dict:
    passed = failed = disc = 0
    for e in entries:
        for c in e.get("certificates", []):
            if c["pass"]:
                passed += 1
            else:
                failed += 1
        checks = e.get("structural_checks") or {}
        if checks:
            passed, failed = (passed + 1, failed) if checks["pass"] else (passed, failed + 1)
        disc += len(e.get("discrepancies", []))
    return {
        "tool": "quasieinstein",
        "version": __version__,
        "command": command,
        "entries": list(entries),
        "summary": {"pass_count": passed, "fail_count": failed, "discrepancy_count": disc},
    }


def interval_csv(cases: list[EmbeddingCase]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["case", "n", "s1", "c1", "lo", "hi", "empty", "x1", "x2"])
    for c in cases:
        if c.r != 1 or not c.isotropy_irreducible:
            continue
        iv = qs.interval_r1(c)
        lb = qs.lorentz_branches_r1(c)
        w.writerow([c.id, c.n, c.s[0], qs.fraction_str(c.c[0]), qs.fraction_str(iv.lo),
                    qs.fraction_str(iv.hi), iv.empty, str(lb.x1), str(lb.x2)])
    return buf.getvalue()


def cmd_report(args, out) -> int:
    if not args.all:
        raise InputError("report requires --all")
    cases = list_cases(args.max_rank)
    if args.format == "csv":
        text = interval_csv(cases)
        code = EXIT_OK
    else:
        entries = [case_entry(c) for c in cases] + [product_entry()]
        command = f"report --all --format json --max-rank {args.max_rank}"
        doc = emit_report(entries, command)
        text = dumps(doc) + "\n"
        code = EXIT_OK if doc["summary"]["fail_count"] == 0 else EXIT_FAIL
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        out.write(text)
    return code


# -- parser -------------------------------------------------------------------


def _case_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--case", required=True, help="case id, e.g. SPK_UK or SPK_UK(k=2)")
    p.add_argument("--k", type=int)
    p.add_argument("--l1", type=int)
    p.add_argument("--l2", type=int)
    p.add_argument("--json", action="store_true", help="machine-readable output")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasieinstein", description="Quasi-Einstein metrics on compact simple Lie groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", help="list catalog cases")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve", help="solve the block equations exactly")
    _case_args(p)
    p.add_argument("--a1")
    p.add_argument("--a2")
    p.add_argument("--p")

    p = sub.add_parser("interval", help="admissible a1-interval for r = 1")
    _case_args(p)

    p = sub.add_parser("certify", help="certify a solution at the tensor level")
    _case_args(p)
    p.add_argument("--params", help="comma-separated block scalars a0,...,a_r (or the free one)")
    p.add_argument("--a1")
    p.add_argument("--a2")
    p.add_argument("--p")
    p.add_argument("--m", required=True, help="positive rational m; it only affects n0")
    p.add_argument("--tol", type=float)
    p.add_argument("--dual", action="store_true", help="certify the noncompact dual")

    p = sub.add_parser("checks", help="structural identity residuals")
    _case_args(p)
    p.add_argument("--tol", type=float)

    p = sub.add_parser("report", help="full report")
    p.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.add_argument("--max-rank", type=int, default=4)
    return parser


COMMANDS = {
    "catalog": cmd_catalog,
    "solve": cmd_solve,
    "interval": cmd_interval,
    "certify": cmd_certify,
    "checks": cmd_checks,
    "report": cmd_report,
}


VALUE_FLAGS = ("--a1", "--a2", "--p", "--m", "--params", "--tol")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--p -2/3`` as ``--p=-2/3`` so negative rationals are not taken for options."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        argv = sys.argv[1:] if argv is None else list(argv)
        args = build_parser().parse_args(_join_negative_values(argv))
        if getattr(args, "max_rank", 4) < 2:
            raise InputError("--max-rank must be at least 2")
        tol = getattr(args, "tol", None)
        if tol is not None and not (math.isfinite(tol) and tol > 0):
            raise InputError("--tol must be positive")
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (qs.SolverError, LieAlgebraError, UnknownCase) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
