"""
Command-Line Interface
Construct fields, skew polynomials and codes, compute duals and run the
verification workflow; JSON (or a table) on stdout, logs on stderr
"""
from typing import Any, Dict, List, Optional, Sequence
import argparse
import asyncio
import json
import logging
import sys

import numpy as np
import pandas as pd
from pydantic import BaseModel

from ..algebra import skewpoly as sp
from ..algebra.gf import (
    FieldAut,
    dual_basis,
    f_arith,
    felt,
    field_create,
    find_self_dual_normal,
    frobenius,
    hilbert90,
    make_basis,
    normal_basis,
    trace_norm,
)
from ..codes import constacyclic as cc
from ..codes import convolutional as conv
from ..codes import skewrs
from ..config import load_catalogue, resolve_run_config, suite_ids
from ..errors import SkewDualError
from ..workflow import VerificationWorkflow
from .models import (
    BasisReport,
    ConstacyclicReport,
    ConvolutionalReport,
    FieldReport,
    SkewPolyReport,
    SkewRSReport,
    VerificationReport,
    document_schemas,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(message)


def parse_ints(text: str) -> List[int]:
    """'1,0,1' -> [1, 0, 1]; the empty string is the empty list"""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got '{text}'")


def parse_matrix(text: str) -> List[List[int]]:
    """'1,0;0,1' -> [[1, 0], [0, 1]]"""
    rows = [parse_ints(row) for row in text.split(";")]
    if not rows or len({len(r) for r in rows}) != 1:
        raise UsageError(f"matrix rows must have equal length, got '{text}'")
    return rows


def _ints(arr) -> Any:
    return np.asarray(arr, dtype=np.int64).tolist()


def render(document: BaseModel, output: str) -> str:
    if output == "table":
        frame = pd.json_normalize(document.model_dump(mode="json"))
        return frame.T.to_string(header=False)
    return document.model_dump_json(indent=2)


# ---------------------------------------------------------------------------
# field / basis
# ---------------------------------------------------------------------------

def _field(args):
    return field_create(args.p, args.m, parse_ints(args.modulus) if args.modulus else None)


def cmd_field(args) -> FieldReport:
    F = _field(args)
    report = FieldReport(p=F.p, m=F.m, q=F.q, modulus=list(F.modulus), operation=args.field_cmd)
    if args.field_cmd == "arith":
        if args.y is None and args.op != "inv":
            raise UsageError(f"--y is required for '{args.op}'")
        report.inputs = {"op": args.op, "x": args.x, "y": args.y}
        report.result = int(f_arith(F, args.op, args.x, args.y))
    elif args.field_cmd == "frobenius":
        report.inputs = {"s": args.s, "x": args.x}
        report.result = int(frobenius(F, args.s, felt(F, args.x)))
    elif args.field_cmd in ("trace", "norm"):
        report.inputs = {"d": args.d, "x": args.x}
        report.result = int(trace_norm(F, args.d, args.field_cmd, args.x))
    elif args.field_cmd == "hilbert90":
        sigma = FieldAut(F, args.s if args.s is not None else args.d)
        report.inputs = {"d": args.d, "s": sigma.s, "mu": args.mu}
        report.result = int(hilbert90(F, args.d, args.mu, sigma=sigma))
    return report


def cmd_basis(args) -> BasisReport:
    F = _field(args)
    report = BasisReport(p=F.p, m=F.m, d=args.d, operation=args.basis_cmd)
    if args.basis_cmd == "dual":
        B = dual_basis(make_basis(F, args.d, parse_ints(args.basis)))
    elif args.basis_cmd == "normal":
        report.alpha = args.alpha
        B = normal_basis(F, args.d, args.alpha)
    else:
        report.alpha = find_self_dual_normal(F, args.d)
        if report.alpha is None:
            return report
        B = normal_basis(F, args.d, report.alpha)
    report.elements = list(B.elements)
    report.normal = B.normal
    report.self_dual = B.self_dual
    report.gram = _ints(B.gram)
    return report


# ---------------------------------------------------------------------------
# skewpoly
# ---------------------------------------------------------------------------

def cmd_skewpoly(args) -> SkewPolyReport:
    F = _field(args)
    sigma = FieldAut(F, args.s)
    convention = sp.Convention(args.convention)

    def poly(text):
        return sp.from_ints(sigma, parse_ints(text), convention)

    report = SkewPolyReport(p=F.p, m=F.m, s=args.s, convention=convention.value, operation=args.poly_cmd)
    if args.poly_cmd == "mul":
        f, g = poly(args.f), poly(args.g)
        report.inputs = {"f": list(f.coeffs), "g": list(g.coeffs)}
        report.result = {"product": sp.to_ints(sp.sp_mul(f, g))}
    elif args.poly_cmd == "divide":
        f, g = poly(args.f), poly(args.g)
        q, r = sp.sp_divide(args.side, f, g)
        report.inputs = {"side": args.side, "f": list(f.coeffs), "g": list(g.coeffs)}
        report.result = {"q": sp.to_ints(q), "r": sp.to_ints(r)}
    elif args.poly_cmd == "gcd":
        f, g = poly(args.f), poly(args.g)
        report.inputs = {"kind": args.kind, "f": list(f.coeffs), "g": list(g.coeffs)}
        report.result = {args.kind: sp.to_ints(sp.sp_gcd_lcm(args.kind, f, g))}
    elif args.poly_cmd == "norm":
        report.inputs = {"a": args.a, "i": args.i}
        report.result = {"norm": int(sp.sp_norm(args.a, args.i, sigma))}
    elif args.poly_cmd == "eval":
        f = poly(args.f)
        report.inputs = {"f": list(f.coeffs), "a": args.a}
        report.result = {"value": int(sp.sp_right_eval(f, args.a))}
    return report


# ---------------------------------------------------------------------------
# code
# ---------------------------------------------------------------------------

def cmd_constacyclic(args) -> ConstacyclicReport:
    L = _field(args)
    sigma = FieldAut(L, args.sigma)
    R = cc.ring_create(L, sigma, args.n, args.u)
    result = cc.dual(R, sp.from_ints(sigma, parse_ints(args.gen)))
    return ConstacyclicReport(
        p=L.p, m=L.m, s=sigma.s, n=R.n, u=R.u,
        generator=list(result.f.coeffs),
        cofactor=list(result.h.coeffs),
        dimension=result.code.dim,
        dual_dimension=result.dual.dim,
        generator_matrix=_ints(result.generator_matrix),
        dual_generator_poly=list(result.dual_poly.coeffs),
        dual_matrix=_ints(result.dual_matrix),
        checks={
            "kernel_match": result.pair.agrees,
            "dual_generator_poly": result.shortcut == result.dual,
            "dimensions": result.code.dim + result.dual.dim == R.n,
        },
    )


def cmd_skewrs(args) -> SkewRSReport:
    L = _field(args)
    sigma = FieldAut(L, args.sigma)
    code = skewrs.rs_create(L, sigma, args.alpha, args.delta)
    report = SkewRSReport(
        p=L.p, m=L.m, s=sigma.s, n=code.n, k=code.k,
        alpha=code.alpha, beta=int(code.beta), delta=code.delta,
        g=list(code.g.coeffs), gamma=int(code.gamma),
        generator_matrix=_ints(code.generator_matrix),
    )
    if args.dual or args.mindist:
        dual = skewrs.rs_dual(code)
        report.dual_g = list(dual.g.coeffs)
        report.checks["dual_matches_oracle"] = skewrs.dual_matches_oracle(code)
        report.checks["theta_h"] = skewrs.theta_h_check(code)
    if args.eval:
        params = skewrs.eval_params(code)
        report.mu, report.nu = params.mu, params.nu
        report.sge_matrix = _ints(skewrs.sge_matrix(sigma, params.points, params.multipliers, params.k))
        report.checks["sge_spans_code"] = skewrs.sge_code(code, params) == code.code
    if args.mindist:
        report.min_distance = skewrs.min_distance(code.code)
        report.dual_min_distance = skewrs.min_distance(skewrs.rs_dual(code).code)
        report.mds = report.min_distance == code.n - code.k + 1
        report.checks["designed_distance"] = report.min_distance == code.delta
    return report


def cmd_conv(args) -> ConvolutionalReport:
    W = conv.ambient_create(args.p, args.d, args.t, args.n,
                            basis=parse_ints(args.basis) if args.basis else None)
    sigma = conv.mat_aut(W, parse_matrix(args.U), args.h)
    e = parse_matrix(args.idem)
    result = conv.licc_dual_idem(W, sigma, e)
    return ConvolutionalReport(
        p=args.p, d=args.d, t=args.t, n=args.n,
        basis=list(W.D.elements),
        U=_ints(sigma.matrix), h=sigma.h,
        idempotent=e,
        M_R_f=conv.M_R_poly(W, sigma, result.f).to_json(),
        dual_generators=result.dual.to_json(),
        checks=result.checks,
    )


# ---------------------------------------------------------------------------
# verify / schema
# ---------------------------------------------------------------------------

def _samples(pairs: Optional[Sequence[str]]) -> Dict[str, int]:
    counts = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep:
            raise UsageError(f"--samples expects key=value, got '{pair}'")
        try:
            counts[key] = int(value)
        except ValueError:
            raise UsageError(f"sample count for '{key}' must be an integer, got '{value}'")
    return counts


def cmd_verify(args) -> VerificationReport:
    catalogue = load_catalogue(args.catalogue)
    known = suite_ids(catalogue)
    if args.suite.lower() == "all":
        suites = known
    else:
        suites = [s for s in known if s.lower() == args.suite.lower()]
        if not suites:
            raise UsageError(f"unknown suite '{args.suite}'; expected 'all' or one of {known}")
    run_config = resolve_run_config(
        catalogue,
        seed=getattr(args, "seed", None),
        output=getattr(args, "output", "json"),
        samples=_samples(args.samples),
        fail_fast=True if args.fail_fast else None,
    )
    workflow = VerificationWorkflow(args.catalogue, suites)
    final_state = asyncio.run(workflow.run(run_config))
    return VerificationReport(**final_state["report"])


def _passed(document: BaseModel) -> bool:
    if isinstance(document, VerificationReport):
        return document.passed
    checks = getattr(document, "checks", None)
    if isinstance(checks, dict):
        ok = all(checks.values())
        if isinstance(document, SkewRSReport) and document.mds is False:
            return False
        return ok
    return True


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _global_flags() -> argparse.ArgumentParser:
    """Flags accepted before the command and after it"""
    common = CliParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed of the random samples (overrides SKEWDUAL_SEED)")
    common.add_argument("--output", choices=["json", "table"], default=argparse.SUPPRESS)
    common.add_argument("--log-level", default=argparse.SUPPRESS,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


def _field_flags(parser: argparse.ArgumentParser, m_flag: str = "--m") -> None:
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument(m_flag, dest="m", type=int, required=True)
    parser.add_argument("--modulus", help="ascending base-p digits, e.g. 1,1,1")


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = CliParser(prog="skewdual", description=__doc__.strip().splitlines()[0], parents=[common])
    commands = parser.add_subparsers(dest="command", required=True)

    # field
    field = commands.add_parser("field", help="finite field arithmetic")
    field_cmds = field.add_subparsers(dest="field_cmd", required=True)
    for name in ("info", "arith", "frobenius", "trace", "norm", "hilbert90"):
        sub = field_cmds.add_parser(name, parents=[common])
        _field_flags(sub)
        if name == "arith":
            sub.add_argument("--op", choices=["add", "sub", "mul", "div", "pow", "inv"], required=True)
            sub.add_argument("--x", type=int, required=True)
            sub.add_argument("--y", type=int)
        elif name == "frobenius":
            sub.add_argument("--s", type=int, default=1)
            sub.add_argument("--x", type=int, required=True)
        elif name in ("trace", "norm"):
            sub.add_argument("--d", type=int, default=1)
            sub.add_argument("--x", type=int, required=True)
        elif name == "hilbert90":
            sub.add_argument("--d", type=int, default=1)
            sub.add_argument("--s", type=int, help="Frobenius power of the automorphism (default d)")
            sub.add_argument("--mu", type=int, required=True)
        sub.set_defaults(handler=cmd_field)

    # basis
    basis = commands.add_parser("basis", help="dual, normal and self-dual normal bases")
    basis_cmds = basis.add_subparsers(dest="basis_cmd", required=True)
    for name in ("dual", "normal", "self-dual-normal"):
        sub = basis_cmds.add_parser(name, parents=[common])
        _field_flags(sub)
        sub.add_argument("--d", type=int, default=1)
        if name == "dual":
            sub.add_argument("--basis", required=True, help="comma-separated field elements")
        elif name == "normal":
            sub.add_argument("--alpha", type=int, required=True)
        sub.set_defaults(handler=cmd_basis)

    # skewpoly
    skew = commands.add_parser("skewpoly", help="skew polynomial arithmetic")
    skew_cmds = skew.add_subparsers(dest="poly_cmd", required=True)
    for name in ("mul", "divide", "gcd", "norm", "eval"):
        sub = skew_cmds.add_parser(name, parents=[common])
        _field_flags(sub)
        sub.add_argument("--s", type=int, default=1, help="sigma = Frobenius^s")
        sub.add_argument("--convention", choices=["left", "right"], default="left")
        if name in ("mul", "divide", "gcd"):
            sub.add_argument("--f", required=True)
            sub.add_argument("--g", required=True)
        if name == "divide":
            sub.add_argument("--side", choices=["right", "left"], default="right")
        elif name == "gcd":
            sub.add_argument("--kind", choices=["gcrd", "gcld", "lclm", "lcrm"], default="gcrd")
        elif name == "norm":
            sub.add_argument("--a", type=int, required=True)
            sub.add_argument("--i", type=int, required=True)
        elif name == "eval":
            sub.add_argument("--f", required=True)
            sub.add_argument("--a", type=int, required=True)
        sub.set_defaults(handler=cmd_skewpoly)

    # code
    code = commands.add_parser("code", help="construct codes and their duals")
    code_cmds = code.add_subparsers(dest="code_cmd", required=True)

    consta = code_cmds.add_parser("constacyclic", parents=[common])
    _field_flags(consta)
    consta.add_argument("--sigma", type=int, default=1)
    consta.add_argument("--n", type=int, required=True)
    consta.add_argument("--u", type=int, default=1)
    consta.add_argument("--gen", required=True, help="monic left divisor of x^n - u, ascending")
    consta.set_defaults(handler=cmd_constacyclic)

    rs = code_cmds.add_parser("skewrs", parents=[common])
    _field_flags(rs)
    rs.add_argument("--sigma", type=int, default=1)
    rs.add_argument("--alpha", type=int, required=True)
    rs.add_argument("--delta", type=int, required=True)
    rs.add_argument("--dual", action="store_true")
    rs.add_argument("--eval", action="store_true")
    rs.add_argument("--mindist", action="store_true")
    rs.set_defaults(handler=cmd_skewrs)

    conv_cmd = code_cmds.add_parser("conv", parents=[common])
    conv_cmd.add_argument("--p", type=int, required=True)
    conv_cmd.add_argument("--d", type=int, default=1)
    conv_cmd.add_argument("--t", type=int, required=True)
    conv_cmd.add_argument("--n", type=int, required=True)
    conv_cmd.add_argument("--basis", help="basis of K over F, comma-separated")
    conv_cmd.add_argument("--U", required=True, help="rows separated by ';', e.g. 1,0;0,1")
    conv_cmd.add_argument("--h", type=int, default=0)
    conv_cmd.add_argument("--idem", required=True, help="idempotent matrix, e.g. 1,0;0,0")
    conv_cmd.set_defaults(handler=cmd_conv)

    # verify
    verify = commands.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suite", help="'all' or a suite id")
    verify.add_argument("--fail-fast", action="store_true")
    verify.add_argument("--samples", nargs="*", metavar="KEY=N")
    verify.add_argument("--catalogue", help=argparse.SUPPRESS)
    verify.set_defaults(handler=cmd_verify)

    schema = commands.add_parser("schema", parents=[common], help="JSON schema of every document")
    schema.set_defaults(handler=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(args, "log_level", "WARNING"),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    output = getattr(args, "output", "json")

    if args.handler is None:
        print(json.dumps(document_schemas(), indent=2))
        return EXIT_OK

    try:
        document = args.handler(args)
    except (SkewDualError, UsageError) as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render(document, output))
    if not _passed(document):
        logger.error("❌ checks failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
