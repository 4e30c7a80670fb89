"""Batch command-line surface.

Subcommands: classify, verify, ext, lab.  Output is JSON (sorted keys,
schema tag "weightcat/1") or plain text.  Exit codes: 0 all checks pass,
1 mathematical mismatch, 2 configuration error, 3 window too small to
certify.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .categorio import check_membership, classify
from .degonemod import PartitionError, build_M, build_N
from .extcoh import CertificationError, coboundary_quotient_dim, ext_solve_typeA, ext_solve_typeC
from .paperlab import LEMMAS, verify_AC1
from .rootsys import RealizationUnavailableError, build_root_system
from .weylmod import format_rational, parse_rational

SCHEMA = "weightcat/1"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2
EXIT_UNCERTIFIED = 3


def _emit(report: Dict, fmt: str) -> None:
    report = dict(report)
    report["schema"] = SCHEMA
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for key in sorted(report):
            print(f"{key}: {report[key]}")


def _parse_theta(s: Optional[str]) -> frozenset:
    if not s:
        return frozenset()
    return frozenset(int(x) for x in s.split(",") if x.strip())


def _parse_params(s: str) -> List[Fraction]:
    return [parse_rational(x) for x in s.split(",") if x.strip()]


def _build_module(kind: str, params: Sequence[Fraction]):
    return build_N(params) if kind == "N" else build_M(params)


def cmd_classify(args) -> int:
    system = build_root_system(args.type)
    theta = _parse_theta(args.theta)
    verdict = classify(system, theta)
    report = verdict.to_json()
    report["type"] = args.type
    report["theta"] = sorted(theta)
    _emit(report, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    module = _build_module(args.module, _parse_params(args.a))
    radius = args.B
    theta = module.theta_a()
    suites: Dict[str, bool] = {}

    system = module.system
    roots = sorted(system.roots, key=lambda r: (sum(r), r))
    window = module.window(radius)
    # bracket fidelity via composed action tables
    tables = {}
    for r in roots:
        tables[r] = {k: module.act_root(r, k) for k in window}
    ok = True
    for i, mu in enumerate(roots):
        for nu in roots[i + 1:]:
            s = tuple(a + b for a, b in zip(mu, nu))
            for k in window:
                got: Dict = {}
                for (x, y, sign) in ((mu, nu, 1), (nu, mu, -1)):
                    c1, k1 = module.act_root(y, k)
                    if c1:
                        c2, k2 = module.act_root(x, k1)
                        if c1 * c2:
                            got[k2] = got.get(k2, Fraction(0)) + sign * c1 * c2
                got = {kk: v for kk, v in got.items() if v}
                want: Dict = {}
                if s in system.roots:
                    n = system.realization.structure_constant(mu, nu)
                    c3, k3 = module.act_root(s, k)
                    if n * c3:
                        want[k3] = n * c3
                elif not any(s):
                    coeffs = system.realization.cartan_coefficients(mu)
                    val = sum((a * b for a, b in zip(coeffs, module.weight_of(k))), Fraction(0))
                    if val:
                        want[k] = val
                if got != want:
                    ok = False
    suites["bracket_fidelity"] = ok

    hw = set(module.enumerate_hw(theta, radius))
    suites["hw_enumeration"] = hw == set(module.predicted_hw(radius))
    suites["degree_one"] = module.degree_on_window(radius) == 1
    rep = check_membership(module, theta, radius=radius)
    suites["membership"] = rep.passed

    report = {"module": args.module, "a": [format_rational(x) for x in module.spec.a],
              "B": radius, "suites": suites, "all_pass": all(suites.values())}
    _emit(report, args.format)
    return EXIT_OK if all(suites.values()) else EXIT_MISMATCH


def cmd_ext(args) -> int:
    params_a = _parse_params(args.a)
    params_b = _parse_params(args.b) if args.b else list(params_a)
    if args.module == "N" and len(params_a) == 2:
        # rank one: report the cocycle space modulo coboundaries
        module = build_N(params_a)
        other = build_N(params_b)
        dim = coboundary_quotient_dim(module, other, args.B)
        report = {"case": "rank-one cuspidal pair", "B": args.B, "dimension": dim}
        _emit(report, args.format)
        return EXIT_OK
    solver = ext_solve_typeA if args.module == "N" else ext_solve_typeC
    cs = solver(params_a, params_b, radius=args.B)
    report = cs.to_json()
    report["module"] = args.module
    _emit(report, args.format)
    return EXIT_OK


def cmd_lab(args) -> int:
    lemma = args.lemma
    if lemma not in LEMMAS:
        raise SystemExit(f"unknown lemma id {lemma!r}; choose from {sorted(LEMMAS)}")
    params = _parse_params(args.a)
    depth = args.D
    if lemma in ("lemA12", "appendix-a3"):
        branch = "0" if args.c in (None, "0") else "-1-A"
        krange = range(-args.B + 1, args.B)
        report = LEMMAS[lemma](params[0], params[1], branch=branch,
                               k_range=tuple(krange), depth=depth)
    elif lemma == "AC1":
        report = verify_AC1(params[0], params[1], depth=depth)
    else:
        report = LEMMAS[lemma](params, depth=depth)
    _emit(report.to_json(), args.format)
    return EXIT_OK if report.match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weightcat",
                                 description="exact computations with weight module categories")
    ap.add_argument("--config", help="JSON file with the same keys as the flags")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide a category from a Cartan type and theta")
    p.add_argument("type", help="Cartan type, e.g. A3")
    p.add_argument("--theta", help="1-based simple-root indices in theta, comma separated")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the invariant suites on one module")
    p.add_argument("--module", choices=["N", "M"], required=True)
    p.add_argument("--a", required=True, help="parameter vector, e.g. -1,1/2,1/3,0")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ext", help="solve a self-extension constraint system")
    p.add_argument("--module", choices=["N", "M"], required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", help="second parameter vector (defaults to --a)")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("lab", help="rerun a constant-extraction script")
    p.add_argument("lemma", help=f"one of {sorted(LEMMAS)}")
    p.add_argument("--a", required=True)
    p.add_argument("--c", help="branch selector for the two-branch scripts (0 or -1-A)")
    p.set_defaults(func=cmd_lab)

    for p in sub.choices.values():
        p.add_argument("--B", type=int, default=3, help="window radius")
        p.add_argument("--D", type=int, default=4, help="truncation depth")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--seed", type=int, default=0)
    return ap


def _glue_value_flags(argv: List[str]) -> List[str]:
    """Join '--a -1,1/2' into '--a=-1,1/2' so leading dashes parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--a", "--b", "--theta") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = ap.parse_args(_glue_value_flags(argv))
    if args.config:
        with open(args.config) as fh:
            loaded = json.load(fh)
        for key, val in loaded.items():
            if getattr(args, key, None) in (None, ap.get_default(key)):
                setattr(args, key, val)
    try:
        return args.func(args)
    except (PartitionError, RealizationUnavailableError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CertificationError as exc:
        print(f"certification impossible: {exc}", file=sys.stderr)
        return EXIT_UNCERTIFIED


if __name__ == "__main__":
    sys.exit(main())
