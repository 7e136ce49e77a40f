"""Batch command-line front end.

Every subcommand emits one or more reports.  With ``--json`` each report
is one canonical JSON line (sorted keys, compact separators, rationals
as "p/q" strings, no floats anywhere), so byte-identical round trips are
guaranteed.  Exit status: 0 when every report is ok, 1 when any
verification failed, 2 for refused or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from typing import Any, Optional

from . import bounds as bounds_mod
from . import fibration
from .commutators import ExpansionNotFound, bavard_expand, culler_expand
from .certificates import tenth_power_certificate
from .pi1 import equal_in_rep, validate_model
from .scripts import ScriptSyntaxError, check_script, parse_script
from .twists import default_configuration
from .words import Word


def _rat(value) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


class Report:
    def __init__(self, command: str, status: str, details: dict[str, Any],
                 certificate: Optional[dict[str, Any]] = None):
        assert status in ("ok", "fail", "refused")
        self.command = command
        self.status = status
        self.details = details
        self.certificate = certificate

    def to_json(self) -> str:
        payload: dict[str, Any] = {
            "command": self.command,
            "status": self.status,
            "details": self.details,
        }
        if self.certificate is not None:
            payload["certificate"] = self.certificate
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"[{self.status}] {self.command}"]
        for key in sorted(self.details):
            lines.append(f"  {key}: {self.details[key]}")
        if self.certificate is not None:
            lines.append(f"  certificate: {json.dumps(self.certificate, sort_keys=True)}")
        return "\n".join(lines)


def _expression_payload(expr) -> dict[str, Any]:
    """Factor list for either word-level or twist-level expressions."""
    return {
        "target": str(expr.target),
        "factors": [
            {"conjugator": str(f.conjugator), "left": str(f.left), "right": str(f.right)}
            for f in expr.factors
        ],
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> list[Report]:
    config = default_configuration()
    if args.what == "relations":
        model = validate_model(config)
        details = {
            "checks": [{"name": c.name, "passed": c.passed} for c in model.checks],
            "passed": sum(c.passed for c in model.checks),
            "failed": sum(not c.passed for c in model.checks),
        }
        if not model.passed:
            details["first_failure"] = model.failures()[0].name
        return [Report("verify relations", "ok" if model.passed else "fail", details)]

    # tenth-power: replay the shipped script, check the displayed equality
    # in the representation, then certify the two-commutator expression.
    text = resources.files("twistscl").joinpath("data/tenth_power.script").read_text()
    script, cfg = parse_script(text, config)
    replay = check_script(script, cfg)
    displayed = equal_in_rep(
        config.word("t4 t_alpha^-1 t5 t1^-1"),
        config.word("t2^4 t1 t2^-1 t_beta t2^-1 t2^6"),
        config,
    )
    cert = tenth_power_certificate(config)
    ok = replay.accepted and displayed and cert.certified
    details = {
        "script_steps": len(script.steps),
        "script_accepted": replay.accepted,
        "displayed_equality_in_representation": displayed,
        "certificate_steps": len(cert.script.steps),
        "certificate_accepted": cert.report.accepted,
        "certificate_value_preserving": cert.report.value_preserving(),
    }
    if not replay.accepted:
        details["first_failure"] = {
            "step": replay.failure[0], "reason": replay.failure[1],
        }
    return [Report(
        "verify tenth-power", "ok" if ok else "fail", details,
        certificate=_expression_payload(cert.expression),
    )]


def _cmd_check_script(args) -> list[Report]:
    try:
        with open(args.file, encoding="utf-8") as f:
            text = f.read()
    except OSError as err:
        return [Report("check-script", "refused", {"error": str(err)})]
    try:
        script, cfg = parse_script(text, default_configuration())
    except ScriptSyntaxError as err:
        return [Report("check-script", "refused", {"error": str(err)})]
    report = check_script(script, cfg)
    details: dict[str, Any] = {
        "file": args.file,
        "steps": len(script.steps),
        "accepted": report.accepted,
        "source": str(report.source),
        "claimed": str(report.claimed),
        "conjugator": str(report.conjugator),
    }
    if report.accepted:
        details["final"] = str(report.final)
    else:
        details["first_failure"] = {"step": report.failure[0], "reason": report.failure[1]}
    if args.trace:
        details["trace"] = [
            {"step": str(r.step), "word": str(r.word)} for r in report.records
        ]
    return [Report("check-script", "ok" if report.accepted else "fail", details)]


def _cmd_expand(args) -> list[Report]:
    if args.mode == "culler":
        command = "expand culler"
        u, v = Word.generator("u"), Word.generator("v")
        try:
            expr = culler_expand(u, v, args.k)
        except (ValueError, ExpansionNotFound) as err:
            return [Report(command, "refused", {"error": str(err)})]
        details = {
            "k": args.k,
            "factor_count": expr.factor_count(),
            "expected_count": args.k // 2 + 1,
            "verified": True,
        }
    else:
        command = "expand bavard"
        pairs = [
            (Word.generator(f"u{i}"), Word.generator(f"v{i}"))
            for i in range(1, args.r + 1)
        ]
        try:
            expr = bavard_expand(pairs, args.k)
        except (ValueError, ExpansionNotFound) as err:
            return [Report(command, "refused", {"error": str(err)})]
        details = {
            "r": args.r,
            "k": args.k,
            "factor_count": expr.factor_count(),
            "expected_count": args.k * (args.r - 1) + args.k // 2 + 1,
            "verified": True,
        }
    certificate = _expression_payload(expr) if args.emit else None
    return [Report(command, "ok", details, certificate=certificate)]


def _cmd_bounds(args) -> list[Report]:
    try:
        spec = bounds_mod.SurfaceSpec(
            genus=args.genus, punctures=args.punctures, boundary=args.boundary,
            curve=args.curve, side_genus=args.side_genus,
        )
        report = bounds_mod.bound_report(spec)
    except (ValueError, bounds_mod.OutOfHypotheses) as err:
        return [Report("bounds", "refused", {"error": str(err)})]
    details = {
        "genus": args.genus,
        "punctures": args.punctures,
        "boundary": args.boundary,
        "curve": args.curve,
        "element": report.element,
        "lower": _rat(report.lower) if report.lower is not None else None,
        "upper": _rat(report.upper) if report.upper is not None else None,
        "commutator_power_threshold": report.commutator_power_threshold,
        "positive": report.positive,
    }
    if args.side_genus is not None:
        details["side_genus"] = args.side_genus
    return [Report("bounds", "ok", details)]


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _cmd_numerology(args) -> list[Report]:
    try:
        r = _parse_fraction(args.r)
    except (ValueError, ZeroDivisionError):
        return [Report("numerology", "refused", {"error": f"bad rational {args.r!r}"})]
    if args.find_n:
        try:
            found = fibration.find_contradiction_n(args.genus, r)
        except ValueError as err:
            return [Report("numerology", "refused", {"error": str(err)})]
        details: dict[str, Any] = {
            "genus": args.genus,
            "r": _rat(r),
            "n": found.n,
            "impossible": found.impossible,
        }
        if found.n is not None:
            inv = fibration.invariants_report(args.genus, r, found.n)
            details["contradiction_value"] = inv.contradiction_value
        return [Report("numerology", "ok", details)]
    try:
        inv = fibration.invariants_report(args.genus, r, args.n)
    except ValueError as err:
        return [Report("numerology", "refused", {"error": str(err)})]
    details = {
        "genus": inv.genus,
        "r": _rat(inv.ratio),
        "n": inv.n,
        "rn": inv.rn,
        "chi": inv.chi,
        "b1_upper": inv.b1_upper,
        "b2minus_lower": inv.b2minus_lower,
        "b2plus_upper": inv.b2plus_upper,
        "b2_upper_via_chi": inv.b2_upper_via_chi,
        "sigma_upper": inv.sigma_upper,
        "c1sq_upper": inv.c1sq_upper,
        "c1sq_li_lower": inv.c1sq_li_lower,
        "contradiction_value": inv.contradiction_value,
        "contradiction": inv.contradiction,
        "premise": inv.premise,
    }
    return [Report("numerology", "ok", details)]


def _cmd_matrix(args) -> list[Report]:
    try:
        form = fibration.intersection_matrix(args.size)
    except ValueError as err:
        return [Report("matrix", "refused", {"error": str(err)})]
    details = {
        "size": args.size,
        "matrix": [list(row) for row in form.matrix],
        "minors": list(form.minors),
        "positive_definite": form.positive_definite,
    }
    return [Report("matrix", "ok", details)]


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistscl",
        description="Exact verification of Dehn-twist commutator identities "
                    "and stable-commutator-length bounds.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit one canonical JSON report per line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a built-in verification")
    p.add_argument("what", choices=("relations", "tenth-power"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check-script", parents=[common],
                       help="replay a proof script file")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true",
                   help="include every intermediate word in the report")
    p.set_defaults(func=_cmd_check_script)

    p = sub.add_parser("expand", parents=[common],
                       help="certified commutator expansions of powers")
    exp_sub = p.add_subparsers(dest="mode", required=True)
    pc = exp_sub.add_parser("culler", parents=[common])
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--emit", action="store_true", help="embed the factor words")
    pc.set_defaults(func=_cmd_expand, mode="culler")
    pb = exp_sub.add_parser("bavard", parents=[common])
    pb.add_argument("--r", type=int, required=True)
    pb.add_argument("--k", type=int, required=True)
    pb.add_argument("--emit", action="store_true", help="embed the factor words")
    pb.set_defaults(func=_cmd_expand, mode="bavard")

    p = sub.add_parser("bounds", parents=[common],
                       help="stable-commutator-length bound table")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--punctures", type=int, default=0)
    p.add_argument("--boundary", type=int, default=0)
    p.add_argument("--curve", choices=bounds_mod.CURVE_KINDS, default="nonseparating")
    p.add_argument("--side-genus", type=int, default=None,
                   help="smaller-side genus of a separating curve")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("numerology", parents=[common],
                       help="fibration invariant ledger and contradiction search")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--r", required=True, help="rational ratio, e.g. 1/49")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--find-n", action="store_true")
    p.set_defaults(func=_cmd_numerology)

    p = sub.add_parser("matrix", parents=[common],
                       help="tridiagonal intersection form and its minors")
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=_cmd_matrix)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    reports = args.func(args)
    out = sys.stdout
    for report in reports:
        print(report.to_json() if args.json else report.to_text(), file=out)
    if any(r.status == "refused" for r in reports):
        return 2
    if any(r.status == "fail" for r in reports):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
