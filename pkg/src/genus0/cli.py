"""Command-line front end: ``genus0 <subcommand> [options]``."""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from genus0.exactmath import QuadraticNumber, RationalFunction

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


class DomainError(ArithmeticError):
    pass


@dataclass
class CommandRequest:
    command: str
    level: int | None = None
    disc: int | None = None
    t: Fraction | None = None
    alpha: QuadraticNumber | None = None
    prec: int | None = None
    json: bool = False
    suite: str = "all"
    bound: int = 50


@dataclass
class CommandResult:
    result: dict
    lines: list[str]
    warnings: list[str] = field(default_factory=list)
    status: int = EXIT_OK


# ---------------------------------------------------------------------------
# literal parsing

def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed rational {text!r}; expected p/q") from None


_NUM = r"\d+(?:/\d+)?"
_QUAD = re.compile(
    rf"^\s*(?P<a>[+-]?{_NUM})?\s*(?:(?P<sign>[+-])?\s*(?:(?P<b>{_NUM})\s*\*\s*)?"
    r"sqrt\(\s*(?P<d>[+-]?\d+)\s*\))?\s*$")


def parse_quadratic(text: str) -> QuadraticNumber:
    """Parse ``a+b*sqrt(D)`` and its abbreviations (``a``, ``sqrt(D)``, ``a-sqrt(D)``)."""
    m = _QUAD.match(text)
    if not m or not text.strip() or (m["a"] is None and m["d"] is None):
        raise UsageError(f"malformed quadratic literal {text!r}; expected a+b*sqrt(D)")
    a = Fraction(m["a"]) if m["a"] else Fraction(0)
    if m["d"] is None:
        return QuadraticNumber(a, 0, 1)
    if m["a"] is not None and m["sign"] is None:
        raise UsageError(f"malformed quadratic literal {text!r}; missing sign before sqrt")
    b = Fraction(m["b"]) if m["b"] else Fraction(1)
    if m["sign"] == "-":
        b = -b
    d = int(m["d"])
    if d == 0:
        raise UsageError("radicand must be nonzero")
    return QuadraticNumber(a, b, d)


def _json_value(x):
    if isinstance(x, (RationalFunction, QuadraticNumber)):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def _need(req: CommandRequest, *names: str) -> None:
    missing = [n for n in names if getattr(req, n) is None]
    if missing:
        raise UsageError(f"{req.command} needs " + ", ".join("--" + n for n in missing))


# ---------------------------------------------------------------------------
# handlers

def _haupt(req: CommandRequest) -> CommandResult:
    from genus0.exactmath import divisors
    from genus0.hauptmodul import hauptmodul_record
    _need(req, "level")
    rec = hauptmodul_record(req.level)
    ds = divisors(req.level)
    exps = rec.product.as_tuple()
    result = {"divisors": ds, "exponents": list(exps), "kappa": rec.kappa,
              "kappa_sqrt": rec.kappa_sqrt, "verified": rec.verified}
    lines = [f"h_{req.level} = {rec.product}",
             "exponents " + ", ".join(f"r_{d}={r}" for d, r in zip(ds, exps)),
             f"kappa = {rec.kappa}  (sqrt(kappa) = {rec.kappa_sqrt})",
             f"q-expansion check: {'ok' if rec.verified else 'FAILED'}"]
    return CommandResult(result, lines)


def _jmap(req: CommandRequest) -> CommandResult:
    from genus0.ratrecover import recover_j, recover_j_minus_1728
    _need(req, "level")
    _genus0_level(req.level)
    j, j1 = recover_j(req.level, req.prec), recover_j_minus_1728(req.level, req.prec)
    return CommandResult({"j": j, "j_minus_1728": j1},
                         [f"j = {j}", f"j - 1728 = {j1}"])


def _coeffs(req: CommandRequest) -> CommandResult:
    from genus0.curves import isogenous_pair_coeffs
    _need(req, "level")
    _genus0_level(req.level)
    funcs = isogenous_pair_coeffs(req.level, req.prec).as_dict()
    lines = [f"{k} = {v}" for k, v in funcs.items()]
    lines.append("E : y^2 = x^3 - (A4/48) x + A6/864,  E' likewise with A4', A6'")
    return CommandResult(funcs, lines)


def _cm(req: CommandRequest) -> CommandResult:
    from genus0.curves import cm_special_value
    _need(req, "level")
    _genus0_level(req.level)
    cm = cm_special_value(req.level)
    return CommandResult({"h": cm.hValue, "j": cm.jValue, "tau": cm.fixedTau},
                         [f"tau = {cm.fixedTau}", f"h = {cm.hValue}", f"j = {cm.jValue}"])


def _genus(req: CommandRequest) -> CommandResult:
    from genus0.levels import genus0_levels, level_invariants
    if req.level is None:
        levels = genus0_levels()
        return CommandResult({"genus0_levels": levels},
                             ["genus-zero levels: " + ", ".join(map(str, levels))])
    if req.level < 1:
        raise UsageError("--level must be positive")
    inv = level_invariants(req.level)
    result = {"psi": inv.degree, "eps2": inv.eps2, "eps3": inv.eps3, "eps_inf": inv.eps_inf, "genus": inv.genus}
    lines = [f"X0({req.level}): psi={inv.degree} eps2={inv.eps2} eps3={inv.eps3} "
             f"cusps={inv.eps_inf} genus={inv.genus}"]
    return CommandResult(result, lines)


def _kcurve(req: CommandRequest) -> CommandResult:
    from genus0.kcurves import strict_kcurve_exists
    _need(req, "level", "disc")
    _check_disc(req.disc)
    dec = strict_kcurve_exists(req.level, req.disc, req.bound)
    result = {"plus_is_norm": dec.plusIsNorm, "minus_is_norm": dec.minusIsNorm, "exists": dec.exists,
              "witness": None if dec.witness is None else
              {"x": dec.witness[0], "y": dec.witness[1], "sign": dec.witness[2]}}
    lines = [f"x^2 - ({req.disc}) y^2 = +{req.level}: {'solvable' if dec.plusIsNorm else 'not solvable'}",
             f"x^2 - ({req.disc}) y^2 = -{req.level}: {'solvable' if dec.minusIsNorm else 'not solvable'}"]
    warnings = []
    if dec.witness:
        x, y, s = dec.witness
        lines.append(f"witness: x = {x}, y = {y} (sign {'+' if s > 0 else '-'})")
    elif dec.exists:
        warnings.append(f"no witness found with denominators up to {req.bound}")
    if not dec.exists:
        lines.append("no strict twist exists")
    return CommandResult(result, lines, warnings, EXIT_OK if dec.exists else EXIT_DOMAIN)


def _twists(req: CommandRequest) -> CommandResult:
    from genus0.kcurves import TwistSpec, strict_twist_family
    _need(req, "level", "disc", "t")
    _check_disc(req.disc)
    alpha = req.alpha if req.alpha is not None else QuadraticNumber(1, 0, req.disc)
    if alpha.b and QuadraticNumber(0, 1, req.disc).d != alpha.d:
        raise UsageError(f"alpha {alpha} does not lie in Q(sqrt({req.disc}))")
    fam = strict_twist_family(TwistSpec(req.level, req.disc, req.t, alpha))
    result = {"h": fam.h, "alpha": alpha, "E": {"a4": fam.E[0], "a6": fam.E[1]},
              "E_prime": {"a4": fam.Ep[0], "a6": fam.Ep[1]}, "strict": fam.strict}
    lines = [f"h = {fam.h}", f"alpha = {alpha}",
             f"E : y^2 = x^3 + ({fam.E[0]}) x + ({fam.E[1]})",
             f"E': y^2 = x^3 + ({fam.Ep[0]}) x + ({fam.Ep[1]})",
             f"strict: {'yes' if fam.strict else 'no'}"]
    return CommandResult(result, lines)


def _verify(req: CommandRequest) -> CommandResult:
    from genus0.verify import SUITES, run_all
    names = SUITES if req.suite == "all" else (req.suite,)
    if req.suite != "all" and req.suite not in SUITES:
        raise UsageError(f"unknown suite {req.suite!r}; choose from {', '.join(SUITES)} or all")
    results = run_all(names)
    lines, warnings, out = [], [], {}
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({len(r.checks)} checks)")
        for c in r.failures():
            lines.append(f"    failed: {c.label}: {c.detail}")
        warnings.extend(f"{r.name}: {w}" for w in r.warnings)
        out[r.name] = {"passed": r.passed, "checks": len(r.checks),
                       "failures": [{"label": c.label, "detail": c.detail} for c in r.failures()]}
    ok = all(r.passed for r in results)
    return CommandResult(out, lines, warnings, EXIT_OK if ok else EXIT_DOMAIN)


def _genus0_level(N: int) -> None:
    from genus0.levels import genus
    if N < 2 or genus(N) != 0:
        raise DomainError(f"X0({N}) is not a genus-zero curve with N >= 2")


def _check_disc(D: int) -> None:
    from genus0.exactmath import squarefree_decomposition
    if D in (0, 1) or squarefree_decomposition(D)[0] != 1:
        raise UsageError(f"--disc must be a squarefree integer other than 0 and 1, got {D}")


HANDLERS = {"haupt": _haupt, "jmap": _jmap, "coeffs": _coeffs, "cm": _cm, "genus": _genus,
            "kcurve": _kcurve, "twists": _twists, "verify": _verify}


def run_command(req: CommandRequest) -> tuple[int, str]:
    """Dispatch a request; returns the exit status and the rendered document."""
    if req.command not in HANDLERS:
        return EXIT_USAGE, f"unknown subcommand {req.command!r}"
    warnings: list[str] = []
    try:
        res = HANDLERS[req.command](req)
        status, result, lines = res.status, _json_value(res.result), res.lines
        warnings = res.warnings
    except UsageError as exc:
        status, result, lines = EXIT_USAGE, {"error": str(exc)}, [f"error: {exc}"]
    except (ArithmeticError, ValueError) as exc:
        status, result, lines = EXIT_DOMAIN, {"error": str(exc)}, [f"error: {exc}"]
    if req.json:
        doc = {"command": req.command, "level": req.level, "result": result, "warnings": warnings}
        return status, json.dumps(doc, indent=2)
    return status, "\n".join(lines + [f"warning: {w}" for w in warnings])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genus0", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level", type=int)
    common.add_argument("--disc", type=int)
    common.add_argument("--t", type=parse_rational_arg)
    common.add_argument("--alpha", type=parse_quadratic_arg)
    common.add_argument("--prec", type=int)
    common.add_argument("--json", action="store_true")
    common.add_argument("--suite", default="all")
    common.add_argument("--bound", type=int, default=50)
    sub = p.add_subparsers(dest="command", required=True)
    helps = {"haupt": "eta-product Hauptmodul and Fricke constant",
             "jmap": "j and j - 1728 as rational functions of h",
             "coeffs": "coefficients of the isogenous pair E, E'",
             "cm": "j at the Fricke fixed point",
             "genus": "genus of X0(N), or the list of genus-zero levels",
             "kcurve": "decide existence of a strict twist over Q(sqrt(D))",
             "twists": "twist family for a square kappa level",
             "verify": "run golden-table and property suites"}
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return p


def parse_rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_quadratic_arg(text: str) -> QuadraticNumber:
    try:
        return parse_quadratic(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    req = CommandRequest(**{k: v for k, v in vars(ns).items()})
    if req.prec is not None and req.prec < 10:
        print("error: --prec must be at least 10", file=sys.stderr)
        return EXIT_USAGE
    status, text = run_command(req)
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
