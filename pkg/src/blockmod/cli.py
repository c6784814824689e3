"""Command-line front end.

Subcommands: bracket, act, axioms, closure, witt, iso, replay, report.
Every invocation prints one JSON report to standard output (fields in a
fixed order: command, config, checks, overall) and exits 0 when every
check passed, 1 when any check failed, 2 on usage or expression syntax
errors.  Reports are byte-deterministic functions of the arguments and
the configuration, including the rng seed.

Rational parameters are written as ``a`` or ``a/b`` (for example
``--q 5/7``).  A config file of ``key=value`` lines may supply defaults
for q, lambda1, lambda2, alpha, D, B, rng_seed and sweeps; command-line
flags override the file.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import blockalg, omega, suites
from .closure import ClosureTag, closure
from .exactnum import format_rational, parse_rational
from .omega import ParamSet
from .poly import IndexPair, ParseError, parse_poly2
from .suites import Check

_CONFIG_KEYS = ("q", "lambda1", "lambda2", "alpha", "D", "B", "rng_seed", "sweeps")


@dataclass(frozen=True)
class RunConfig:
    """Parameters, scales and seed shared by the subcommands."""

    params: ParamSet
    degree_bound: int = 3
    box_radius: int = 5
    rng_seed: int = 1
    sweep_count: int = 10

    def __post_init__(self):
        if self.degree_bound < 1:
            raise ValueError("degree bound must be at least 1")
        if self.box_radius < 1:
            raise ValueError("box radius must be at least 1")
        if self.sweep_count < 1:
            raise ValueError("sweep count must be at least 1")


@dataclass(frozen=True)
class Report:
    command: str
    config: RunConfig
    checks: tuple[Check, ...]

    @property
    def overall(self) -> str:
        return "pass" if all(c.ok for c in self.checks) else "fail"


def report_to_json(report: Report) -> str:
    payload = {
        "command": report.command,
        "config": {
            "q": format_rational(report.config.params.q),
            "lambda1": format_rational(report.config.params.lambda1),
            "lambda2": format_rational(report.config.params.lambda2),
            "alpha": format_rational(report.config.params.alpha),
            "degree_bound": report.config.degree_bound,
            "box_radius": report.config.box_radius,
            "rng_seed": report.config.rng_seed,
            "sweep_count": report.config.sweep_count,
        },
        "checks": [
            {
                "name": check.name,
                "anchor": check.anchor,
                "status": check.status,
                "witness": check.witness,
            }
            for check in report.checks
        ],
        "overall": report.overall,
    }
    return json.dumps(payload, indent=2, ensure_ascii=True)


# --- argument plumbing ---------------------------------------------------------

def _read_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{line_number}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{line_number}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def _parse_lambda_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected two comma-separated rationals, e.g. 1,1")
    return parse_rational(parts[0]), parse_rational(parts[1])


def _parse_param_triple(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("expected lambda1,lambda2,alpha, e.g. 1,2,0")
    return tuple(parse_rational(part) for part in parts)


def _parse_index_pair(text: str) -> IndexPair:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected two comma-separated integers, e.g. 2,3")
    return IndexPair(int(parts[0]), int(parts[1]))


def build_config(args: argparse.Namespace) -> RunConfig:
    file_values: dict[str, str] = {}
    config_path = getattr(args, "config", None)
    if config_path:
        file_values = _read_config_file(config_path)

    def pick(flag_name, key, parser, default):
        value = getattr(args, flag_name, None)
        if value is not None:
            return value
        if key in file_values:
            return parser(file_values[key])
        return default

    lam = getattr(args, "lam", None)
    lambda1 = lam[0] if lam else pick("_none", "lambda1", parse_rational, Fraction(1))
    lambda2 = lam[1] if lam else pick("_none", "lambda2", parse_rational, Fraction(1))
    params = ParamSet(
        q=pick("q", "q", parse_rational, Fraction(1)),
        lambda1=lambda1,
        lambda2=lambda2,
        alpha=pick("alpha", "alpha", parse_rational, Fraction(0)),
    )
    return RunConfig(
        params=params,
        degree_bound=pick("degree_bound", "D", int, 3),
        box_radius=pick("box_radius", "B", int, 5),
        rng_seed=pick("rng_seed", "rng_seed", int, 1),
        sweep_count=pick("sweeps", "sweeps", int, 10),
    )


def build_parser() -> argparse.ArgumentParser:
    # shared options are attached to every subparser as well, so they may be
    # written before or after the subcommand; values default to SUPPRESS and
    # build_config fills in the real defaults
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=parse_rational, default=argparse.SUPPRESS,
                        help="algebra parameter (nonzero rational)")
    common.add_argument("--lambda", dest="lam", type=_parse_lambda_pair,
                        default=argparse.SUPPRESS, metavar="L1,L2",
                        help="module parameters lambda1,lambda2")
    common.add_argument("--alpha", type=parse_rational, default=argparse.SUPPRESS,
                        help="module parameter alpha")
    common.add_argument("--D", dest="degree_bound", type=int, default=argparse.SUPPRESS,
                        help="degree bound")
    common.add_argument("--B", dest="box_radius", type=int, default=argparse.SUPPRESS,
                        help="index box radius")
    common.add_argument("--rng-seed", type=int, default=argparse.SUPPRESS,
                        help="seed for the splitmix sampler")
    common.add_argument("--sweeps", type=int, default=argparse.SUPPRESS,
                        help="sample count for randomized sweeps")
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="key=value defaults file; flags override")

    parser = argparse.ArgumentParser(
        prog="blockmod",
        description="Exact verification toolkit for rank-1 polynomial modules "
                    "over Block Lie algebras.",
        parents=[common])
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("bracket", parents=[common],
                              help="Lie bracket of two elements")
    sub.add_argument("left", help="element, e.g. \"L(1,0)\"")
    sub.add_argument("right", help="element, e.g. \"3/2*L(0,1) - D2\"")

    sub = commands.add_parser("act", parents=[common],
                              help="module action of an element on a polynomial")
    sub.add_argument("element", help="element, e.g. \"L(1,0)\"")
    sub.add_argument("poly", help="polynomial in d1, d2")

    sub = commands.add_parser("axioms", parents=[common],
                              help="Jacobi and module-axiom sweeps")
    sub.add_argument("--radius", type=int, default=2, help="generator box radius")
    sub.add_argument("--use-variant-action", action="store_true",
                     help="diagnostic: run the module-axiom sweep with the rejected "
                          "variant action (expected to fail)")

    sub = commands.add_parser("closure", parents=[common],
                              help="submodule closure of seed polynomials")
    sub.add_argument("--seed", action="append", required=True,
                     help="seed polynomial; repeatable")

    sub = commands.add_parser("witt", parents=[common],
                              help="Witt line restriction check")
    sub.add_argument("--m", action="append", type=_parse_index_pair,
                     help="line index m1,m2 with m1 != 0; repeatable "
                          "(default: 1,0 2,3 -1,4)")
    sub.add_argument("--i-min", type=int, default=-4)
    sub.add_argument("--i-max", type=int, default=4)

    sub = commands.add_parser("iso", parents=[common],
                              help="decide module isomorphism")
    sub.add_argument("--left", type=_parse_param_triple, required=True,
                     metavar="L1,L2,A")
    sub.add_argument("--right", type=_parse_param_triple, required=True,
                     metavar="L1,L2,A")

    sub = commands.add_parser("replay", parents=[common],
                              help="identity replay suite")
    sub.add_argument("--eq", default="all",
                     choices=["commutator", "pair-difference", "separated-form",
                              "coefficients", "control", "all"])
    sub.add_argument("--radius", type=int, default=3, help="index box radius")
    sub.add_argument("--pairs", type=int, default=200, help="pair subsample cap")

    sub = commands.add_parser("report", parents=[common],
                              help="full verification suite")
    sub.add_argument("--level", choices=["full", "quick"], default="full",
                     help="full acceptance scales, or a fast smoke pass")
    return parser


# --- command implementations -----------------------------------------------------

def _cmd_bracket(args, config: RunConfig) -> list[Check]:
    ctx = config.params.context()
    left = blockalg.parse_element(args.left, ctx)
    right = blockalg.parse_element(args.right, ctx)
    result = blockalg.bracket(left, right, ctx)
    return [Check(name=f"bracket {args.left} , {args.right}", anchor="bracket",
                  status="pass", witness=str(result))]


def _cmd_act(args, config: RunConfig) -> list[Check]:
    ctx = config.params.context()
    element = blockalg.parse_element(args.element, ctx)
    f = parse_poly2(args.poly)
    result = omega.act(element, f, config.params)
    return [Check(name=f"act {args.element} on {args.poly}", anchor="module-action",
                  status="pass", witness=str(result))]


def _cmd_axioms(args, config: RunConfig) -> list[Check]:
    checks = suites.jacobi_suite([config.params.q], radius=args.radius)
    polys = suites.sample_axiom_polys(config.rng_seed, count=config.sweep_count)
    if args.use_variant_action:
        count, failure = suites.axiom_grid_scan(config.params, polys, args.radius,
                                                omega.action_on_one_alt)
        status = "fail" if failure is not None else "pass"
        witness = (f"variant image {suites.VARIANT_IMAGE_TEXT}: first defect at "
                   f"x={failure[0]}, y={failure[1]}" if failure is not None else
                   f"variant image {suites.VARIANT_IMAGE_TEXT}: {count} cases clean")
        checks.append(Check("module axioms (variant action)",
                            "module-action-compatibility", status, witness))
    else:
        checks += suites.module_axiom_suite([config.params], polys, radius=args.radius)
    return checks


def _cmd_closure(args, config: RunConfig) -> list[Check]:
    seeds = [parse_poly2(text) for text in args.seed]
    basis, result = closure(seeds, config.degree_bound, config.box_radius,
                            config.params)
    status = "pass" if result.tag is not ClosureTag.OTHER else "fail"
    seed_text = "; ".join(args.seed)
    return [Check(name=f"closure of [{seed_text}]", anchor="submodule-dichotomy",
                  status=status,
                  witness=f"tag={result.tag.value}, dim={result.dimension}; "
                          f"{result.diagnostics}")]


def _cmd_witt(args, config: RunConfig) -> list[Check]:
    ms = args.m or [IndexPair(1, 0), IndexPair(2, 3), IndexPair(-1, 4)]
    return suites.witt_restriction_suite(ms, args.i_min, args.i_max, [config.params])


def _cmd_iso(args, config: RunConfig) -> list[Check]:
    left = ParamSet(config.params.q, *args.left)
    right = ParamSet(config.params.q, *args.right)
    isomorphic, witness = omega.iso_check(left, right, box_radius=2)
    text = ("isomorphic: equal parameters" if isomorphic else
            f"not isomorphic: generator images differ at m={witness}")
    left_text = ",".join(format_rational(v) for v in args.left)
    right_text = ",".join(format_rational(v) for v in args.right)
    return [Check(name=f"iso {left_text} vs {right_text}", anchor="isomorphism-rigidity",
                  status="pass", witness=text)]


def _cmd_replay(args, config: RunConfig) -> list[Check]:
    selected: list[Check] = []
    if args.eq in ("commutator", "pair-difference", "separated-form", "coefficients",
                   "all"):
        checks = suites.replay_suite([config.params], config.rng_seed,
                                     radius=args.radius, pair_cap=args.pairs)
        wanted = {
            "commutator": {"commutator-replay"},
            "pair-difference": {"pair-difference-replay"},
            "separated-form": {"separated-form-replay"},
            "coefficients": {"coefficient-replay"},
            "all": {"commutator-replay", "pair-difference-replay",
                    "separated-form-replay", "coefficient-replay"},
        }[args.eq]
        selected += [c for c in checks if c.anchor in wanted]
    if args.eq == "control" or (args.eq == "all" and config.params.alpha != 1):
        # at alpha=1 the variant is a d2-translate of the adopted action and
        # the control is undefined; "all" skips it, asking for it is an error
        if config.params.alpha == 1:
            selected.append(Check(
                "commutator replay rejects the variant image", "action-variant-control",
                "error",
                "control undefined at alpha=1: the variant there is a d2-translate "
                "of the adopted action and satisfies the identities"))
        else:
            selected.append(suites.commutator_variant_control(config.params,
                                                              radius=args.radius))
    return selected


def _cmd_report(args, config: RunConfig) -> list[Check]:
    return suites.full_report(rng_seed=config.rng_seed, quick=args.level == "quick")


_COMMANDS = {
    "bracket": _cmd_bracket,
    "act": _cmd_act,
    "axioms": _cmd_axioms,
    "closure": _cmd_closure,
    "witt": _cmd_witt,
    "iso": _cmd_iso,
    "replay": _cmd_replay,
    "report": _cmd_report,
}


def run(command: str, args: argparse.Namespace, config: RunConfig) -> tuple[Report, int]:
    """Dispatch a parsed command; returns the report and the exit code."""
    checks = _COMMANDS[command](args, config)
    report = Report(command=command, config=config, checks=tuple(checks))
    return report, 0 if report.overall == "pass" else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return 2 if stop.code not in (0, None) else 0
    try:
        config = build_config(args)
        report, code = run(args.command, args, config)
    except (ParseError, ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    print(report_to_json(report))
    return code


def main_script() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
