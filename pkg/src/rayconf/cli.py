"""Command-line interface.

Decision commands exit 0 when feasible/found, 1 when not, 2 on usage or
input errors; every command prints one canonical JSON report on stdout and
keeps human diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .configs import (
    Configuration,
    canonicalize,
    count_configurations,
    enumerate_configurations,
    to_blocks,
)
from .constructions import (
    alternating_gon,
    clustered_set,
    crossing_hard_set,
    f_bound,
    g_bound,
    opposite_horizontal_realizer,
    ring_pair,
    universal_point_set,
    universal_realizer,
    fc_universal_realizer,
    wedge_point_bound,
    width_lower_bound,
)
from .crossing import ChiStrategy, chi_search, min_crossing_search, alternation_limit
from .formats import (
    dumps_canonical,
    pointset_from_obj,
    pointset_to_obj,
    rayfamily_from_obj,
    rayfamily_to_obj,
    read_json,
    write_json,
)
from .general import GammaMethod, decide_general, gamma, general_oracle
from .geom import PointSet, PositionClass, format_rational, position_class
from .lineal import decide_line, line_oracle
from .lowerbound import conf2_realizer, lb_family
from .rays import Regime, configuration_at_infinity, crossing_count, validate_family
from .seqcount import count_sigma, count_sigma_prime, enumerate_sigma
from .svg import render_svg

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _default_precision() -> int:
    return int(os.environ.get("RAYCONF_PRECISION", "30"))


def _emit(report: dict) -> None:
    sys.stdout.write(dumps_canonical(report))


def _load_points(path: str) -> PointSet:
    return pointset_from_obj(read_json(path))


def _parse_config(word: str) -> Configuration:
    return canonicalize(word)


def _cmd_decide(args) -> int:
    points = _load_points(args.points)
    config = _parse_config(args.config)
    method = args.method
    if method == "auto":
        pc = position_class(points)
        if pc is PositionClass.COLLINEAR:
            method = "line"
        elif len(points) <= 6:
            method = "oracle"
        else:
            method = "dp"
            print("auto: large input, dp without oracle confirmation", file=sys.stderr)
    if method == "line":
        decision = decide_line(points, config)
        feasible = decision.feasible
    elif method == "oracle":
        feasible = config in general_oracle(points)
    else:
        feasible = decide_general(points, config)
    _emit({
        "command": "decide",
        "config": config.word,
        "feasible": feasible,
        "method": method,
    })
    return EXIT_OK if feasible else EXIT_NEGATIVE


def _cmd_gamma(args) -> int:
    points = _load_points(args.points)
    value = gamma(points, GammaMethod(args.method))
    _emit({"command": "gamma", "method": args.method, "gamma": value})
    return EXIT_OK


def _cmd_count_configs(args) -> int:
    _emit({
        "command": "count-configs",
        "n": args.n,
        "count": count_configurations(args.n),
    })
    return EXIT_OK


def _cmd_enum_configs(args) -> int:
    configs = enumerate_configurations(args.n)
    _emit({
        "command": "enum-configs",
        "n": args.n,
        "count": len(configs),
        "configurations": [c.word for c in configs],
    })
    return EXIT_OK


def _cmd_construct(args) -> int:
    precision = args.precision or _default_precision()
    extras: dict = {}
    if args.name == "universal":
        points = universal_point_set(args.n, perturb=args.perturb)
    elif args.name == "clustered":
        points = clustered_set(args.k, perturb=args.perturb)
    elif args.name == "alternating-gon":
        points = alternating_gon(args.n, precision)
    elif args.name == "ring":
        pair = ring_pair(args.n, Fraction(args.lam), precision)
        points = pair.combined()
        extras["lam"] = format_rational(pair.lam)
    elif args.name == "crossing-hard":
        points = crossing_hard_set(args.n, Fraction(args.eps))
    else:
        raise ValueError(f"unknown construction {args.name!r}")
    if args.verify:
        extras["position_class"] = position_class(points).value
        points.require_balanced()
    if args.out:
        write_json(args.out, pointset_to_obj(points))
    if args.svg:
        render_svg(points, None, args.svg)
    _emit({
        "command": "construct",
        "name": args.name,
        "size": len(points),
        "out": args.out,
        **extras,
    })
    return EXIT_OK


def _cmd_realize(args) -> int:
    if args.kind in ("universal", "fc-universal"):
        config = _parse_config(args.config)
        n = config.n
        build = universal_realizer if args.kind == "universal" else fc_universal_realizer
        family = build(n, config)
        points = universal_point_set(n)
    elif args.kind == "nn":
        points = _load_points(args.points)
        family = opposite_horizontal_realizer(points)
        config = configuration_at_infinity(family)
    else:
        raise ValueError(f"unknown realizer kind {args.kind!r}")
    report = validate_family(family, points)
    word = configuration_at_infinity(family)
    if args.out:
        write_json(args.out, rayfamily_to_obj(family))
    if args.svg:
        render_svg(points, family, args.svg)
    _emit({
        "command": "realize",
        "kind": args.kind,
        "config": word.word,
        "regime": family.regime.value,
        "valid": report.ok,
        "out": args.out,
    })
    return EXIT_OK if report.ok and word == config else EXIT_NEGATIVE


def _cmd_lower_bound(args) -> int:
    points = _load_points(args.points)
    result = lb_family(points)
    written = []
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for idx, fam in enumerate(result.families):
            path = os.path.join(args.out_dir, f"family-{idx:04d}.json")
            write_json(path, rayfamily_to_obj(fam))
            written.append(path)
    _emit({
        "command": "lower-bound",
        "k": result.k,
        "families": len(result.families),
        "distinct_configurations": sorted(c.word for c in result.configurations),
        "bound_holds": len(result.configurations) * len(points) >= 2 ** result.k,
        "out_dir": args.out_dir,
    })
    return EXIT_OK


def _cmd_chi(args) -> int:
    points = _load_points(args.points)
    config = _parse_config(args.config)
    cert = chi_search(points, config, ChiStrategy(args.strategy), grid=args.grid)
    found = cert is not None
    report = {
        "command": "chi",
        "config": config.word,
        "strategy": args.strategy,
        "found": found,
        "note": "a miss is evidence only, not a proof of chi-infeasibility",
    }
    if found and args.out:
        write_json(args.out, rayfamily_to_obj(cert.family))
        report["out"] = args.out
    _emit(report)
    return EXIT_OK if found else EXIT_NEGATIVE


def _cmd_min_crossings(args) -> int:
    points = _load_points(args.points)
    config = _parse_config(args.config)
    result = min_crossing_search(points, config, budget=args.budget)
    _emit({
        "command": "min-crossings",
        "config": config.word,
        "best": result.best_count,
        "exhaustive": result.exhaustive,
        "note": "minimum over canonical-direction assignments; an upper bound "
                "on the continuous minimum",
    })
    return EXIT_OK if result.best_count is not None else EXIT_NEGATIVE


def _cmd_seqcount(args) -> int:
    if args.family == "sigma":
        count = count_sigma(args.n)
        report = {"command": "seqcount", "family": "sigma", "n": args.n, "count": count}
        if args.enumerate:
            report["sequences"] = enumerate_sigma(args.n)
    else:
        report = {
            "command": "seqcount",
            "family": "sigma-prime",
            "n": args.n,
            "count": count_sigma_prime(args.n),
        }
    _emit(report)
    return EXIT_OK


def _cmd_validate(args) -> int:
    points = _load_points(args.points)
    report: dict = {
        "command": "validate",
        "size": len(points),
        "balanced": points.is_balanced(),
        "position_class": position_class(points).value,
    }
    ok = report["balanced"]
    if args.rays:
        family = rayfamily_from_obj(read_json(args.rays))
        if args.regime:
            family = type(family)(family.rays, Regime(args.regime))
        validation = validate_family(family, points)
        report["regime"] = family.regime.value
        report["family_valid"] = validation.ok
        report["violations"] = len(validation.violations)
        report["configuration"] = configuration_at_infinity(family).word
        report["crossings"] = crossing_count(family)
        ok = ok and validation.ok
    _emit(report)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_render(args) -> int:
    points = _load_points(args.points)
    family = rayfamily_from_obj(read_json(args.rays)) if args.rays else None
    render_svg(points, family, args.out)
    _emit({"command": "render", "out": args.out})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rayconf",
        description="decide, construct, enumerate and verify cyclic color "
                    "configurations realized by colored rays",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("decide", help="is a configuration feasible from a point set")
    p.add_argument("--points", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--method", choices=("auto", "line", "dp", "oracle"), default="auto")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("gamma", help="count feasible configurations")
    p.add_argument("--points", required=True)
    p.add_argument("--method", choices=("oracle", "dp"), default="oracle")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("count-configs", help="number of balanced cyclic words")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_count_configs)

    p = sub.add_parser("enum-configs", help="list canonical configurations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enum_configs)

    p = sub.add_parser("construct", help="emit a named point-set construction")
    p.add_argument("name", choices=(
        "universal", "clustered", "alternating-gon", "ring", "crossing-hard"))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--lam", default="2")
    p.add_argument("--eps", default="1/4")
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--perturb", action="store_true")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("realize", help="build a certified realizer family")
    p.add_argument("--kind", choices=("universal", "fc-universal", "nn"), required=True)
    p.add_argument("--config", default=None)
    p.add_argument("--points", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("lower-bound", help="emit the 2^k perturbed families")
    p.add_argument("--points", required=True)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=_cmd_lower_bound)

    p = sub.add_parser("chi", help="search for a full-crossing realization")
    p.add_argument("--points", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--strategy", choices=[s.value for s in ChiStrategy],
                   default="concurrent")
    p.add_argument("--grid", type=int, default=360)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("min-crossings", help="minimum crossings over proper realizations")
    p.add_argument("--points", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(func=_cmd_min_crossings)

    p = sub.add_parser("seqcount", help="forbidden-substring sequence counts")
    p.add_argument("--family", choices=("sigma", "sigma-prime"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=_cmd_seqcount)

    p = sub.add_parser("validate", help="validate files and regimes")
    p.add_argument("--points", required=True)
    p.add_argument("--rays", default=None)
    p.add_argument("--regime", choices=[r.value for r in Regime], default=None)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("render", help="deterministic SVG figure")
    p.add_argument("--points", required=True)
    p.add_argument("--rays", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
