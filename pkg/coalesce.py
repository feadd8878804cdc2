#!/usr/bin/env python3
"""
coalesce: k-coalescence spectra, invariants and topological indices.

Command-line front end for the modules package. Every command writes one
JSON run report to stdout; logs and progress bars go to stderr.

Key features:
- Graph generation for the basic and coalescence families
- Structural invariants, exact A_alpha characteristic polynomials, spectra and energies
- Wiener, hyper-Wiener, forgotten, first Zagreb and Narumi-Katayama indices
- Verification sweeps for every closed form, with PASS/FAIL/REFUTED rows

Exit codes: 0 success, 1 domain error, 2 usage error, 3 at least one FAIL row.
"""

import argparse
import json
import logging
import logging.config
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from modules.coalescence import CoalescenceFamily, build_family, coalesce
from modules.config import apply_environment, load_config, validate_config
from modules.errors import CoalesceError, ParamOutOfRange
from modules.graph import Family, FamilyKind, Graph, degree_profile, generate, parse_graph, serialize_graph
from modules.indices import INDEX_NAMES, index_report
from modules.spectra import (
    ENERGY_VARIANTS,
    READINGS,
    NumericSettings,
    aalpha_char_poly,
    corollary_check,
    eigenvalues,
    identity_check,
)
from modules.structural import SearchLimits, structure_report
from modules.utils import (
    FAIL,
    VerificationRow,
    parse_alpha,
    parse_alphas,
    parse_grid,
    parse_params,
    parse_range,
    status_counts,
    to_jsonable,
)
from modules import verify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_FAILED = 3

logger = logging.getLogger("coalesce")


def build_logging_config(level: str = "WARNING", json_format: bool = False) -> Dict[str, Any]:
    """Structured logging to stderr; stdout is reserved for the JSON report."""
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'standard': {
                'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s',
                'datefmt': '%Y-%m-%d %H:%M:%S',
            },
            'json': {
                '()': 'pythonjsonlogger.jsonlogger.JsonFormatter',
                'format': '%(asctime)s %(name)s %(levelname)s %(message)s',
            },
        },
        'handlers': {
            'stderr': {
                'level': level,
                'formatter': 'json' if json_format else 'standard',
                'class': 'logging.StreamHandler',
                'stream': 'ext://sys.stderr',
            },
        },
        'loggers': {
            'coalesce': {
                'handlers': ['stderr'],
                'level': level,
                'propagate': False,
            },
        },
    }


@dataclass(frozen=True)
class Context:
    """Resolved settings for one run."""
    config: Dict[str, Any]
    limits: SearchLimits
    numeric: NumericSettings
    sweep: verify.SweepSettings

    @property
    def digits(self) -> int:
        return self.numeric.float_digits


def resolve_context(args: argparse.Namespace) -> Context:
    """Config file, then COALESCE_LIMIT, then command-line flags."""
    config = apply_environment(load_config(args.config))
    if args.limit is not None:
        config["limits"]["exact_search"] = args.limit
    if args.workers is not None:
        config["verify"]["workers"] = args.workers
    if args.progress or args.verbose:
        config["verify"]["progress"] = True
    validate_config(config)
    return Context(
        config=config,
        limits=SearchLimits.from_config(config),
        numeric=NumericSettings.from_config(config),
        sweep=verify.SweepSettings.from_config(config),
    )


def configure_logging(args: argparse.Namespace, config: Optional[Dict[str, Any]] = None) -> None:
    logging_section = (config or {}).get("logging", {})
    if args.debug:
        level = "DEBUG"
    elif args.verbose:
        level = str(logging_section.get("level", "INFO")).upper()
    else:
        level = "WARNING"
    json_format = args.log_json or bool(logging_section.get("json", False))
    logging.config.dictConfig(build_logging_config(level, json_format))


# Input and output helpers

def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as f:
        return f.read()


def read_graph(path: str, name: str, inputs: List[Dict[str, Any]]) -> Graph:
    g = parse_graph(read_text(path))
    inputs.append({"name": name, "path": path, "n": g.n, "m": g.m, "sha256": g.fingerprint()})
    logger.info(f"📄 Loaded {name} from {path}: n={g.n}, m={g.m}")
    return g


def write_graph(g: Graph, path: str) -> None:
    text = serialize_graph(g)
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(text)
    logger.info(f"💾 Wrote {g.n} vertices, {g.m} edges to {path}")


def graph_summary(g: Graph) -> Dict[str, Any]:
    return {"n": g.n, "m": g.m, "sha256": g.fingerprint()}


def build_named(family: str, params: Sequence[int]) -> Graph:
    """Basic family (one order parameter) or coalescence family."""
    try:
        tag = Family(family)
    except ValueError:
        tag = None
    if tag is not None:
        if len(params) != 1:
            raise ParamOutOfRange(f"{family} takes one order parameter, got {list(params)}")
        return generate(FamilyKind(tag, params[0]))
    try:
        kind = CoalescenceFamily(family)
    except ValueError:
        raise ParamOutOfRange(f"unknown family {family!r}", {"family": family}) from None
    return build_family(kind, *params).result


# Commands. Each returns (result payload, verification rows).

Outcome = Tuple[Any, List[VerificationRow]]


def cmd_gen(args, ctx: Context, inputs) -> Optional[Outcome]:
    params = parse_params(args.params)
    g = build_named(args.family, params)
    write_graph(g, args.out)
    if args.out == "-":
        return None
    return {"family": args.family, "params": list(params), "out": args.out, **graph_summary(g)}, []


def cmd_coalesce(args, ctx: Context, inputs) -> Optional[Outcome]:
    g1 = read_graph(args.g1, "g1", inputs)
    g2 = read_graph(args.g2, "g2", inputs)
    record = coalesce(g1, parse_params(args.q1), g2, parse_params(args.q2))
    write_graph(record.result, args.out)
    if args.out == "-":
        return None
    return {**record.summary(), "out": args.out, "sha256": record.result.fingerprint()}, []


def cmd_analyze(args, ctx: Context, inputs) -> Outcome:
    g = read_graph(args.input, "g", inputs)
    report = structure_report(g, ctx.limits)
    profile = degree_profile(g)
    result = {"degrees": list(profile.degrees), "connected": g.is_connected(), **report.to_json()}
    violations = report.sanity_violations()
    if violations:
        logger.warning(f"❌ Sanity chain violated: {violations}")
    return result, []


def cmd_spectrum(args, ctx: Context, inputs) -> Outcome:
    g = read_graph(args.input, "g", inputs)
    report = eigenvalues(g, parse_alpha(args.alpha), ctx.numeric)
    logger.info(f"✅ Energy at alpha={report.alpha}: {report.energy:.12g}")
    return report.to_json(ctx.digits, ctx.numeric.multiplicity_tolerance), []


def cmd_charpoly(args, ctx: Context, inputs) -> Outcome:
    g = read_graph(args.input, "g", inputs)
    alpha = parse_alpha(args.alpha)
    poly = aalpha_char_poly(g, alpha)
    return {"alpha": str(alpha), "coefficients": poly.to_json(), "text": str(poly), "degree": poly.degree}, []


def cmd_indices(args, ctx: Context, inputs) -> Outcome:
    g = read_graph(args.input, "g", inputs)
    report = index_report(g)
    logger.info(f"✅ Indices: {report.to_json()}")
    return report.to_json(), []


def cmd_verify_structure(args, ctx: Context, inputs) -> Outcome:
    ks = parse_range(args.k)
    rows = verify.structure_sweep(ks, ctx.limits, ctx.sweep)
    return {"sweep": "structure", "k": ks}, rows


def _single_pair(args, ctx: Context, inputs, alphas) -> Outcome:
    g1 = read_graph(args.g1, "g1", inputs)
    g2 = read_graph(args.g2, "g2", inputs)
    q1, q2 = parse_params(args.q1), parse_params(args.q2)
    params = {"n1": g1.n, "n2": g2.n}
    if args.form == "corollary":
        checks = [corollary_check(g1, q1, g2, q2)]
        rows = [verify.corollary_row(checks[0], params)]
    else:
        checks = [identity_check(g1, q1, g2, q2, alpha, args.reading) for alpha in alphas]
        rows = [verify.identity_row(check, params) for check in checks]
    result = {
        "form": args.form,
        "reading": args.reading,
        "equal": all(check.equal for check in checks),
        "checks": [check.to_json() for check in checks],
    }
    return result, rows


def cmd_verify_decomposition(args, ctx: Context, inputs) -> Outcome:
    alphas = parse_alphas(args.alpha) if args.alpha else list(verify.DECOMPOSITION_ALPHAS)
    if args.g1 or args.g2:
        if not (args.g1 and args.g2 and args.q1 and args.q2):
            raise ParamOutOfRange("single-pair mode needs --g1, --q1, --g2 and --q2")
        if args.form == "lollipop":
            raise ParamOutOfRange("the lollipop form takes --m and --n, not a graph pair")
        return _single_pair(args, ctx, inputs, alphas)

    sweep = ctx.sweep
    if args.samples is not None or args.seed is not None:
        sweep = verify.SweepSettings(
            workers=sweep.workers,
            progress=sweep.progress,
            seed=sweep.seed if args.seed is None else args.seed,
            samples=sweep.samples if args.samples is None else args.samples,
        )
    ks = parse_range(args.k)
    rows = verify.decomposition_sweep(
        form=args.form,
        ks=ks,
        alphas=alphas,
        reading=args.reading,
        settings=sweep,
        lollipop_m=parse_range(args.m),
        lollipop_n=parse_range(args.n),
    )
    result = {
        "sweep": "decomposition",
        "form": args.form,
        "reading": args.reading,
        "k": ks,
        "alphas": [str(a) for a in alphas],
        "samples": sweep.samples,
        "seed": sweep.seed,
    }
    return result, rows


def _grid_ranges(args, m_default: str, n_default: str) -> Dict[str, List[int]]:
    grid = {"m": parse_range(args.m or m_default), "n": parse_range(args.n or n_default)}
    if args.grid:
        grid.update(parse_grid(args.grid))
    return grid


def cmd_verify_complete_forms(args, ctx: Context, inputs) -> Outcome:
    grid = _grid_ranges(args, "2..10", "2..10")
    alphas = parse_alphas(args.alpha) if args.alpha else list(verify.CLOSED_FORM_ALPHAS)
    rows = verify.complete_forms_sweep(grid["m"], grid["n"], alphas, ctx.numeric, ctx.sweep)
    return {"sweep": "complete-forms", "grid": grid, "alphas": [str(a) for a in alphas]}, rows


def cmd_verify_energy(args, ctx: Context, inputs) -> Outcome:
    variants = list(ENERGY_VARIANTS) if args.variant in (None, "all") else [args.variant]
    grid = _grid_ranges(args, "3..6", "3..6")
    alphas = parse_alphas(args.alpha) if args.alpha else list(verify.CLOSED_FORM_ALPHAS)
    rows = verify.energy_corollary_sweep(variants, grid["m"], grid["n"], alphas, ctx.numeric, ctx.sweep)
    located = sorted({row.detail.get("mismatch_location") for row in rows if row.failed} - {None})
    result = {
        "sweep": "energy-corollaries",
        "variants": variants,
        "grid": grid,
        "alphas": [str(a) for a in alphas],
        "mismatch_locations": located,
    }
    return result, rows


def cmd_verify_index_forms(args, ctx: Context, inputs) -> Outcome:
    if args.family in (None, "all"):
        families = list(CoalescenceFamily)
    else:
        families = [CoalescenceFamily(args.family)]
    which = [w.strip() for w in args.which.split(",")] if args.which else list(INDEX_NAMES)
    unknown = [w for w in which if w not in INDEX_NAMES]
    if unknown:
        raise ParamOutOfRange(f"unknown index names {unknown}", {"which": which})
    grids = {}
    if args.grid:
        override = parse_grid(args.grid)
        for family in families:
            grids[family] = {**verify.DEFAULT_INDEX_GRIDS[family], **override}
    rows = verify.index_forms_sweep(families, grids, which, args.composition_samples, ctx.sweep)
    result = {
        "sweep": "index-forms",
        "families": [f.value for f in families],
        "which": which,
        "composition_samples": args.composition_samples,
        "failed_cells": verify.failed_cells(rows),
    }
    return result, rows


COMMANDS = {
    "gen": cmd_gen,
    "coalesce": cmd_coalesce,
    "analyze": cmd_analyze,
    "spectrum": cmd_spectrum,
    "charpoly": cmd_charpoly,
    "indices": cmd_indices,
    ("verify", "structure"): cmd_verify_structure,
    ("verify", "decomposition"): cmd_verify_decomposition,
    ("verify", "complete-forms"): cmd_verify_complete_forms,
    ("verify", "energy-corollaries"): cmd_verify_energy,
    ("verify", "index-forms"): cmd_verify_index_forms,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=argparse.SUPPRESS, help='YAML configuration file')
    common.add_argument('--verbose', '-v', action='store_true', default=argparse.SUPPRESS, help='Human-readable progress on stderr')
    common.add_argument('--debug', action='store_true', default=argparse.SUPPRESS, help='Enable debug logging')
    common.add_argument('--log-json', action='store_true', default=argparse.SUPPRESS, help='Emit log records as JSON')
    common.add_argument('--progress', action='store_true', default=argparse.SUPPRESS, help='Show sweep progress bars')
    common.add_argument('--workers', type=int, default=argparse.SUPPRESS, help='Worker processes for sweeps')
    common.add_argument('--limit', type=int, default=argparse.SUPPRESS, help='Exact-search vertex budget')
    common.add_argument('--pretty', action='store_true', default=argparse.SUPPRESS, help='Indent the JSON report')
    common.add_argument('--json', action='store_true', default=argparse.SUPPRESS, help='Compact JSON report (default)')

    parser = argparse.ArgumentParser(
        prog='coalesce',
        description='k-coalescence spectra, invariants and topological indices',
        parents=[common],
    )
    parser.set_defaults(
        config='config.yaml', verbose=False, debug=False, log_json=False, progress=False,
        workers=None, limit=None, pretty=False, json=True,
    )
    sub = parser.add_subparsers(dest='command', required=True)
    families = [f.value for f in Family] + [f.value for f in CoalescenceFamily]

    p = sub.add_parser('gen', parents=[common], help='Generate a family graph')
    p.add_argument('--family', required=True, choices=families)
    p.add_argument('--params', required=True, help='Comma-separated parameters, e.g. 6,6,4')
    p.add_argument('--out', default='-', help='Output edge-list file, - for stdout')

    p = sub.add_parser('coalesce', parents=[common], help='Merge two graphs along paired cliques')
    p.add_argument('--g1', required=True)
    p.add_argument('--q1', required=True, help='Clique of g1, e.g. 0,1')
    p.add_argument('--g2', required=True)
    p.add_argument('--q2', required=True, help='Clique of g2, paired position by position with --q1')
    p.add_argument('--out', default='-')

    for name, text in (('analyze', 'Structural invariants'), ('indices', 'Topological indices')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--in', dest='input', required=True, help='Edge-list file, - for stdin')
    for name, text in (('spectrum', 'A_alpha spectrum and energy'), ('charpoly', 'Exact A_alpha characteristic polynomial')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--in', dest='input', required=True)
        p.add_argument('--alpha', default='0', help='Exact rational p/q in [0, 1]')

    v = sub.add_parser('verify', parents=[common], help='Verification sweeps')
    vsub = v.add_subparsers(dest='target', required=True)

    p = vsub.add_parser('structure', parents=[common], help='Structural propositions over family coalescences')
    p.add_argument('--k', default='1..3')

    p = vsub.add_parser('decomposition', parents=[common], help='Characteristic polynomial decompositions')
    p.add_argument('--form', choices=['identity', 'corollary', 'lollipop'], default='identity')
    p.add_argument('--reading', choices=READINGS, default='principal')
    p.add_argument('--alpha', help='Comma-separated rationals, default 0,1/3,1/2,1')
    p.add_argument('--k', default='1')
    p.add_argument('--samples', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--m', default='3..6', help='Cycle lengths for the lollipop form')
    p.add_argument('--n', default='2..5', help='Path orders for the lollipop form')
    for flag in ('--g1', '--q1', '--g2', '--q2'):
        p.add_argument(flag)

    p = vsub.add_parser('complete-forms', parents=[common], help='Closed forms for coalesced complete graphs')
    p.add_argument('--m')
    p.add_argument('--n')
    p.add_argument('--alpha', '--alphas', dest='alpha')
    p.add_argument('--grid', help='e.g. m=2..10;n=2..10')

    p = vsub.add_parser('energy-corollaries', parents=[common], help='Printed energy closed forms')
    p.add_argument('--variant', choices=list(ENERGY_VARIANTS) + ['all'], default='all')
    p.add_argument('--m')
    p.add_argument('--n')
    p.add_argument('--alpha', '--alphas', dest='alpha')
    p.add_argument('--grid')

    p = vsub.add_parser('index-forms', parents=[common], help='Family index closed forms and composition rules')
    p.add_argument('--family', choices=[f.value for f in CoalescenceFamily] + ['all'], default='all')
    p.add_argument('--which', help='Comma-separated subset of W,WW,F,M1,NK')
    p.add_argument('--grid')
    p.add_argument('--composition-samples', type=int, default=0)
    return parser


def emit(report: Dict[str, Any], pretty: bool) -> None:
    sys.stdout.write(json.dumps(report, indent=2 if pretty else None) + "\n")
    sys.stdout.flush()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and return its exit code.

    This function:
    1. Parses the command line (usage errors exit with 2 via argparse)
    2. Loads configuration and sets up logging
    3. Dispatches to the command handler
    4. Writes the run report and maps the outcome to an exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args)

    key = ("verify", args.target) if args.command == "verify" else args.command
    inputs: List[Dict[str, Any]] = []
    report: Dict[str, Any] = {"command": argv, "inputs": inputs}
    digits = 15
    try:
        ctx = resolve_context(args)
        configure_logging(args, ctx.config)
        digits = ctx.digits
        outcome = COMMANDS[key](args, ctx, inputs)
    except CoalesceError as e:
        logger.error(f"❌ {type(e).__name__}: {e.message}")
        report["error"] = to_jsonable(e.to_dict(), digits)
        report["status"] = {"code": EXIT_DOMAIN}
        emit(report, args.pretty)
        return EXIT_DOMAIN
    except OSError as e:
        logger.error(f"❌ {e}")
        report["error"] = {"type": type(e).__name__, "message": str(e), "details": {}}
        report["status"] = {"code": EXIT_DOMAIN}
        emit(report, args.pretty)
        return EXIT_DOMAIN

    if outcome is None:
        # the edge list itself went to stdout
        return EXIT_OK

    result, rows = outcome
    code = EXIT_FAILED if any(row.status == FAIL for row in rows) else EXIT_OK
    report["result"] = to_jsonable(result, digits)
    if rows or args.command == "verify":
        report["rows"] = [row.to_json(digits) for row in rows]
    report["status"] = {"code": code, "counts": status_counts(rows)}
    if code == EXIT_FAILED:
        logger.warning(f"❌ {status_counts(rows).get(FAIL, 0)} FAIL rows")
    else:
        logger.info(f"✅ Done: {status_counts(rows) or 'no verification rows'}")
    emit(report, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
