import time
from typing import Tuple

from modules.cli import functions, types
from modules.cli.verify import run_verification
from modules.config.settings import AnalysisConfig
from modules.core.groupoid import enumerate_generators, marked_invariance, orbit, vertex_group
from modules.core.groups import is_even, label_alias, stabilizer
from modules.core.p4ext import find_parabolic
from modules.configs import BUILTIN_REGISTRY
from modules.configs.builtins import PARAMETER_SETS, parameter_set
from modules.custom_errors import UnknownBuiltinError, UsageError
from modules.utils.logging import BaseLogger

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1


def cmd_analyze(args, settings: AnalysisConfig) -> Tuple[types.AnalyzeReport, int]:
    start = time.perf_counter()
    config = functions.load_configuration(args.builtin, args.config)
    BaseLogger.log_analysis_start(config.name, "analyze")
    analysis = enumerate_generators(config)

    if args.base is not None:
        config.check_index(args.base)
        components = [analysis.component_of(args.base)]
        bases = [args.base]
    else:
        components = analysis.components
        bases = [c[0] for c in components]

    groups = []
    parabolic = None
    for base, component in zip(bases, components):
        result = vertex_group(config, base, cap=settings.closure.cap, analysis=analysis)
        BaseLogger.log_group_result(result.label, result.order)
        groups.append(functions.group_report(result, base, component, settings))
        if not result.is_finite and config.ambient_dim == 4 and parabolic is None:
            witness = find_parabolic(analysis, base, config.field,
                                     max_word_length=settings.parabolic.max_word_length,
                                     candidate_limit=settings.parabolic.candidate_limit)
            parabolic = types.ParabolicSummary(found=witness is not None, **(witness.to_dict() if witness else {}))

    invariance = None
    if config.marked is not None:
        report = marked_invariance(config, analysis).to_dict()
        invariance = types.InvarianceSummary(**report)

    report = types.AnalyzeReport(
        configuration=config.name,
        field=str(config.field),
        lines=len(config.lines),
        simple_morphisms=len(analysis.generators),
        components=analysis.components,
        aux_counts=analysis.aux_summary(),
        vertex_groups=groups,
        marked_invariance=invariance,
        parabolic=parabolic,
        seconds=time.perf_counter() - start,
    )
    return report, EXIT_OK


def cmd_orbit(args, settings: AnalysisConfig) -> Tuple[types.OrbitReport, int]:
    start = time.perf_counter()
    config = functions.load_configuration(args.builtin, args.config)
    BaseLogger.log_analysis_start(config.name, "orbit")
    if args.line is None or args.point is None:
        raise UsageError("orbit needs --line and --point")
    point = functions.parse_point(args.point, config.field)
    result = orbit(config, args.line, point, member_cap=settings.orbit.member_cap)
    data = result.to_dict()
    report = types.OrbitReport(
        configuration=config.name,
        start_line=args.line,
        start_point=point.to_json(),
        count=data["count"],
        truncated=data["truncated"],
        members=data["members"],
        seconds=time.perf_counter() - start,
    )
    return report, EXIT_OK


def cmd_stabilizer(args, settings: AnalysisConfig) -> Tuple[types.StabilizerReport, int]:
    start = time.perf_counter()
    if (args.set is None) == (args.points is None):
        raise UsageError(f"stabilizer needs exactly one of --points and --set ({', '.join(PARAMETER_SETS)})")
    if args.set is not None:
        points = parameter_set(args.set)
    else:
        points = functions.parse_points(args.points, functions.resolve_field(args.field))
    BaseLogger.log_analysis_start(args.set or "inline points", "stabilizer")

    result = stabilizer(points)
    BaseLogger.log_group_result(result.label, result.order)
    data = result.to_dict(include_elements=functions.list_elements(result, settings))
    report = types.StabilizerReport(
        field=str(points[0].field),
        points=[p.to_json() for p in points],
        order=result.order,
        label=result.label,
        alias=label_alias(result.label),
        histogram=data["histogram"],
        even_permutations_only=all(is_even(p) for p in result.permutations),
        elements=data.get("elements"),
        permutations=data.get("permutations"),
        seconds=time.perf_counter() - start,
    )
    return report, EXIT_OK


def _criteria_numbers(text):
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"--only expects comma-separated criterion numbers, got '{text}'")


def cmd_verify(args, settings: AnalysisConfig) -> Tuple[types.VerifyReport, int]:
    start = time.perf_counter()
    if args.corrupt is not None and args.corrupt not in BUILTIN_REGISTRY:
        raise UnknownBuiltinError(f"Cannot corrupt unknown built-in '{args.corrupt}'")
    results = run_verification(settings, only=_criteria_numbers(args.only), corrupt=args.corrupt)
    criteria = [types.CriterionReport(**r.to_dict()) for r in results]
    passed = all(c.passed for c in criteria)
    report = types.VerifyReport(passed=passed, corrupted=args.corrupt, criteria=criteria,
                                seconds=time.perf_counter() - start)
    return report, EXIT_OK if passed else EXIT_VERIFY_FAILED


COMMANDS = {
    "analyze": (cmd_analyze, functions.render_analyze),
    "orbit": (cmd_orbit, functions.render_orbit),
    "stabilizer": (cmd_stabilizer, functions.render_stabilizer),
    "verify": (cmd_verify, functions.render_verify),
}
