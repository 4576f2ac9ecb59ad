import json
import os
import re
from tokenize import TokenError
from typing import List, Optional

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from modules.config.settings import AnalysisConfig
from modules.configs import builtin
from modules.configs.document import load_config
from modules.core.field import CYCLOTOMIC5, EISENSTEIN, GAUSSIAN, RATIONALS, FieldDescriptor, FieldElement
from modules.core.groupoid import Configuration
from modules.core.groups import label_alias
from modules.core.projective import ProjPoint
from modules.custom_errors import LineGroupoidError, UsageError
from modules.models.models import GroupResult
from modules.cli.types import AnalyzeReport, GroupReport, OrbitReport, StabilizerReport, VerifyReport

FIELDS = {
    "rationals": RATIONALS,
    "eisenstein": EISENSTEIN,
    "gaussian": GAUSSIAN,
    "cyclotomic5": CYCLOTOMIC5,
}


def resolve_field(name: str) -> FieldDescriptor:
    try:
        return FIELDS[name]
    except KeyError:
        raise UsageError(f"Unknown field '{name}'; choose from {', '.join(FIELDS)}")


def load_configuration(builtin_name: Optional[str], config_path: Optional[str]) -> Configuration:
    if (builtin_name is None) == (config_path is None):
        raise UsageError("Exactly one of --builtin and --config is required")
    if builtin_name is not None:
        return builtin(builtin_name)
    return load_config(config_path)


# --- coefficient parsing ---

def parse_scalar(text: str, field: FieldDescriptor) -> FieldElement:
    """A rational expression in the field generator, e.g. '2*t+1', '-t^2', '1/2'"""
    text = text.strip()
    # only digits, the generator, arithmetic and parentheses reach the parser
    if not text or not re.fullmatch(rf"(?:[0-9\s+\-*/^()]|{re.escape(field.symbol)}\b)+", text):
        raise UsageError(f"Cannot read coefficient '{text}': expected a rational expression in {field.symbol}")
    gen = sympy.Symbol(field.symbol)
    try:
        expr = parse_expr(text, local_dict={field.symbol: gen},
                          global_dict={"__builtins__": {}, "Integer": sympy.Integer, "Rational": sympy.Rational},
                          transformations=standard_transformations + (convert_xor,))
        num, den = sympy.fraction(sympy.together(expr))
        parts = []
        for poly in (sympy.Poly(num, gen), sympy.Poly(den, gen)):
            coeffs = [sympy.Rational(c) for c in reversed(poly.all_coeffs())]
            parts.append(field.element([f"{c.p}/{c.q}" for c in coeffs]))
        return parts[0] / parts[1]
    except (SyntaxError, TokenError, sympy.PolynomialError, TypeError, ValueError, ZeroDivisionError) as e:
        raise UsageError(f"Cannot read coefficient '{text}': {e}")


def parse_point(text: str, field: FieldDescriptor) -> ProjPoint:
    entries = text.split(",")
    if len(entries) != 2:
        raise UsageError(f"A point of P^1 needs two comma-separated entries, got '{text}'")
    try:
        return ProjPoint([parse_scalar(s, field) for s in entries])
    except UsageError:
        raise
    except LineGroupoidError as e:
        raise UsageError(f"Invalid point '{text}': {e}")


def parse_points(text: str, field: FieldDescriptor) -> List[ProjPoint]:
    """Points inline as 'a,b;c,d;...' or a JSON file holding a list of coefficient pairs"""
    if os.path.isfile(text):
        with open(text, "r", encoding="utf-8") as handle:
            try:
                pairs = json.load(handle)
                return [ProjPoint.of(field, pair) for pair in pairs]
            except (json.JSONDecodeError, TypeError, ValueError, LineGroupoidError) as e:
                raise UsageError(f"Cannot read points from {text}: {e}")
    return [parse_point(chunk, field) for chunk in text.split(";") if chunk.strip()]


# --- report pieces ---

def list_elements(result: GroupResult, settings: AnalysisConfig) -> bool:
    if settings.output.force_elements:
        return True
    return result.is_finite and result.order <= settings.output.element_listing_threshold


def group_report(result: GroupResult, base: int, component: List[int],
                 settings: AnalysisConfig) -> GroupReport:
    data = result.to_dict(include_elements=list_elements(result, settings))
    return GroupReport(
        base=base,
        component=component,
        order=result.order,
        label=result.label,
        alias=label_alias(result.label),
        histogram=data["histogram"],
        cap=result.cap,
        elements=data.get("elements"),
    )


# --- text rendering ---

def _label_text(label: str, alias: Optional[str]) -> str:
    return f"{label} (= {alias})" if alias else label


def render_analyze(report: AnalyzeReport) -> str:
    out = [
        f"Configuration: {report.configuration} over {report.field}",
        f"Lines: {report.lines}  Simple morphisms: {report.simple_morphisms}",
        f"Auxiliary lines per ordered pair: min {report.aux_counts['min']}, max {report.aux_counts['max']}",
        f"Components: {' | '.join(' '.join(str(v) for v in c) for c in report.components)}",
    ]
    for group in report.vertex_groups:
        if group.order is None:
            out.append(f"Vertex group at line {group.base}: Infinite (closure exceeded cap {group.cap})")
        else:
            hist = ", ".join(f"{k}:{v}" for k, v in group.histogram.items())
            out.append(f"Vertex group at line {group.base}: {_label_text(group.label, group.alias)}, "
                       f"order {group.order}, element orders {{{hist}}}")
        for m in group.elements or []:
            out.append(f"    {json.dumps(m)}")
    if report.marked_invariance is not None:
        verdict = "holds" if report.marked_invariance.holds else "fails"
        out.append(f"Marked-point invariance {verdict} "
                   f"({report.marked_invariance.checked} morphisms checked)")
        if report.marked_invariance.counterexample:
            out.append(f"    counterexample: {json.dumps(report.marked_invariance.counterexample)}")
    if report.parabolic is not None:
        if report.parabolic.found:
            out.append(f"Parabolic element {json.dumps(report.parabolic.matrix)} "
                       f"from word {report.parabolic.word}")
        else:
            out.append("No parabolic element among the searched words")
    out.append(f"Time: {report.seconds:.2f}s")
    return "\n".join(out)


def render_orbit(report: OrbitReport) -> str:
    out = [
        f"Orbit of {json.dumps(report.start_point)} on line {report.start_line} in {report.configuration}",
        f"Members: {report.count}{' (truncated)' if report.truncated else ''}",
    ]
    for line, points in report.members.items():
        out.append(f"  line {line}: " + "  ".join(json.dumps(p) for p in points))
    out.append(f"Time: {report.seconds:.2f}s")
    return "\n".join(out)


def render_stabilizer(report: StabilizerReport) -> str:
    hist = ", ".join(f"{k}:{v}" for k, v in report.histogram.items())
    out = [
        f"Stabilizer of {len(report.points)} points over {report.field}",
        f"Order {report.order}: {_label_text(report.label, report.alias)}, element orders {{{hist}}}",
        f"Only even permutations: {'yes' if report.even_permutations_only else 'no'}",
    ]
    for k, m in enumerate(report.elements or []):
        perm = report.permutations[k] if report.permutations else None
        out.append(f"    {json.dumps(m)}" + (f"  permutes as {perm}" if perm else ""))
    out.append(f"Time: {report.seconds:.2f}s")
    return "\n".join(out)


def render_verify(report: VerifyReport) -> str:
    out = []
    for c in report.criteria:
        mark = "PASS" if c.passed else "FAIL"
        out.append(f"[{mark}] {c.number:2d}. {c.name} ({c.seconds:.1f}s)")
        if not c.passed:
            out.append(f"       expected: {c.expected}")
            out.append(f"       actual:   {c.actual}")
        for note in c.notes:
            out.append(f"       note: {note}")
    passed = sum(1 for c in report.criteria if c.passed)
    out.append(f"{passed}/{len(report.criteria)} criteria passed in {report.seconds:.1f}s")
    return "\n".join(out)
