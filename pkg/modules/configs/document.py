"""
JSON documents describing line configurations.

A coefficient is an int, a "p/q" string, or a list of those giving a
polynomial in the field generator, low degree first.
"""

import json
from fractions import Fraction
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..core.field import FieldDescriptor, FieldElement
from ..core.groupoid import Configuration
from ..core.projective import ParamLine, ProjPoint
from ..custom_errors import ConfigParseError, LineGroupoidError

Coefficient = Union[int, str, List[Union[int, str]]]


def _check_scalar(value: Union[int, str]) -> None:
    if isinstance(value, bool):
        raise ValueError("booleans are not coefficients")
    if isinstance(value, str):
        try:
            Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}")


class FieldEntry(BaseModel):
    min_poly: List[int] = Field(min_length=2)
    symbol: str = "t"


class LineEntry(BaseModel):
    basis: List[List[Coefficient]] = Field(min_length=2, max_length=2)

    @field_validator("basis")
    @classmethod
    def rows_match(cls, basis):
        if len(basis[0]) != len(basis[1]):
            raise ValueError("basis rows have different lengths")
        if len(basis[0]) < 4:
            raise ValueError("lines must live in P^3 or higher")
        for row in basis:
            for coeff in row:
                for scalar in (coeff if isinstance(coeff, list) else [coeff]):
                    _check_scalar(scalar)
        return basis


class ConfigDocument(BaseModel):
    name: str = "unnamed"
    field: FieldEntry
    lines: List[LineEntry] = Field(min_length=1)
    marked: Optional[List[List[List[Coefficient]]]] = None

    @field_validator("marked")
    @classmethod
    def pairs_only(cls, marked):
        if marked is None:
            return marked
        for points in marked:
            for pair in points:
                if len(pair) != 2:
                    raise ValueError("marked points are pairs of coefficients")
                for coeff in pair:
                    for scalar in (coeff if isinstance(coeff, list) else [coeff]):
                        _check_scalar(scalar)
        return marked


def _location(loc) -> str:
    return "$" + "".join(f"[{part}]" if isinstance(part, int) else f".{part}" for part in loc)


def _first_nonzero(values: List[FieldElement]) -> FieldElement:
    return next(v for v in values if not v.is_zero())


def parse_config(text: str) -> Configuration:
    """Build a Configuration from a JSON document.

    Basis rows are stored in canonical form; marked parameters are rescaled
    so that they still name the same ambient points.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigParseError(e.msg, location=f"line {e.lineno} column {e.colno}")
    try:
        doc = ConfigDocument.model_validate(raw)
    except ValidationError as e:
        err = e.errors()[0]
        raise ConfigParseError(err["msg"], location=_location(err["loc"]))

    try:
        field = FieldDescriptor(tuple(doc.field.min_poly), doc.field.symbol)
    except LineGroupoidError as e:
        raise ConfigParseError(str(e), location="$.field")

    lines: List[ParamLine] = []
    scales = []
    for idx, entry in enumerate(doc.lines):
        where = f"$.lines[{idx}].basis"
        try:
            rows = [[field.coerce(c) for c in row] for row in entry.basis]
            if any(all(c.is_zero() for c in row) for row in rows):
                raise ConfigParseError("basis row is the zero vector", location=where)
            lines.append(ParamLine(ProjPoint(rows[0]), ProjPoint(rows[1])))
        except ConfigParseError:
            raise
        except LineGroupoidError as e:
            raise ConfigParseError(str(e), location=where)
        scales.append((_first_nonzero(rows[0]), _first_nonzero(rows[1])))

    marked = None
    if doc.marked is not None:
        if len(doc.marked) != len(lines):
            raise ConfigParseError(f"expected {len(lines)} marked sets, found {len(doc.marked)}",
                                   location="$.marked")
        marked = []
        for idx, points in enumerate(doc.marked):
            lam0, lam1 = scales[idx]
            params = []
            for k, (a, b) in enumerate(points):
                try:
                    params.append(ProjPoint([field.coerce(a) * lam0, field.coerce(b) * lam1]))
                except LineGroupoidError as e:
                    raise ConfigParseError(str(e), location=f"$.marked[{idx}][{k}]")
            marked.append(params)

    try:
        return Configuration(field=field, lines=lines, marked=marked, name=doc.name)
    except LineGroupoidError as e:
        raise ConfigParseError(str(e), location="$")


def config_to_document(config: Configuration) -> ConfigDocument:
    field = config.field
    return ConfigDocument(
        name=config.name,
        field=FieldEntry(min_poly=list(field.min_poly), symbol=field.symbol),
        lines=[LineEntry(basis=line.to_json()) for line in config.lines],
        marked=[[p.to_json() for p in points] for points in config.marked]
        if config.marked is not None else None,
    )


def emit_config(config: Configuration) -> str:
    return config_to_document(config).model_dump_json(indent=2, exclude_none=True)


def load_config(path: str) -> Configuration:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise ConfigParseError(str(e), location=path)
    return parse_config(text)
