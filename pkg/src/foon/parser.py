"""Parsers and writers for the on-disk formats.

Four formats live here:

* subgraph files (``.foon.txt``): line-oriented, tab-separated.
  ``O<TAB>name`` starts an object; ``S<TAB>state`` and ``I<TAB>ingredient``
  lines attach to it; ``M<TAB>motion[<TAB>start[<TAB>end]]`` closes the input
  section and starts the outputs; ``//`` on its own line ends the unit.
  ``#`` lines are comments, blank lines are ignored.
* ``motion.txt``: one ``motion-name<TAB>rate`` per line, rate in [0, 1].
* ``goal_nodes.json`` / ``kitchen.json``: a JSON array of objects with
  fields ``object`` (required), ``states`` and ``ingredients`` (optional).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Sequence

from .core import (
    FoonError,
    FunctionalUnit,
    GoalSpec,
    Kitchen,
    MotionNode,
    ObjectNode,
    object_key,
)


class ParseError(FoonError):
    """A malformed line in one of the text formats."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class SchemaError(FoonError):
    """A missing or ill-typed field in a JSON goal/kitchen file."""

    def __init__(self, field: str, message: str = ""):
        super().__init__(f"field '{field}'" + (f": {message}" if message else ""))
        self.field = field


class ParseWarning(UserWarning):
    """Non-fatal oddity in an input file (duplicate entries etc.)."""


@dataclass(frozen=True)
class MotionRateTable:
    """Motion name -> success rate in [0, 1]."""

    rates: dict

    def get(self, motion_name: str, default: float = 0.0) -> float:
        return self.rates.get(motion_name, default)


EMPTY_RATES = MotionRateTable({})


def parse_subgraph(text: str) -> list[FunctionalUnit]:
    """Parse a subgraph file into its functional units, in file order."""
    units: list[FunctionalUnit] = []

    # per-unit parse state
    inputs: list[ObjectNode] = []
    outputs: list[ObjectNode] = []
    motion: MotionNode | None = None
    current: dict | None = None  # name/states/ingredients of the open object
    unit_open = False
    last_line_no = 0

    def close_object():
        nonlocal current
        if current is not None:
            node = ObjectNode(current["name"], current["states"], current["ingredients"])
            (outputs if motion is not None else inputs).append(node)
            current = None

    def close_unit(line_no: int):
        nonlocal inputs, outputs, motion, unit_open
        close_object()
        if motion is None:
            raise ParseError(line_no, "unit terminated without a motion line")
        if not inputs:
            raise ParseError(line_no, "unit has no input objects")
        if not outputs:
            raise ParseError(line_no, "unit has no output objects")
        units.append(FunctionalUnit(inputs, motion, outputs))
        inputs, outputs, motion, unit_open = [], [], None, False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line_no = line_no
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line.strip() == "//":
            close_unit(line_no)
            continue
        fields = line.split("\t")
        tag = fields[0]
        if tag == "O":
            if len(fields) != 2 or not fields[1].strip():
                raise ParseError(line_no, "O line needs exactly one name field")
            close_object()
            unit_open = True
            current = {"name": fields[1], "states": [], "ingredients": []}
        elif tag == "S":
            if current is None:
                raise ParseError(line_no, "S line without a preceding O line")
            if len(fields) != 2 or not fields[1].strip():
                raise ParseError(line_no, "S line needs exactly one state field")
            current["states"].append(fields[1])
        elif tag == "I":
            if current is None:
                raise ParseError(line_no, "I line without a preceding O line")
            if len(fields) != 2 or not fields[1].strip():
                raise ParseError(line_no, "I line needs exactly one ingredient field")
            current["ingredients"].append(fields[1])
        elif tag == "M":
            if not unit_open:
                raise ParseError(line_no, "M line before any object in the unit")
            if motion is not None:
                raise ParseError(line_no, "second M line in one unit")
            if len(fields) < 2 or len(fields) > 4 or not fields[1].strip():
                raise ParseError(line_no, "M line needs a motion name and at most two timestamps")
            close_object()
            if not inputs:
                raise ParseError(line_no, "unit has no input objects")
            start = fields[2] if len(fields) > 2 else None
            end = fields[3] if len(fields) > 3 else None
            motion = MotionNode(fields[1], start, end)
        else:
            raise ParseError(line_no, f"unknown line tag {tag!r}")

    if unit_open or current is not None or motion is not None:
        raise ParseError(last_line_no + 1, "unexpected end of file: unit missing '//' terminator")
    return units


def write_subgraph(units: Sequence[FunctionalUnit]) -> str:
    """Serialize units to the subgraph format; inverse of :func:`parse_subgraph`."""
    lines: list[str] = []

    def emit_object(node: ObjectNode):
        lines.append(f"O\t{node.name}")
        for state in node.states:
            lines.append(f"S\t{state}")
        for ingredient in node.ingredients:
            lines.append(f"I\t{ingredient}")

    for unit in units:
        for node in unit.inputs:
            emit_object(node)
        motion_line = f"M\t{unit.motion.name}"
        if unit.motion.start_time is not None:
            motion_line += f"\t{unit.motion.start_time}"
            if unit.motion.end_time is not None:
                motion_line += f"\t{unit.motion.end_time}"
        lines.append(motion_line)
        for node in unit.outputs:
            emit_object(node)
        lines.append("//")
    return "".join(line + "\n" for line in lines)


def parse_motion_rates(text: str) -> MotionRateTable:
    """Parse a ``motion.txt`` success-rate table."""
    rates: dict[str, float] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.rstrip("\n").split("\t")
        if len(fields) != 2:
            raise ParseError(line_no, "expected motion-name<TAB>rate")
        name = fields[0].strip().lower()
        if not name:
            raise ParseError(line_no, "empty motion name")
        try:
            rate = float(fields[1])
        except ValueError:
            raise ParseError(line_no, f"non-numeric rate {fields[1]!r}") from None
        if not 0.0 <= rate <= 1.0:
            raise ParseError(line_no, f"rate {rate} outside [0, 1]")
        if name in rates:
            warnings.warn(ParseWarning(f"line {line_no}: duplicate rate for {name!r} overrides earlier value"))
        rates[name] = rate
    return MotionRateTable(rates)


def _parse_object_entries(text: str) -> list[ObjectNode]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, list):
        raise SchemaError("<root>", "expected a JSON array")
    nodes = []
    for pos, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise SchemaError(f"[{pos}]", "expected an object")
        if "object" not in entry:
            raise SchemaError("object", f"missing in entry {pos}")
        name = entry["object"]
        if not isinstance(name, str) or not name.strip():
            raise SchemaError("object", f"must be a non-empty string in entry {pos}")
        states = entry.get("states", [])
        ingredients = entry.get("ingredients", [])
        for field_name, value in (("states", states), ("ingredients", ingredients)):
            if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
                raise SchemaError(field_name, f"must be a list of strings in entry {pos}")
        nodes.append(ObjectNode(name, states, ingredients))
    return nodes


def parse_goal_nodes(text: str) -> list[GoalSpec]:
    """Parse ``goal_nodes.json`` into goal specs, in file order."""
    return [GoalSpec(object_key(node)) for node in _parse_object_entries(text)]


def parse_kitchen(text: str) -> Kitchen:
    """Parse ``kitchen.json``; duplicate items collapse with a warning."""
    keys = []
    seen = set()
    for node in _parse_object_entries(text):
        key = object_key(node)
        if key in seen:
            warnings.warn(ParseWarning(f"duplicate kitchen item {key} collapsed"))
            continue
        seen.add(key)
        keys.append(key)
    return Kitchen.of(keys)
