"""Domain types for FOON graphs: objects, motions, functional units, and the
indexed universal graph.

Everything here is immutable after construction and hashable where identity
matters, so graphs and kitchens can be shared freely between concurrent
retrievals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence


class FoonError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateUnit(FoonError):
    """Two equal functional units were passed where a deduplicated list was
    expected."""


@dataclass(frozen=True, order=True)
class ObjectKey:
    """Canonical identity of an object: name, sorted states, sorted ingredients.

    Two object nodes denote the same kitchen item iff their keys are equal.
    """

    name: str
    states: tuple[str, ...]
    ingredients: tuple[str, ...]

    def __str__(self) -> str:
        parts = self.name
        if self.states:
            parts += "{" + ",".join(self.states) + "}"
        if self.ingredients:
            parts += "[" + ",".join(self.ingredients) + "]"
        return parts


class ObjectNode:
    """An object with its state set and ingredient list.

    The constructor canonicalizes: the name is trimmed and lowercased, states
    are deduplicated and sorted, ingredients are sorted (duplicates kept --
    multiset semantics).
    """

    __slots__ = ("name", "states", "ingredients")

    def __init__(
        self,
        name: str,
        states: Iterable[str] = (),
        ingredients: Iterable[str] = (),
    ):
        name = name.strip().lower()
        if not name:
            raise ValueError("object name must be non-empty")
        object.__setattr__(self, "name", name)
        object.__setattr__(
            self, "states", tuple(sorted({s.strip().lower() for s in states if s.strip()}))
        )
        object.__setattr__(
            self, "ingredients", tuple(sorted(i.strip().lower() for i in ingredients if i.strip()))
        )

    def __setattr__(self, *_):
        raise AttributeError("ObjectNode is immutable")

    def __repr__(self) -> str:
        return f"ObjectNode({self.name!r}, states={list(self.states)}, ingredients={list(self.ingredients)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ObjectNode):
            return NotImplemented
        return object_key(self) == object_key(other)

    def __hash__(self) -> int:
        return hash(object_key(self))


def object_key(node: ObjectNode) -> ObjectKey:
    """Derive the canonical :class:`ObjectKey` for an object node."""
    return ObjectKey(node.name, node.states, node.ingredients)


@dataclass(frozen=True)
class MotionNode:
    """A named manipulation action with optional annotation timestamps.

    Timestamps are carried through parsing and writing but never influence
    unit equality or retrieval.
    """

    name: str
    start_time: Optional[str] = None
    end_time: Optional[str] = None

    def __post_init__(self):
        name = self.name.strip().lower()
        if not name:
            raise ValueError("motion name must be non-empty")
        object.__setattr__(self, "name", name)
        if self.start_time is None and self.end_time is not None:
            # a lone timestamp is always the start
            object.__setattr__(self, "start_time", self.end_time)
            object.__setattr__(self, "end_time", None)


class FunctionalUnit:
    """Input objects + one motion + output objects; the atom of FOON knowledge.

    Equality compares input/output key multisets and the motion name;
    timestamps are ignored.
    """

    __slots__ = ("inputs", "motion", "outputs")

    def __init__(
        self,
        inputs: Sequence[ObjectNode],
        motion: MotionNode,
        outputs: Sequence[ObjectNode],
    ):
        if not inputs:
            raise ValueError("functional unit needs at least one input")
        if not outputs:
            raise ValueError("functional unit needs at least one output")
        object.__setattr__(self, "inputs", tuple(inputs))
        object.__setattr__(self, "motion", motion)
        object.__setattr__(self, "outputs", tuple(outputs))

    def __setattr__(self, *_):
        raise AttributeError("FunctionalUnit is immutable")

    def input_keys(self) -> tuple[ObjectKey, ...]:
        return tuple(object_key(o) for o in self.inputs)

    def output_keys(self) -> tuple[ObjectKey, ...]:
        return tuple(object_key(o) for o in self.outputs)

    def _identity(self) -> tuple:
        return (
            tuple(sorted(self.input_keys())),
            self.motion.name,
            tuple(sorted(self.output_keys())),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FunctionalUnit):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self) -> int:
        return hash(self._identity())

    def __repr__(self) -> str:
        ins = ", ".join(str(k) for k in self.input_keys())
        outs = ", ".join(str(k) for k in self.output_keys())
        return f"<FunctionalUnit [{ins}] -{self.motion.name}-> [{outs}]>"


class FoonGraph:
    """Deduplicated, order-preserving collection of functional units with an
    index from output key to producing unit positions.

    Unit positions in ``units`` are the stable identifiers used everywhere
    else (task tree steps, decision logs, DOT node ids).
    """

    __slots__ = ("units", "output_index")

    def __init__(self, units: Sequence[FunctionalUnit], output_index: dict):
        object.__setattr__(self, "units", tuple(units))
        object.__setattr__(self, "output_index", dict(output_index))

    def __setattr__(self, *_):
        raise AttributeError("FoonGraph is immutable")

    def __len__(self) -> int:
        return len(self.units)


def index_outputs(units: Sequence[FunctionalUnit]) -> FoonGraph:
    """Build a :class:`FoonGraph` from an already-deduplicated unit list.

    Raises :class:`DuplicateUnit` if two equal units are passed; use
    :func:`foon.merge.merge_subgraphs` to deduplicate first.
    """
    seen = set()
    index: dict[ObjectKey, list[int]] = {}
    for pos, unit in enumerate(units):
        if unit in seen:
            raise DuplicateUnit(f"unit {pos} duplicates an earlier unit: {unit!r}")
        seen.add(unit)
        for key in unit.output_keys():
            index.setdefault(key, []).append(pos)
    return FoonGraph(units, {k: tuple(v) for k, v in index.items()})


def find_candidate_units(graph: FoonGraph, needed: ObjectKey) -> tuple[int, ...]:
    """Units whose outputs contain ``needed``, in ascending position order."""
    return graph.output_index.get(needed, ())


@dataclass(frozen=True)
class Kitchen:
    """The set of object keys assumed available before execution."""

    items: frozenset[ObjectKey]

    @classmethod
    def of(cls, keys: Iterable[ObjectKey]) -> "Kitchen":
        return cls(frozenset(keys))

    def __contains__(self, key: ObjectKey) -> bool:
        return key in self.items


@dataclass(frozen=True)
class GoalSpec:
    """A retrieval target, canonicalized like any other object."""

    target: ObjectKey


class Algorithm(Enum):
    IDS = "ids"
    GBFS_H1 = "gbfs1"
    GBFS_H2 = "gbfs2"


@dataclass(frozen=True)
class Decision:
    """One GBFS choice point: which candidate was taken for a needed key,
    out of the candidates still alive at that point."""

    needed: ObjectKey
    candidates: tuple[int, ...]
    chosen: int
    scores: tuple[float, ...]

    def __post_init__(self):
        if self.chosen not in self.candidates:
            raise ValueError("chosen unit must be among the candidates")
        if len(self.scores) != len(self.candidates):
            raise ValueError("one score per candidate")


@dataclass
class SearchStats:
    """Instrumentation gathered during one retrieval run."""

    algorithm: Algorithm
    units_expanded: int = 0
    candidate_evaluations: int = 0
    final_depth_bound: Optional[int] = None
    decision_log: list[Decision] = field(default_factory=list)


@dataclass(frozen=True)
class TaskTree:
    """Execution-ordered unit positions extracted for a goal, plus stats."""

    steps: tuple[int, ...]
    stats: SearchStats


def validate_task_tree(
    graph: FoonGraph, kitchen: Kitchen, goal: GoalSpec, tree: TaskTree
) -> None:
    """Independent executability check; raises ValueError on any violation.

    Replays the steps in order, confirming that every input of every step is
    either in the kitchen or produced by an earlier step, that no step
    repeats, and that the goal comes out of the final step (or was already in
    the kitchen for an empty tree).
    """
    if len(set(tree.steps)) != len(tree.steps):
        raise ValueError("task tree repeats a unit")
    available = set(kitchen.items)
    for pos in tree.steps:
        unit = graph.units[pos]
        for key in unit.input_keys():
            if key not in available:
                raise ValueError(f"step {pos} needs {key} which is not available")
        available.update(unit.output_keys())
    if not tree.steps:
        if goal.target not in kitchen:
            raise ValueError("empty task tree but goal not in kitchen")
    else:
        final = graph.units[tree.steps[-1]]
        if goal.target not in final.output_keys():
            raise ValueError("final step does not produce the goal")
