"""Merging recipe subgraphs into a deduplicated universal FOON."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import FoonGraph, FunctionalUnit, index_outputs


def unit_equals(a: FunctionalUnit, b: FunctionalUnit) -> bool:
    """True iff the units carry the same knowledge: equal input key multisets,
    motion name, and output key multisets. Motion timestamps are ignored."""
    return a == b


@dataclass(frozen=True)
class MergeResult:
    graph: FoonGraph
    kept: int
    dropped: int


def merge_subgraphs(subgraphs: Sequence[Sequence[FunctionalUnit]]) -> MergeResult:
    """Union subgraphs into one graph, first occurrence wins.

    Units are concatenated in the given order; any unit equal to an
    earlier-kept one is dropped. Duplicates across recipes are expected,
    not errors.
    """
    kept: list[FunctionalUnit] = []
    seen: set[FunctionalUnit] = set()
    dropped = 0
    for subgraph in subgraphs:
        for unit in subgraph:
            if unit in seen:
                dropped += 1
            else:
                seen.add(unit)
                kept.append(unit)
    return MergeResult(index_outputs(kept), len(kept), dropped)
