"""FOON task tree retrieval: recipe subgraph parsing, merging, and
goal-directed knowledge retrieval with IDS and GBFS."""

from .core import (
    Algorithm,
    Decision,
    DuplicateUnit,
    FoonError,
    FoonGraph,
    FunctionalUnit,
    GoalSpec,
    Kitchen,
    MotionNode,
    ObjectKey,
    ObjectNode,
    SearchStats,
    TaskTree,
    find_candidate_units,
    index_outputs,
    object_key,
    validate_task_tree,
)
from .export import to_dot, write_task_tree
from .merge import MergeResult, merge_subgraphs, unit_equals
from .oracle import TooLarge, enumerate_resolutions, minimal_depth, minimal_units
from .parser import (
    MotionRateTable,
    ParseError,
    ParseWarning,
    SchemaError,
    parse_goal_nodes,
    parse_kitchen,
    parse_motion_rates,
    parse_subgraph,
    write_subgraph,
)
from .retrieval import (
    CyclicResolution,
    HeuristicId,
    UnresolvableGoal,
    execution_order,
    heuristic_input_count,
    heuristic_success_rate,
    retrieve_gbfs,
    retrieve_ids,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "CyclicResolution",
    "Decision",
    "DuplicateUnit",
    "FoonError",
    "FoonGraph",
    "FunctionalUnit",
    "GoalSpec",
    "HeuristicId",
    "Kitchen",
    "MergeResult",
    "MotionNode",
    "MotionRateTable",
    "ObjectKey",
    "ObjectNode",
    "ParseError",
    "ParseWarning",
    "SchemaError",
    "SearchStats",
    "TaskTree",
    "TooLarge",
    "UnresolvableGoal",
    "enumerate_resolutions",
    "execution_order",
    "find_candidate_units",
    "heuristic_input_count",
    "heuristic_success_rate",
    "index_outputs",
    "merge_subgraphs",
    "minimal_depth",
    "minimal_units",
    "object_key",
    "parse_goal_nodes",
    "parse_kitchen",
    "parse_motion_rates",
    "parse_subgraph",
    "retrieve_gbfs",
    "retrieve_ids",
    "to_dot",
    "unit_equals",
    "validate_task_tree",
    "write_subgraph",
    "write_task_tree",
]
