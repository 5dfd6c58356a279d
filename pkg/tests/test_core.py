import pytest
from hypothesis import given
from hypothesis import strategies as st

from foon.core import (
    DuplicateUnit,
    MotionNode,
    ObjectNode,
    find_candidate_units,
    index_outputs,
    object_key,
)
from helpers import build_graph, key_of, obj, unit

WORDS = ["cream", "bowl", "tomato", "salad", "feta", "knife", "sugar", "oil"]
STATES = ["raw", "whipped", "sliced", "mixed", "in [bowl]", "dirty", "empty"]


def test_object_key_identity():
    assert object_key(obj("cream", ["whipped"])) == key_of("cream", ["whipped"])


def test_object_key_ingredient_order_insensitive():
    a = obj("salad", ["mixed"], ["feta", "tomato"])
    b = obj("salad", ["mixed"], ["tomato", "feta"])
    assert object_key(a) == object_key(b)


def test_object_key_state_order_insensitive():
    a = obj("cream", ["whipped", "in [bowl]"])
    b = obj("cream", ["in [bowl]", "whipped"])
    assert object_key(a) == object_key(b)


def test_name_canonicalized():
    assert obj("  Cream ").name == "cream"
    with pytest.raises(ValueError):
        obj("   ")


def test_states_deduplicated_and_sorted():
    node = obj("cream", ["raw", "raw", "whipped"])
    assert node.states == ("raw", "whipped")


def test_lone_timestamp_is_start():
    motion = MotionNode("whip", None, "3:20")
    assert motion.start_time == "3:20"
    assert motion.end_time is None


def test_unit_needs_inputs_and_outputs():
    with pytest.raises(ValueError):
        unit([], "whip", ["cream"])
    with pytest.raises(ValueError):
        unit(["cream"], "whip", [])


def test_unit_equality_ignores_timestamps():
    a = unit(["cream"], "whip", ["whipped cream"], ts=("3:05", "3:20"))
    b = unit(["cream"], "whip", ["whipped cream"])
    assert a == b
    assert hash(a) == hash(b)


def test_unit_equality_respects_motion():
    assert unit(["cream"], "whip", ["x"]) != unit(["cream"], "pour", ["x"])


@given(
    states=st.lists(st.sampled_from(STATES), max_size=4),
    ingredients=st.lists(st.sampled_from(WORDS), max_size=4),
    seed=st.randoms(),
)
def test_key_permutation_invariance(states, ingredients, seed):
    shuffled_states = list(states)
    shuffled_ingredients = list(ingredients)
    seed.shuffle(shuffled_states)
    seed.shuffle(shuffled_ingredients)
    assert object_key(obj("thing", states, ingredients)) == object_key(
        obj("thing", shuffled_states, shuffled_ingredients)
    )


def test_index_empty():
    graph = index_outputs([])
    assert len(graph) == 0
    assert graph.output_index == {}


def test_index_single_producer():
    graph = build_graph([(["milk"], "pour", ["cream"])])
    assert graph.output_index[key_of("cream")] == (0,)


def test_index_two_producers_ascending():
    graph = build_graph(
        [
            (["milk"], "pour", ["cream"]),
            (["half and half"], "skim", ["cream"]),
        ]
    )
    assert find_candidate_units(graph, key_of("cream")) == (0, 1)


def test_index_rejects_duplicates():
    u = unit(["milk"], "pour", ["cream"])
    with pytest.raises(DuplicateUnit):
        index_outputs([u, u])


def test_find_candidates_absent_key():
    graph = build_graph([(["milk"], "pour", ["cream"])])
    assert find_candidate_units(graph, key_of("gold")) == ()


def test_find_candidates_sparse_positions():
    specs = [
        (["a"], "m", ["b"]),
        (["c"], "m", ["d"]),
        (["e"], "m", ["k"]),
        (["f"], "m", ["g"]),
        (["h"], "m", ["i"]),
        (["j"], "m2", ["k"]),
    ]
    graph = build_graph(specs)
    # verified by scanning outputs directly
    expect = tuple(
        pos for pos, u in enumerate(graph.units) if key_of("k") in u.output_keys()
    )
    assert expect == (2, 5)
    assert find_candidate_units(graph, key_of("k")) == (2, 5)


def test_index_sound_and_complete(corpus_graph):
    for pos, u in enumerate(corpus_graph.units):
        for out in u.output_keys():
            assert pos in find_candidate_units(corpus_graph, out)
    for key, positions in corpus_graph.output_index.items():
        for pos in positions:
            assert key in corpus_graph.units[pos].output_keys()


def test_whipped_cream_produced_only_by_whip(corpus_graph):
    goal = key_of("whipped cream", ["whipped"])
    brute = [
        pos
        for pos, u in enumerate(corpus_graph.units)
        if goal in u.output_keys()
    ]
    candidates = find_candidate_units(corpus_graph, goal)
    assert tuple(brute) == candidates
    assert len(candidates) == 1
    assert corpus_graph.units[candidates[0]].motion.name == "whip"
