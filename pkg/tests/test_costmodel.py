import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqsurprise.costmodel import (
    CostModel,
    DEFAULT_MODEL,
    aggregate_cost,
    digit_complexity,
    model_from_config_text,
    model_to_config_text,
    number_complexity,
)

LOG2_10 = math.log2(10)


def test_number_complexity_known_values():
    assert number_complexity(0) == 0.0
    assert number_complexity(9) == pytest.approx(LOG2_10)
    assert number_complexity(33333) == pytest.approx(math.log2(33334))


def test_number_complexity_rejects_negative():
    with pytest.raises(ValueError):
        number_complexity(-1)


@given(st.integers(min_value=0, max_value=10**9))
def test_number_complexity_strictly_increasing(n):
    assert number_complexity(n + 1) > number_complexity(n)


@pytest.mark.parametrize("k", range(0, 31))
def test_number_complexity_exact_at_powers(k):
    # log2((2**k - 1) + 1) must come out as the integer k, no rounding slack
    assert number_complexity(2**k - 1) == float(k)


def test_digit_complexity_known_values():
    assert digit_complexity(3) == 2.0
    assert digit_complexity(1) == 1.0
    assert digit_complexity(0) == 0.0
    assert digit_complexity(0, previous_digit=9) == 3.5
    assert digit_complexity(0, previous_digit=8) == 0.0
    assert digit_complexity(9, previous_digit=9) == pytest.approx(LOG2_10)


@pytest.mark.parametrize("bad", [-1, 10, 42])
def test_digit_complexity_range_check(bad):
    with pytest.raises(ValueError):
        digit_complexity(bad)
    with pytest.raises(ValueError):
        digit_complexity(1, previous_digit=bad)


@given(st.integers(min_value=0, max_value=9),
       st.one_of(st.none(), st.integers(min_value=0, max_value=9)))
def test_digit_complexity_bounded(d, prev):
    cap = max(LOG2_10, DEFAULT_MODEL.zero_after_nine_cost)
    assert 0.0 <= digit_complexity(d, prev) <= cap


def test_aggregate_cost_is_addition():
    assert aggregate_cost(0.0, 0.0) == 0.0
    assert aggregate_cost(2.0, 1.0) == 3.0
    assert aggregate_cost(LOG2_10, 1.0) == pytest.approx(LOG2_10 + 1.0)


@given(st.floats(min_value=0, max_value=1e6),
       st.floats(min_value=0, max_value=1e6),
       st.floats(min_value=0, max_value=1e6))
def test_aggregate_cost_commutes_and_associates(a, b, c):
    assert aggregate_cost(a, b) == aggregate_cost(b, a)
    assert aggregate_cost(aggregate_cost(a, b), c) == pytest.approx(
        aggregate_cost(a, aggregate_cost(b, c)))


def test_aggregate_cost_rejects_negative_and_nan():
    with pytest.raises(ValueError):
        aggregate_cost(-1.0, 0.0)
    with pytest.raises(ValueError):
        aggregate_cost(0.0, float("nan"))


def test_default_model_convention():
    # duplication priced like copy, +k priced like the number k
    assert DEFAULT_MODEL.dup_cost == DEFAULT_MODEL.copy_cost
    for k in (1, 2, 3):
        assert DEFAULT_MODEL.increment_cost(k) == number_complexity(k)


def test_model_validation():
    with pytest.raises(ValueError):
        CostModel(copy_cost=-0.5)
    with pytest.raises(ValueError):
        CostModel(mirror_cost=float("nan"))
    with pytest.raises(ValueError):
        CostModel(stm_capacity=-1)
    with pytest.raises(ValueError):
        CostModel(allowed_increments=frozenset())
    with pytest.raises(ValueError):
        CostModel(allowed_increments=frozenset({0, 1}))
    with pytest.raises(ValueError):
        CostModel(increment_cost_overrides=((1, -2.0),))


def test_model_is_frozen():
    with pytest.raises(AttributeError):
        DEFAULT_MODEL.copy_cost = 2.0


def test_increment_cost_overrides():
    model = CostModel(increment_cost_overrides=((2, 0.25),))
    assert model.increment_cost(2) == 0.25
    assert model.increment_cost(1) == 1.0
    with pytest.raises(ValueError):
        model.increment_cost(0)


def test_config_round_trip_default():
    assert model_from_config_text(model_to_config_text(DEFAULT_MODEL)) == DEFAULT_MODEL


def test_config_round_trip_custom():
    model = CostModel(copy_cost=0.75, stm_capacity=2,
                      allowed_increments=frozenset({1, 3}),
                      increment_cost_overrides=((3, 0.5),))
    assert model_from_config_text(model_to_config_text(model)) == model


def test_config_partial_and_comments():
    model = model_from_config_text(
        "# override one constant\ncopy_cost = 2.0\n\nstm_capacity=3\n")
    assert model.copy_cost == 2.0
    assert model.stm_capacity == 3
    assert model.dup_cost == DEFAULT_MODEL.dup_cost


def test_config_unknown_key_is_hard_error():
    with pytest.raises(ValueError, match="line 2.*copy_costt"):
        model_from_config_text("copy_cost = 1.0\ncopy_costt = 2.0\n")


def test_config_bad_value_names_line():
    with pytest.raises(ValueError, match="line 1"):
        model_from_config_text("copy_cost = two\n")
    with pytest.raises(ValueError, match="line 1"):
        model_from_config_text("just words\n")


@settings(max_examples=50)
@given(st.floats(min_value=0.0, max_value=16.0),
       st.integers(min_value=0, max_value=9),
       st.sets(st.integers(min_value=1, max_value=9), min_size=1, max_size=4))
def test_config_round_trip_property(copy_cost, cap, incs):
    model = CostModel(copy_cost=copy_cost, stm_capacity=cap,
                      allowed_increments=frozenset(incs))
    assert model_from_config_text(model_to_config_text(model)) == model
