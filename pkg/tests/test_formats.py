import pytest
from hypothesis import given, settings

from scpkit import (
    GeneratorConfig,
    Instance,
    ParseError,
    classical_greedy,
    generate_instance,
    is_feasible,
    parse_instance,
    parse_orlib_scp,
    serialize_instance,
    validate_cover,
)

from helpers import families, to_instance


def test_serialize_one_set():
    assert serialize_instance(Instance.from_memberships(3, [[0, 2]])) == "3 1\n2 0 2\n"


def test_serialize_empty_set():
    assert serialize_instance(Instance.from_memberships(2, [[]])) == "2 1\n0\n"


def test_serialize_worked_example(example1):
    lines = serialize_instance(example1).splitlines()
    assert lines[0] == "10 5"
    assert lines[1] == "6 0 1 2 3 4 5"
    assert len(lines) == 6


def test_parse_inverse_of_serialize():
    inst = parse_instance("3 1\n2 0 2\n")
    assert inst == Instance.from_memberships(3, [[0, 2]])


def test_parse_tolerates_extra_whitespace():
    inst = parse_instance("\n  3   2 \n\n 2  0 2\n1 1\n\n")
    assert inst == Instance.from_memberships(3, [[0, 2], [1]])


def test_parse_reports_out_of_range_with_line():
    with pytest.raises(ParseError) as err:
        parse_instance("3 1\n2 0 5\n")
    assert str(err.value) == "element 5 out of range at line 2"
    assert err.value.line == 2


def test_parse_error_cases():
    cases = [
        ("", "empty input"),
        ("3\n", "malformed header"),
        ("3 1 9\n", "malformed header"),
        ("0 1\n1 0\n", "malformed header"),
        ("x 1\n", "invalid integer"),
        ("3 2\n1 0\n", "truncated set list"),
        ("3 1\n2 0\n", "truncated set list"),
        ("3 1\n1 0 1\n", "expected 1 elements, found 2"),
        ("3 1\n-1\n", "negative cardinality"),
        ("3 1\n2 0 0\n", "duplicate element 0"),
        ("3 1\n1 0\n1 1\n", "trailing content"),
        ("3 1\n1 z\n", "invalid integer 'z'"),
    ]
    for text, fragment in cases:
        with pytest.raises(ParseError, match=fragment):
            parse_instance(text)


def test_parse_error_line_numbers_count_blank_lines():
    with pytest.raises(ParseError) as err:
        parse_instance("2 1\n\n\n1 9\n")
    assert err.value.line == 4


@given(families(max_n=18, max_m=6))
@settings(max_examples=150)
def test_native_round_trip(nf):
    inst = to_instance(*nf)
    assert parse_instance(serialize_instance(inst)) == inst


def test_native_round_trip_on_generated_instances():
    config = GeneratorConfig(n=100, m=20, q=0.3, seed=404)
    for i in range(30):
        inst = generate_instance(config, i)
        assert parse_instance(serialize_instance(inst)) == inst


def test_orlib_transposes_rows_into_column_sets():
    # 2 rows, 2 columns; row 1 covered by column 1, row 2 by both columns
    text = "2 2\n1 1\n1 1\n2 1 2\n"
    inst = parse_orlib_scp(text)
    assert inst == Instance.from_memberships(2, [[0, 1], [1]])


def test_orlib_accepts_arbitrary_line_wrapping():
    wrapped = "2 2 1 1\n1\n1 2 1\n2"
    assert parse_orlib_scp(wrapped) == parse_orlib_scp("2 2\n1 1\n1 1\n2 1 2\n")


def test_orlib_rejects_zero_rows():
    with pytest.raises(ParseError, match="zero rows"):
        parse_orlib_scp("0 5\n")
    with pytest.raises(ParseError, match="zero columns"):
        parse_orlib_scp("5 0\n")


def test_orlib_warns_on_non_unit_costs():
    text = "2 2\n3 1\n1 1\n1 2\n"
    with pytest.warns(UserWarning, match="non-unit"):
        inst = parse_orlib_scp(text)
    assert inst.m == 2


def test_orlib_unit_costs_do_not_warn():
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_orlib_scp("1 2\n1 1\n2 1 2\n")


def test_orlib_error_cases():
    cases = [
        ("2 2\n1 1\n1 1\n2 1", "truncated"),
        ("2 2\n1 1\n", "truncated"),
        ("2", "truncated"),
        ("2 2\n1 1\n1 3\n1 1\n", "out of range"),
        ("2 2\n1 1\n1 0\n1 1\n", "out of range"),
        ("1 1\n1\n1 1 7\n", "trailing tokens"),
        ("2 2\n1 1\n-1\n1 1\n", "negative cover count"),
        ("a 2\n", "invalid integer"),
    ]
    for text, fragment in cases:
        with pytest.raises(ParseError, match=fragment):
            parse_orlib_scp(text)


def test_orlib_rows_without_cover_are_allowed_but_infeasible():
    inst = parse_orlib_scp("2 1\n1\n1 1\n0\n")
    assert not is_feasible(inst)


def test_orlib_instance_is_solvable_when_feasible():
    text = "3 3\n1 1 1\n2 1 2\n2 2 3\n1 3\n"
    inst = parse_orlib_scp(text)
    cover, _ = classical_greedy(inst)
    assert validate_cover(inst, cover)
