"""Formula parsing, printing, and many-valued evaluation."""

import pytest
from hypothesis import given, strategies as st

from divlog import (
    BOTTOM,
    TOP,
    And,
    Counterexample,
    FormulaSyntaxError,
    Imp,
    Interval,
    Lit,
    Not,
    NotMember,
    Or,
    SearchLimit,
    UnboundVariable,
    Var,
    check_valid,
    divides,
    evaluate,
    format_formula,
    parse,
    variables,
)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@st.composite
def intervals(draw, top_max=240):
    top = draw(st.integers(min_value=1, max_value=top_max))
    bottom = draw(st.sampled_from(_divisors(top)))
    return Interval(bottom, top)


names = st.sampled_from(["p", "q", "r", "s"])
leaves = st.one_of(
    st.builds(Var, names),
    st.builds(Lit, st.integers(min_value=1, max_value=60)),
    st.just(TOP),
    st.just(BOTTOM),
)
formulas = st.recursive(
    leaves,
    lambda sub: st.one_of(
        st.builds(Not, sub),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Imp, sub, sub),
    ),
    max_leaves=25,
)


# -- parsing -----------------------------------------------------------------


def test_parse_negated_disjunct():
    assert parse("~p | p") == Or(Not(Var("p")), Var("p"))


def test_parse_implication_is_right_associative():
    assert parse("p -> q -> r") == Imp(Var("p"), Imp(Var("q"), Var("r")))


def test_parse_peirce_formula():
    p, q = Var("p"), Var("q")
    assert parse("((p->q)->p)->p") == Imp(Imp(Imp(p, q), p), p)


def test_parse_precedence():
    p, q, r = Var("p"), Var("q"), Var("r")
    assert parse("p & q | r") == Or(And(p, q), r)
    assert parse("~p & q") == And(Not(p), q)
    assert parse("p | q -> r") == Imp(Or(p, q), r)


def test_parse_atoms():
    assert parse("T") == TOP
    assert parse("F") == BOTTOM
    assert parse("12") == Lit(12)
    assert parse("widget") == Var("widget")


def test_parse_ignores_whitespace():
    assert parse(" p&q ->~ r ") == parse("p & q -> ~r")


@pytest.mark.parametrize(
    "text, position",
    [
        ("p &", 3),
        ("p $ q", 2),
        ("(p", 2),
        ("p q", 2),
        ("", 0),
        ("~", 1),
    ],
)
def test_syntax_errors_carry_positions(text, position):
    with pytest.raises(FormulaSyntaxError) as exc:
        parse(text)
    assert exc.value.position == position
    assert f"position {position}" in str(exc.value)


def test_syntax_error_wire_name():
    # serialized as SyntaxError without shadowing the builtin
    assert FormulaSyntaxError.name == "SyntaxError"


def test_variables_collects_names():
    assert variables(parse("p -> (q & ~r) | p")) == {"p", "q", "r"}
    assert variables(parse("T & 12")) == set()


# -- printing ----------------------------------------------------------------


def test_printer_uses_minimal_parentheses():
    cases = [
        "~p | p",
        "(p -> q) -> r",
        "p -> q -> r",
        "p & (q | r)",
        "p & q | r",
        "~(p & q)",
        "~~p",
        "p & (q & r)",
    ]
    for text in cases:
        assert format_formula(parse(text)) == text


@given(formulas)
def test_print_parse_round_trip(f):
    assert parse(format_formula(f)) == f


# -- evaluation --------------------------------------------------------------


def test_eval_negation_example():
    assert evaluate(Interval(1, 12), parse("~2")) == 3


def test_excluded_middle_fails_in_twelve():
    assert evaluate(Interval(1, 12), parse("2 | ~2")) == 6


@given(intervals())
def test_top_meet_bottom_is_bottom(q):
    assert evaluate(q, parse("T & F")) == q.bottom


def test_eval_with_assignment():
    assert evaluate(Interval(1, 12), parse("p -> 6"), {"p": 4}) == 6


@given(intervals(), formulas, st.data())
def test_eval_lands_in_the_interval(q, f, data):
    ms = q.members()
    env = {name: data.draw(st.sampled_from(ms)) for name in sorted(variables(f))}
    try:
        value = evaluate(q, f, env)
    except NotMember:
        return  # formula carried a literal foreign to q
    assert q.contains(value)


def test_unbound_variables_are_reported():
    with pytest.raises(UnboundVariable) as exc:
        evaluate(Interval(1, 12), parse("p & q"), {"p": 2})
    assert "q" in str(exc.value)


def test_literals_must_be_members():
    with pytest.raises(NotMember):
        evaluate(Interval(1, 12), parse("5"))
    with pytest.raises(NotMember):
        evaluate(Interval(2, 24), parse("p"), {"p": 3})


@given(intervals(), st.data())
def test_negation_matches_implication_to_falsum(q, data):
    a = data.draw(st.sampled_from(q.members()))
    assert evaluate(q, Not(Lit(a))) == evaluate(q, Imp(Lit(a), BOTTOM))


monotone_formulas = st.recursive(
    st.one_of(st.builds(Var, names), st.just(TOP), st.just(BOTTOM)),
    lambda sub: st.one_of(st.builds(And, sub, sub), st.builds(Or, sub, sub)),
    max_leaves=12,
)


@given(intervals(), monotone_formulas, st.data())
def test_negation_free_fragment_is_monotone(q, f, data):
    ms = q.members()
    lo, hi = {}, {}
    for name in sorted(variables(f)):
        a = data.draw(st.sampled_from(ms))
        b = data.draw(st.sampled_from([m for m in ms if m % a == 0]))
        lo[name], hi[name] = a, b
    assert divides(evaluate(q, f, lo), evaluate(q, f, hi))


# -- validity checking -------------------------------------------------------


def test_self_implication_is_valid():
    assert check_valid(Interval(1, 12), parse("p -> p")) is None


def test_peirce_law_fails_in_the_three_chain():
    found = check_valid(Interval(1, 4), parse("((p->q)->p)->p"))
    assert found == Counterexample(assignment=(("p", 2), ("q", 1)), value=2)


def test_boolean_interval_validates_excluded_middle():
    assert check_valid(Interval(6, 12), parse("p | ~p")) is None


def test_first_counterexample_is_lexicographic():
    found = check_valid(Interval(1, 4), parse("p -> q"))
    assert found == Counterexample(assignment=(("p", 2), ("q", 1)), value=1)


def test_excluded_middle_counterexample_in_twelve():
    found = check_valid(Interval(1, 12), parse("p | ~p"))
    assert found.assignment == (("p", 2),)
    assert found.value == 6


def test_variable_free_formulas_are_checked_directly():
    assert check_valid(Interval(1, 12), parse("T")) is None
    assert check_valid(Interval(1, 12), parse("2")) == Counterexample(
        assignment=(), value=2
    )


def test_search_cap_guards_assignment_blowup():
    q = Interval(1, 12)  # six members, so eight variables exceed 10^6
    with pytest.raises(SearchLimit):
        check_valid(q, parse("a & b & c & d & e & f & g & h"))


def test_search_cap_is_configurable():
    with pytest.raises(SearchLimit):
        check_valid(Interval(1, 4), parse("p | ~p"), cap=2)
