"""Propositional formulas evaluated inside an interval algebra.

Surface syntax (ASCII, whitespace insensitive)::

    formula := or ('->' formula)?          implication, right associative
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | atom
    atom    := identifier | integer | 'T' | 'F' | '(' formula ')'

``T`` and ``F`` are the interval's top and bottom; an integer literal
denotes itself and must be a member of the evaluation interval.
Connectives evaluate as meet, join, relative pseudocomplement, and
pseudocomplement, so classical tautologies may fail: validity means
"evaluates to the top under every assignment of members to variables".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import FormulaSyntaxError, NotMember, SearchLimit, UnboundVariable
from .factorization import as_natural
from .intervals import DEFAULT_ENUMERATION_CAP, Interval
from .lattice import join, meet

DEFAULT_SEARCH_CAP = 1_000_000


# ---------------------------------------------------------------------------
# Syntax trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    child: "Formula"


Formula = Union[Var, Lit, Top, Bottom, And, Or, Imp, Not]

TOP = Top()
BOTTOM = Bottom()


def variables(formula: Formula) -> set[str]:
    """The set of variable names occurring in the formula."""
    if isinstance(formula, Var):
        return {formula.name}
    if isinstance(formula, (And, Or, Imp)):
        return variables(formula.left) | variables(formula.right)
    if isinstance(formula, Not):
        return variables(formula.child)
    return set()


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_KEYWORDS = {"T": TOP, "F": BOTTOM}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("->", i):
            tokens.append(("op", "->", i))
            i += 2
        elif ch in "|&~()":
            tokens.append(("op", ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise FormulaSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next_is(self, op: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == op

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.next_is("->"):
            self.advance()
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.next_is("|"):
            self.advance()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.unary()
        while self.next_is("&"):
            self.advance()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.next_is("~"):
            self.advance()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, position = self.peek()
        if kind == "int":
            self.advance()
            return Lit(value)
        if kind == "name":
            self.advance()
            return _KEYWORDS.get(value, Var(value))
        if self.next_is("("):
            self.advance()
            node = self.formula()
            if not self.next_is(")"):
                _, _, pos = self.peek()
                raise FormulaSyntaxError("expected ')'", pos)
            self.advance()
            return node
        shown = "end of input" if kind == "end" else repr(value)
        raise FormulaSyntaxError(f"expected a formula, found {shown}", position)


def parse(text: str) -> Formula:
    """Parse formula text; FormulaSyntaxError reports the bad offset."""
    parser = _Parser(_tokenize(text))
    node = parser.formula()
    kind, value, position = parser.peek()
    if kind != "end":
        raise FormulaSyntaxError(f"unexpected trailing input {value!r}", position)
    return node


# ---------------------------------------------------------------------------
# Printing (inverse of parse, minimal parentheses)
# ---------------------------------------------------------------------------

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_NOT, _PREC_ATOM = 1, 2, 3, 4, 5


def _precedence(formula: Formula) -> int:
    if isinstance(formula, Imp):
        return _PREC_IMP
    if isinstance(formula, Or):
        return _PREC_OR
    if isinstance(formula, And):
        return _PREC_AND
    if isinstance(formula, Not):
        return _PREC_NOT
    return _PREC_ATOM


def format_formula(formula: Formula) -> str:
    """Render with the fewest parentheses that still round-trip."""
    return _format(formula, _PREC_IMP)


def _format(formula: Formula, level: int) -> str:
    if isinstance(formula, Var):
        text = formula.name
    elif isinstance(formula, Lit):
        text = str(formula.value)
    elif isinstance(formula, Top):
        text = "T"
    elif isinstance(formula, Bottom):
        text = "F"
    elif isinstance(formula, Not):
        text = "~" + _format(formula.child, _PREC_NOT)
    elif isinstance(formula, And):
        text = f"{_format(formula.left, _PREC_AND)} & {_format(formula.right, _PREC_NOT)}"
    elif isinstance(formula, Or):
        text = f"{_format(formula.left, _PREC_OR)} | {_format(formula.right, _PREC_AND)}"
    elif isinstance(formula, Imp):
        text = f"{_format(formula.left, _PREC_OR)} -> {_format(formula.right, _PREC_IMP)}"
    else:
        raise TypeError(f"not a formula node: {formula!r}")
    if _precedence(formula) < level:
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def evaluate(q: Interval, formula: Formula, assignment: Mapping[str, int] | None = None) -> int:
    """Evaluate compositionally in the interval; the result is a member.

    Every variable of the formula must be bound (UnboundVariable
    otherwise) and every binding and literal must be a member of the
    interval (NotMember otherwise).
    """
    env = dict(assignment or {})
    for name in sorted(variables(formula)):
        if name not in env:
            raise UnboundVariable(f"no value for variable {name!r}")
    for name, value in env.items():
        value = as_natural(value)
        if not q.contains(value):
            raise NotMember(f"{name}={value} is not in the interval {q}")
    return _eval(q, formula, env)


def _eval(q: Interval, formula: Formula, env: Mapping[str, int]) -> int:
    if isinstance(formula, Var):
        return env[formula.name]
    if isinstance(formula, Lit):
        value = as_natural(formula.value)
        if not q.contains(value):
            raise NotMember(f"literal {value} is not in the interval {q}")
        return value
    if isinstance(formula, Top):
        return q.top
    if isinstance(formula, Bottom):
        return q.bottom
    if isinstance(formula, And):
        return meet(_eval(q, formula.left, env), _eval(q, formula.right, env))
    if isinstance(formula, Or):
        return join(_eval(q, formula.left, env), _eval(q, formula.right, env))
    if isinstance(formula, Imp):
        return q.imp(_eval(q, formula.left, env), _eval(q, formula.right, env))
    if isinstance(formula, Not):
        return q.neg(_eval(q, formula.child, env))
    raise TypeError(f"not a formula node: {formula!r}")


# ---------------------------------------------------------------------------
# Exhaustive validity checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    """First falsifying assignment, with the value the formula took."""

    assignment: tuple[tuple[str, int], ...]
    value: int


def check_valid(
    q: Interval,
    formula: Formula,
    cap: int = DEFAULT_SEARCH_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> Counterexample | None:
    """Return None when the formula evaluates to top under every
    assignment, else the lexicographically first counterexample
    (variables sorted by name, member values ascending).

    Raises SearchLimit when the assignment space exceeds ``cap``.
    """
    names = sorted(variables(formula))
    members = q.members(enumeration_cap)
    total = len(members) ** len(names)
    if total > cap:
        raise SearchLimit(
            f"{total} assignments over {len(names)} variables exceed the cap {cap}"
        )
    top = q.top
    for combo in itertools.product(members, repeat=len(names)):
        env = dict(zip(names, combo))
        value = _eval(q, formula, env)
        if value != top:
            return Counterexample(assignment=tuple(zip(names, combo)), value=value)
    return None
