"""Brute-force semantics and exhaustive law sweeps.

The closed-form interval operations in ``divlog.intervals`` are checked
here against their definitions: negation as the greatest element
disjoint from ``a``, implication as the greatest element whose meet
with ``a`` stays below ``b``.  The oracle finds those maxima by folding
join over every qualifying member and then asserting the fold result
qualifies itself, which simultaneously produces the maximum and proves
the candidate set has one.

The ``verify_*`` functions run whole-range sweeps and return
LawReport records suitable for structured output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import NoGreatestElement
from .factorization import as_natural, divides
from .intervals import DEFAULT_ENUMERATION_CAP, Interval
from .lattice import join, meet


@dataclass(frozen=True)
class LawReport:
    """Outcome of one exhaustive sweep.

    ``cases_checked`` equals the cardinality of the declared sweep
    domain described by ``parameters``; the sweep succeeded exactly
    when ``counterexamples`` is empty.  Intervals skipped for size are
    listed, never silently dropped.
    """

    law_name: str
    parameters: dict[str, Any]
    cases_checked: int
    counterexamples: tuple = ()
    skipped: tuple = field(default=())

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "law_name": self.law_name,
            "parameters": dict(self.parameters),
            "cases_checked": self.cases_checked,
            "skipped": [dict(s) for s in self.skipped],
            "counterexamples": [dict(c) for c in self.counterexamples],
        }


# ---------------------------------------------------------------------------
# Brute-force Heyting operations
# ---------------------------------------------------------------------------


def oracle_neg(q: Interval, a, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Greatest member disjoint from ``a``, by exhaustive scan."""
    a = as_natural(a)
    best = q.bottom  # always qualifies: meet(a, bottom) == bottom
    for c in q.members(cap):
        if meet(a, c) == q.bottom:
            best = join(best, c)
    if meet(a, best) != q.bottom or not q.contains(best):
        raise NoGreatestElement(
            f"join of candidates disjoint from {a} in {q} does not qualify"
        )
    return best


def oracle_imp(q: Interval, a, b, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Greatest member c with meet(a, c) dividing ``b``, by exhaustive scan."""
    a = as_natural(a)
    b = as_natural(b)
    best = q.bottom
    for c in q.members(cap):
        if divides(meet(a, c), b):
            best = join(best, c)
    if not divides(meet(a, best), b) or not q.contains(best):
        raise NoGreatestElement(
            f"join of candidates for {a} -> {b} in {q} does not qualify"
        )
    return best


# ---------------------------------------------------------------------------
# Global lattice-law sweeps
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def verify_lattice_laws(max_value) -> list[LawReport]:
    """Exhaustively check the four lattice laws on [1, max_value].

    Idempotency sweeps single values, commutativity pairs,
    associativity triples (both operations per case), and mutual
    distributivity both dual forms over all triples, so its declared
    domain is twice the triple count.
    """
    n = as_natural(max_value)
    return [
        _idempotency_report(n),
        _commutativity_report(n),
        _associativity_report(n),
        _distributivity_report(n),
    ]


def _idempotency_report(n: int) -> LawReport:
    counterexamples = []
    for a in range(1, n + 1):
        if meet(a, a) != a:
            counterexamples.append({"a": a, "identity": "meet", "lhs": meet(a, a), "rhs": a})
        if join(a, a) != a:
            counterexamples.append({"a": a, "identity": "join", "lhs": join(a, a), "rhs": a})
    return LawReport(
        law_name="idempotency",
        parameters={"max": n, "domain": f"[1,{n}]"},
        cases_checked=n,
        counterexamples=tuple(counterexamples),
    )


def _commutativity_report(n: int) -> LawReport:
    counterexamples = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if meet(a, b) != meet(b, a):
                counterexamples.append(
                    {"a": a, "b": b, "identity": "meet", "lhs": meet(a, b), "rhs": meet(b, a)}
                )
            if join(a, b) != join(b, a):
                counterexamples.append(
                    {"a": a, "b": b, "identity": "join", "lhs": join(a, b), "rhs": join(b, a)}
                )
    return LawReport(
        law_name="commutativity",
        parameters={"max": n, "domain": f"[1,{n}]^2"},
        cases_checked=n * n,
        counterexamples=tuple(counterexamples),
    )


def _associativity_report(n: int) -> LawReport:
    counterexamples = []
    values = range(1, n + 1)
    for a in values:
        for b in values:
            m_ab = meet(a, b)
            j_ab = join(a, b)
            for c in values:
                lhs = meet(m_ab, c)
                rhs = meet(a, meet(b, c))
                if lhs != rhs:
                    counterexamples.append(
                        {"a": a, "b": b, "c": c, "identity": "meet", "lhs": lhs, "rhs": rhs}
                    )
                lhs = join(j_ab, c)
                rhs = join(a, join(b, c))
                if lhs != rhs:
                    counterexamples.append(
                        {"a": a, "b": b, "c": c, "identity": "join", "lhs": lhs, "rhs": rhs}
                    )
    return LawReport(
        law_name="associativity",
        parameters={"max": n, "domain": f"[1,{n}]^3"},
        cases_checked=n**3,
        counterexamples=tuple(counterexamples),
    )


def _distributivity_report(n: int) -> LawReport:
    # Both dual forms are part of the declared domain, hence 2 * n**3.
    counterexamples = []
    values = range(1, n + 1)
    for a in values:
        for b in values:
            m_ab = meet(a, b)
            j_ab = join(a, b)
            for c in values:
                lhs = meet(a, join(b, c))
                rhs = join(m_ab, meet(a, c))
                if lhs != rhs:
                    counterexamples.append(
                        {"a": a, "b": b, "c": c, "form": "meet_over_join", "lhs": lhs, "rhs": rhs}
                    )
                lhs = join(a, meet(b, c))
                rhs = meet(j_ab, join(a, c))
                if lhs != rhs:
                    counterexamples.append(
                        {"a": a, "b": b, "c": c, "form": "join_over_meet", "lhs": lhs, "rhs": rhs}
                    )
    return LawReport(
        law_name="mutual_distributivity",
        parameters={
            "max": n,
            "domain": f"2 x [1,{n}]^3",
            "forms": ["meet_over_join", "join_over_meet"],
        },
        cases_checked=2 * n**3,
        counterexamples=tuple(counterexamples),
    )


def verify_projective(max_value) -> LawReport:
    """Check meet(x, join(z, y)) == join(meet(x, z), y) for every triple
    in [1, max_value]^3 with y dividing x."""
    n = as_natural(max_value)
    cases = 0
    counterexamples = []
    for x in range(1, n + 1):
        for y in _divisors(x):
            for z in range(1, n + 1):
                cases += 1
                lhs = meet(x, join(z, y))
                rhs = join(meet(x, z), y)
                if lhs != rhs:
                    counterexamples.append(
                        {"x": x, "y": y, "z": z, "lhs": lhs, "rhs": rhs}
                    )
    return LawReport(
        law_name="projective_identity",
        parameters={"max": n, "domain": f"triples in [1,{n}]^3 with y | x"},
        cases_checked=cases,
        counterexamples=tuple(counterexamples),
    )


# ---------------------------------------------------------------------------
# Interval sweeps: closed-form operations against the oracle
# ---------------------------------------------------------------------------


def verify_heyting(top_max, size_cap: int = 512) -> list[LawReport]:
    """Sweep every interval with top <= top_max and every dividing bottom.

    Intervals larger than ``size_cap`` are recorded as skipped.  Five
    properties are checked exhaustively on the rest:

    * negation formula == oracle, per member;
    * implication formula == oracle, per member pair;
    * residuation, per member triple: meet(a, b) | c iff a | imp(b, c);
    * Boolean equivalences, per interval: the exponent-gap test, the
      excluded middle, and the top*bottom/a complement formula agree;
    * bottom-independence of implication, per (interval, coarser
      bottom, member pair): recomputing in the relaxed interval yields
      the same value, cross-checked against the oracle when the
      coarser bottom is 1.
    """
    n = as_natural(top_max)
    size_cap = as_natural(size_cap)

    skipped = []
    neg_cases = 0
    neg_bad = []
    imp_cases = 0
    imp_bad = []
    res_cases = 0
    res_bad = []
    bool_cases = 0
    bool_bad = []
    indep_cases = 0
    indep_bad = []

    for top in range(1, n + 1):
        relaxed = Interval(1, top)
        for bottom in _divisors(top):
            q = Interval(bottom, top)
            size = q.size()
            if size > size_cap:
                skipped.append({"bottom": bottom, "top": top, "size": size})
                continue
            ms = q.members()

            for a in ms:
                neg_cases += 1
                formula = q.neg(a)
                scanned = oracle_neg(q, a)
                if formula != scanned:
                    neg_bad.append(
                        {"bottom": bottom, "top": top, "a": a,
                         "formula": formula, "oracle": scanned}
                    )

            imp_table = {}
            for a in ms:
                for b in ms:
                    imp_cases += 1
                    formula = q.imp(a, b)
                    imp_table[a, b] = formula
                    scanned = oracle_imp(q, a, b)
                    if formula != scanned:
                        imp_bad.append(
                            {"bottom": bottom, "top": top, "a": a, "b": b,
                             "formula": formula, "oracle": scanned}
                        )

            for a in ms:
                for b in ms:
                    m_ab = meet(a, b)
                    for c in ms:
                        res_cases += 1
                        if (c % m_ab == 0) != (imp_table[b, c] % a == 0):
                            res_bad.append(
                                {"bottom": bottom, "top": top, "a": a, "b": b, "c": c,
                                 "meet_ab": m_ab, "imp_bc": imp_table[b, c]}
                            )

            bool_cases += 1
            by_gaps = q.is_boolean()
            by_excluded_middle = all(join(a, q.neg(a)) == top for a in ms)
            product = top * bottom
            by_formula = all(
                product % a == 0 and q.neg(a) == product // a for a in ms
            )
            ok = by_gaps == by_excluded_middle == by_formula
            if ok and by_gaps:
                # the dedicated complement operation must agree with neg
                ok = all(q.complement(a) == q.neg(a) for a in ms)
            if not ok:
                bool_bad.append(
                    {"bottom": bottom, "top": top, "exponent_gaps": by_gaps,
                     "excluded_middle": by_excluded_middle, "complement_formula": by_formula}
                )

            for coarser_bottom in _divisors(bottom)[:-1]:  # proper divisors
                coarse = relaxed if coarser_bottom == 1 else Interval(coarser_bottom, top)
                for a in ms:
                    for b in ms:
                        indep_cases += 1
                        expected = imp_table[a, b]
                        recomputed = coarse.imp(a, b)
                        ok = recomputed == expected
                        if ok and coarser_bottom == 1:
                            ok = oracle_imp(coarse, a, b) == expected
                        if not ok:
                            indep_bad.append(
                                {"bottom": bottom, "top": top,
                                 "coarser_bottom": coarser_bottom, "a": a, "b": b,
                                 "expected": expected, "recomputed": recomputed}
                            )

    skipped = tuple(skipped)
    params = {"top_max": n, "size_cap": size_cap}
    return [
        LawReport(
            law_name="neg_formula_vs_oracle",
            parameters={**params, "domain": "(interval, member) pairs"},
            cases_checked=neg_cases,
            counterexamples=tuple(neg_bad),
            skipped=skipped,
        ),
        LawReport(
            law_name="imp_formula_vs_oracle",
            parameters={**params, "domain": "(interval, member, member) triples"},
            cases_checked=imp_cases,
            counterexamples=tuple(imp_bad),
            skipped=skipped,
        ),
        LawReport(
            law_name="residuation_adjunction",
            parameters={**params, "domain": "(interval, a, b, c) member triples"},
            cases_checked=res_cases,
            counterexamples=tuple(res_bad),
            skipped=skipped,
        ),
        LawReport(
            law_name="boolean_equivalences",
            parameters={**params, "domain": "intervals"},
            cases_checked=bool_cases,
            counterexamples=tuple(bool_bad),
            skipped=skipped,
        ),
        LawReport(
            law_name="imp_bottom_independence",
            parameters={
                **params,
                "domain": "(interval, proper coarser bottom, member pair) tuples",
            },
            cases_checked=indep_cases,
            counterexamples=tuple(indep_bad),
            skipped=skipped,
        ),
    ]
