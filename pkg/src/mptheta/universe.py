"""Enumeration universe and property checks backing `mptheta selftest` and
the acceptance suite.

The universe: data with at most two GL factors, exponents in {1/2, 1, 3/2, 2},
segment lengths up to 3, cuspidal bases {trivial, one named quadratic, one
symplectic dim-2 symbol}, and tempered parameters of rank <= 4 over the same
bases.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import lifts, reps
from .core import (HALF, TRIVIAL_CHI, Cuspidal, HalfInt, QuadChar, Segment)
from .lifts import NONSPLIT, SPLIT, Tower
from .reps import METAPLECTIC, LanglandsDatum, LParameter, TemperedRep

CHI = QuadChar.named("a")

BASES = (Cuspidal.trivial(),
         Cuspidal.character(CHI),
         Cuspidal.named("x", 2, "s"))

EXPONENTS = (HalfInt(1), HalfInt(2), HalfInt(3), HalfInt(4))


def folded_factors(max_len: int = 3):
    out = []
    for rho in BASES:
        for length in range(1, max_len + 1):
            half_span = HalfInt(length - 1)
            unitary = Segment(rho, -half_span, half_span)
            for s in EXPONENTS:
                out.append(unitary.shifted(s))
    return out


def factor_lists(max_factors: int = 2, max_len: int = 3):
    """Factor tuples in normal-form order, up to the given count."""
    factors = sorted(folded_factors(max_len), key=Segment.sort_key)
    lists = [()]
    for k in range(1, max_factors + 1):
        lists.extend(combinations_with_replacement(factors, k))
    return lists


def _summand_kinds():
    triv, chi, rho2 = BASES
    kinds = []
    for a in (2, 4, 6, 8):
        kinds.append((triv, a))
        kinds.append((chi, a))
    for a in (1, 3):
        kinds.append((rho2, a))
    return kinds


def parameters(max_rank: int = 4):
    """All valid tempered parameters of rank <= max_rank over the bases."""
    kinds = _summand_kinds()
    params = []

    def extend(i, budget, chosen):
        params.append(LParameter.of(chosen))
        for j in range(i, len(kinds)):
            rho, a = kinds[j]
            d = rho.dim * a
            if d <= budget:
                extend(j, budget - d, chosen + [(rho, a)])

    extend(0, 2 * max_rank, [])
    return params


def datum_universe(max_factors: int = 2, max_rank: int = 4):
    tempereds = [TemperedRep(METAPLECTIC, phi) for phi in parameters(max_rank)]
    for facs in factor_lists(max_factors):
        for sigma in tempereds:
            yield LanglandsDatum(facs, sigma, TRIVIAL_CHI)


def generic_universe(max_factors: int = 2, max_rank: int = 4):
    return [pi for pi in datum_universe(max_factors, max_rank)
            if reps.is_generic_lq(pi).verdict]


def check_route_equivalence(data=None):
    """Violations of route A == route B over the universe."""
    violations = []
    for pi in (data if data is not None else datum_universe()):
        a = reps.is_generic_lq(pi).verdict
        b = reps.is_generic_lq_via_coeff(pi)
        if a != b:
            violations.append(f"route mismatch ({a} vs {b}) on "
                              + _describe(pi))
    return violations


def check_conservation(generic_data):
    violations = []
    for pi in generic_data:
        fo = lifts.first_occurrence(pi)
        if fo.m_down + fo.m_up != 4 * pi.rank + 4:
            violations.append("conservation fails on " + _describe(pi))
        if fo.down_branch != SPLIT:
            violations.append("down branch not split on " + _describe(pi))
    return violations


def _is_half_char(seg: Segment) -> bool:
    return seg.is_trivial_steinberg and seg.length == 1 and seg.center == HALF


def _is_three_half_char(seg: Segment) -> bool:
    return (seg.rho.is_trivial_character and seg.length == 1
            and seg.center == HalfInt(3))


def check_lift_properties(generic_data, depth: int = 4):
    """Rank accounting, zero-above-first-occurrence, monotone chain
    consistency, standard form and the trivial-Steinberg constraints over
    the lift tables of the generic data."""
    violations = []
    for pi in generic_data:
        fo = lifts.first_occurrence(pi)
        smc_holds = not reps.standard_module_reducible(pi).reducible
        try:
            table = lifts.lift_table(pi, TRIVIAL_CHI, depth)
        except lifts.RankAccountingError as exc:
            violations.append(f"{exc} on " + _describe(pi))
            continue
        for branch, l_first in ((SPLIT, fo.l), (NONSPLIT, -fo.l - 2)):
            above = lifts.theta_lift(pi, Tower(TRIVIAL_CHI, branch),
                                     l_first + 2)
            if above is not None:
                violations.append(
                    f"non-zero lift above first occurrence ({branch}) on "
                    + _describe(pi))
            previous = None
            for k in range(depth + 1):
                level = l_first - 2 * k
                result = table[(branch, level)]
                violations.extend(_check_one_lift(pi, result, smc_holds))
                if previous is not None:
                    violations.extend(
                        _check_chain_step(pi, previous, result))
                previous = result
    return violations


def _check_one_lift(pi, result, smc_holds):
    out = []

    def note(problem):
        out.append(f"{problem} at level {result.level} ({result.branch}) of "
                   + _describe(pi))

    centers = [f.center for f in result.gl_factors]
    if any(not c > HalfInt(0) for c in centers):
        note("non-positive exponent")
    if any(centers[i] < centers[i + 1] for i in range(len(centers) - 1)):
        note("not in standard form")
    carried = result.carried_factors
    n_ts = sum(1 for f in carried if f.is_trivial_steinberg)
    if n_ts > 1:
        note("several non-chain trivial-Steinberg factors")
    if (any(_is_half_char(f) for f in carried)
            and any(_is_three_half_char(f) for f in carried)):
        note("nu^{1/2} and nu^{3/2} co-occur outside the chain")
    if smc_holds and not result.chain:
        if (any(_is_half_char(f) for f in result.gl_factors)
                and any(_is_three_half_char(f) for f in result.gl_factors)):
            note("nu^{1/2}/nu^{3/2} co-occurrence in a chain-free "
                 "standard-module-case lift")
    return out


def _multiset_diff(minuend, subtrahend):
    out = list(minuend)
    missing = []
    for item in subtrahend:
        try:
            out.remove(item)
        except ValueError:
            missing.append(item)
    return out, missing


def _check_chain_step(pi, shallower, deeper):
    """Consecutive levels differ by one chain character, or by the
    documented equal-rank exceptional step."""

    def bad(problem):
        return [f"{problem} at step {shallower.level} -> {deeper.level} "
                f"({deeper.branch}) of " + _describe(pi)]

    added, removed = _multiset_diff(deeper.gl_factors, shallower.gl_factors)
    if removed:
        return bad("factor lost going deeper")
    same_tempered = shallower.tempered == deeper.tempered
    if len(added) == 1 and same_tempered:
        seg = added[0]
        if seg.rho.is_trivial_character and seg.length == 1:
            return []
        return bad("non-character factor inserted")
    if shallower.level == 2 and deeper.level == 0 and not added:
        # tempered symbol steps from the first-occurrence lift to level 0
        if (shallower.tempered.level == 2 and deeper.tempered.level == 0):
            return []
    return bad("unexpected step shape")


def _describe(pi) -> str:
    from .grammar import render
    return render(pi)


def run_selftest(fast: bool = False) -> bool:
    """Run the enumeration properties, printing one line per property."""
    max_rank = 2 if fast else 4
    depth = 2 if fast else 4
    ok = True

    def report(name, violations):
        nonlocal ok
        status = "ok" if not violations else f"FAIL ({len(violations)})"
        print(f"{name}: {status}")
        for v in violations[:5]:
            print(f"  {v}")
        ok = ok and not violations

    data = list(datum_universe(max_rank=max_rank))
    print(f"universe size: {len(data)}")
    report("route equivalence", check_route_equivalence(data))
    generic = [pi for pi in data if reps.is_generic_lq(pi).verdict]
    print(f"generic data: {len(generic)}")
    report("conservation", check_conservation(generic))
    report("lift properties", check_lift_properties(generic, depth))
    return ok
