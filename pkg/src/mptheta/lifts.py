"""Tower bookkeeping, first-occurrence indices, tempered lift formulas and
the full theta-lift dispatch.

Levels follow the even-integer convention l = 2n + 1 - m, where n is the
rank of the source and m the odd dimension of the target quadratic space;
going deeper in a tower means smaller l.  A lift is zero exactly above the
first occurrence on its branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (HALF, TRIVIAL_CHI, Cuspidal, HalfInt, QuadChar, Segment,
                   character_segment)
from .reps import (METAPLECTIC, LanglandsDatum, LParameter, NotGenericError,
                   TemperedRep, is_generic_lq, l_of_tempered)

SPLIT = "split"
NONSPLIT = "nonsplit"

_TRIV = Cuspidal.trivial()


class RankAccountingError(RuntimeError):
    """Internal invariant breach: the emitted datum does not fill the target
    group's rank."""


@dataclass(frozen=True)
class Tower:
    chi: QuadChar = TRIVIAL_CHI
    branch: str = SPLIT

    def __post_init__(self):
        if self.branch not in (SPLIT, NONSPLIT):
            raise ValueError(f"bad branch {self.branch!r}")


@dataclass(frozen=True)
class LiftLevel:
    l: int

    def __post_init__(self):
        if self.l % 2 != 0:
            raise ValueError(f"lift level must be even, got {self.l}")

    def target_dim(self, rank: int) -> int:
        m = 2 * rank + 1 - self.l
        if m < 1:
            raise ValueError(f"level {self.l} has no target at rank {rank}")
        return m


@dataclass(frozen=True)
class ThetaTempered:
    """Tempered part of a lift: the lift symbol of a metaplectic tempered
    representation at some level, with its derived parameter when the
    formulas determine it (None = opaque, chi_V towers)."""

    level: int
    base: TemperedRep
    param: LParameter | None
    chi: QuadChar = TRIVIAL_CHI
    st2_copies: int = 0

    @property
    def dim(self) -> int:
        if self.param is not None:
            return self.param.dim
        return 2 * self.base.rank - self.level


@dataclass(frozen=True)
class LiftResult:
    """A non-zero small theta lift, as a Langlands datum on the orthogonal
    side.  ``chain`` records which factors came from the inserted nu-chain;
    ``extrapolated`` flags chi_V-tower outputs beyond the displayed shapes.
    """

    gl_factors: tuple
    tempered: ThetaTempered
    branch: str
    level: int
    target_dim: int
    chain: tuple = ()
    extrapolated: bool = False

    @property
    def carried_factors(self) -> tuple:
        chain = list(self.chain)
        out = []
        for f in self.gl_factors:
            if f in chain:
                chain.remove(f)
            else:
                out.append(f)
        return tuple(out)


@dataclass(frozen=True)
class FirstOccurrence:
    l: int
    m_down: int
    m_up: int
    down_branch: str = SPLIT


def _require_generic(pi: LanglandsDatum):
    verdict = is_generic_lq(pi)
    if not verdict:
        raise NotGenericError(verdict.witnesses)


def _has_half_factor(facs) -> bool:
    return any(f.is_trivial_steinberg and f.center == HALF for f in facs)


@lru_cache(maxsize=None)
def first_occurrence(pi: LanglandsDatum,
                     chi_v: QuadChar = TRIVIAL_CHI) -> FirstOccurrence:
    """First-occurrence data of a generic datum on a pair of towers.

    On the trivial-character towers l equals the tempered invariant, except
    that a nu^{1/2} factor always forces l = 2; conservation fixes the
    other tower.  On chi_V towers the first occurrences are the equal-rank
    level and one step beyond.
    """
    _require_generic(pi)
    n = pi.rank
    if not chi_v.is_trivial:
        return FirstOccurrence(0, 2 * n + 1, 2 * n + 3)
    work = pi.untwisted()
    if l_of_tempered(work.tempered) == 2 or _has_half_factor(work.gl_factors):
        l = 2
    else:
        l = 0
    m_down = 2 * n + 1 - l
    return FirstOccurrence(l, m_down, 4 * n + 4 - m_down)


def _chain(start: HalfInt, l: int):
    """Characters nu^{start}, nu^{start+1}, ..., nu^{(l-1)/2}."""
    top = HalfInt(l - 1)
    out = []
    c = start
    while c <= top:
        out.append(Segment(_TRIV, c, c))
        c = c + 1
    return out


def _sorted(factors):
    return tuple(sorted(factors, key=Segment.sort_key))


@lru_cache(maxsize=None)
def tempered_lift(sigma: TemperedRep, tower: Tower, level: int):
    """Lift of a generic tempered representation at a given level, or None
    above the first occurrence on that branch."""
    if sigma.flavor != METAPLECTIC:
        raise ValueError("tempered lifts start from the metaplectic side")
    if level % 2 != 0:
        raise ValueError(f"lift level must be even, got {level}")
    phi = sigma.param
    chi = tower.chi

    if not chi.is_trivial:
        first = 0 if tower.branch == SPLIT else -2
        if level > first:
            return None
        start = HALF if tower.branch == SPLIT else HalfInt(3)
        chain = _chain(start, -level)
        sym = ThetaTempered(first, sigma, None, chi)
        return _finish(chain, sym, tower.branch, level, sigma.rank,
                       chain=chain, extrapolated=True)

    lsig = l_of_tempered(sigma)
    if tower.branch == SPLIT:
        if level > lsig:
            return None
        if level == 2:
            sym = ThetaTempered(2, sigma, phi.minus(_TRIV, 2))
            chain = []
        else:
            sym = ThetaTempered(0, sigma, phi)
            chain = _chain(HALF, -level)
        return _finish(chain, sym, tower.branch, level, sigma.rank,
                       chain=chain)

    first = -lsig - 2
    if level > first:
        return None
    extra = []
    if lsig == 0:
        sym = ThetaTempered(-2, sigma, phi.plus(_TRIV, 2))
        chain = _chain(HalfInt(3), -level)
    elif phi.m_s2 % 2 == 1:
        sym = ThetaTempered(-4, sigma, phi.plus(_TRIV, 4))
        chain = _chain(HalfInt(5), -level)
    else:
        h = phi.m_s2 // 2
        prime = TemperedRep(METAPLECTIC, phi.minus(_TRIV, 2, 2 * h),
                            sigma.sign)
        sym = ThetaTempered(-2, prime, phi.minus(_TRIV, 2),
                            st2_copies=h - 1)
        extra = [Segment.steinberg(3, HALF)]
        chain = _chain(HalfInt(5), -level)
    return _finish(chain + extra, sym, tower.branch, level, sigma.rank,
                   chain=chain)


def _finish(factors, sym: ThetaTempered, branch: str, level: int,
            source_rank: int, chain=(), extrapolated: bool = False
            ) -> LiftResult:
    m = 2 * source_rank + 1 - level
    result = LiftResult(_sorted(factors), sym, branch, level, m,
                        chain=tuple(chain), extrapolated=extrapolated)
    total = 2 * sum(f.gl_dim for f in result.gl_factors) + sym.dim
    if total != m - 1:
        raise RankAccountingError(
            f"lift at level {level} on {branch}: {total} != {m - 1}")
    return result


@lru_cache(maxsize=None)
def theta_lift(pi: LanglandsDatum, tower: Tower, level: int):
    """Small theta lift of a generic datum at a level of a tower branch.

    Returns None above the first occurrence.  Dispatches on the shape of the
    datum: the standard-module case merges the factors with the tempered
    lift; the exceptional trivial-Steinberg shapes follow the first-lift and
    higher-lift formulas; chi_V towers twist every factor by chi_V.
    """
    _require_generic(pi)
    if level % 2 != 0:
        raise ValueError(f"lift level must be even, got {level}")
    work = pi.untwisted()
    facs = work.gl_factors
    sigma = work.tempered
    if sigma.flavor != METAPLECTIC:
        raise ValueError("theta_lift starts from the metaplectic side")
    n = work.rank
    chi = tower.chi

    if not chi.is_trivial:
        first = 0 if tower.branch == SPLIT else -2
        if level > first:
            return None
        twisted = [f.twisted(chi) for f in facs]
        base = tempered_lift(sigma, tower, level)
        displayed = _displayed_chi_shape(facs, chi)
        return _finish(twisted + list(base.gl_factors), base.tempered,
                       tower.branch, level, n, chain=base.chain,
                       extrapolated=not displayed)

    fo = first_occurrence(pi)
    l_first = fo.l if tower.branch == SPLIT else -fo.l - 2
    if level > l_first:
        return None

    lsig = l_of_tempered(sigma)
    has_half = _has_half_factor(facs)

    if lsig == 0 and has_half:
        half = character_segment(HALF)
        others = list(facs)
        others.remove(half)
        if tower.branch == SPLIT:
            if level == 2:
                sym = ThetaTempered(0, sigma, sigma.param)
                return _finish(others, sym, tower.branch, level, n)
            base = tempered_lift(sigma, tower, level)
            return _finish(list(facs) + list(base.gl_factors), base.tempered,
                           tower.branch, level, n, chain=base.chain)
        sym = ThetaTempered(-2, sigma, sigma.param.plus(_TRIV, 2))
        replaced = others + [Segment(_TRIV, HALF, HalfInt(3))]
        chain = _chain(HalfInt(5), -level)
        return _finish(replaced + chain, sym, tower.branch, level, n,
                       chain=chain)

    if level == 2 and has_half:
        # only reachable with the 2-dim trivial block in the parameter
        half = character_segment(HALF)
        others = list(facs)
        others.remove(half)
        sym = ThetaTempered(0, sigma, sigma.param)
        return _finish(others, sym, tower.branch, level, n)

    base = tempered_lift(sigma, tower, level)
    return _finish(list(facs) + list(base.gl_factors), base.tempered,
                   tower.branch, level, n, chain=base.chain)


def _displayed_chi_shape(facs, chi: QuadChar) -> bool:
    """The chi_V-tower shape the formulas display: every factor carries the
    chi_V twist except exactly one untwisted trivial-Steinberg factor."""
    plain = [f for f in facs if f.is_trivial_steinberg]
    rest = [f for f in facs if not f.is_trivial_steinberg]
    return len(plain) == 1 and all(f.rho.twist == chi for f in rest)


def lift_table(pi: LanglandsDatum, chi_v: QuadChar = TRIVIAL_CHI,
               depth: int = 0):
    """All lifts from the first occurrence down ``depth`` steps on both
    branches, keyed by (branch, level)."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    fo = first_occurrence(pi, chi_v)
    if chi_v.is_trivial:
        firsts = {SPLIT: fo.l, NONSPLIT: -fo.l - 2}
    else:
        firsts = {SPLIT: 0, NONSPLIT: -2}
    table = {}
    for branch, l_first in firsts.items():
        tower = Tower(chi_v, branch)
        for k in range(depth + 1):
            level = l_first - 2 * k
            result = theta_lift(pi, tower, level)
            if result is None:
                raise RankAccountingError(
                    f"zero lift below first occurrence at {branch}, {level}")
            table[(branch, level)] = result
    return table
