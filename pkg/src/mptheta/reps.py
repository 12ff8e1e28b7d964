"""L-parameters, tempered representations, Langlands data and the
classification verdicts: genericity of Langlands quotients (two independent
routes), rank-one and full standard-module reducibility, cuspidal
reducibility points, the discrete-series embedding and the equal-rank
transfer between the metaplectic and odd orthogonal sides.

Every tempered representation handled here is, by fiat, the generic member
of its packet; packet characters are not modeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gamma
from .core import (HALF, ONE, TRIVIAL_CHI, ZERO, Cuspidal, HalfInt, QuadChar,
                   Segment, segments_linked)

METAPLECTIC = "metaplectic"
ODD_ORTHOGONAL = "odd_orthogonal"


class NotGenericError(ValueError):
    """Raised by operations defined only for generic Langlands quotients."""

    def __init__(self, witnesses):
        self.witnesses = tuple(witnesses)
        super().__init__(
            "datum is not a generic Langlands quotient: "
            + "; ".join(self.witnesses))


@dataclass(frozen=True)
class LParameter:
    """Multiset of summands (rho, a, mult) of a symplectic-type parameter."""

    summands: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(self.summands))

    def __hash__(self):
        return self._hash

    @classmethod
    def of(cls, items) -> "LParameter":
        """Build from (rho, a) or (rho, a, mult) entries, merging repeats."""
        counts = {}
        for item in items:
            rho, a, *rest = item
            mult = rest[0] if rest else 1
            counts[(rho, a)] = counts.get((rho, a), 0) + mult
        ordered = sorted(counts, key=lambda k: (k[0].sort_key(), k[1]))
        return cls(tuple((rho, a, counts[(rho, a)]) for rho, a in ordered))

    @property
    def dim(self) -> int:
        return sum(m * rho.dim * a for rho, a, m in self.summands)

    @property
    def rank(self) -> int:
        return self.dim // 2

    @property
    def is_discrete(self) -> bool:
        return all(m == 1 for _, _, m in self.summands)

    def mult(self, rho: Cuspidal, a: int) -> int:
        for r, aa, m in self.summands:
            if r == rho and aa == a:
                return m
        return 0

    @property
    def m_s2(self) -> int:
        """Multiplicity of the trivial character tensor the 2-dim factor."""
        return self.mult(Cuspidal.trivial(), 2)

    @property
    def a0(self):
        """min{a even : (1, a) in phi}, or None as the +infinity sentinel."""
        best = None
        for rho, a, _ in self.summands:
            if rho.is_trivial_character and a % 2 == 0:
                best = a if best is None else min(best, a)
        return best

    def plus(self, rho: Cuspidal, a: int, mult: int = 1) -> "LParameter":
        return LParameter.of(list(self.summands) + [(rho, a, mult)])

    def minus(self, rho: Cuspidal, a: int, mult: int = 1) -> "LParameter":
        have = self.mult(rho, a)
        if have < mult:
            raise ValueError(f"parameter has no {mult} copies of ({rho}, {a})")
        rest = [(r, aa, m) for r, aa, m in self.summands
                if (r, aa) != (rho, a)]
        if have > mult:
            rest.append((rho, a, have - mult))
        return LParameter.of(rest)


EMPTY_PARAM = LParameter()


def validate_parameter(phi: LParameter):
    """Symplectic-type validation; returns the (possibly empty) error list."""
    errors = []
    for rho, a, mult in phi.summands:
        if a < 1 or mult < 1:
            errors.append(f"bad summand ({rho}, {a}, mult {mult})")
            continue
        if not rho.is_self_dual:
            errors.append(f"summand ({rho}, {a}) has non-self-dual support")
        elif rho.is_orthogonal and a % 2 != 0:
            errors.append(f"summand ({rho}, {a}): orthogonal-type with odd a")
        elif rho.is_symplectic and a % 2 == 0:
            errors.append(f"summand ({rho}, {a}): symplectic-type with even a")
    if phi.dim % 2 != 0:
        errors.append(f"parameter dimension {phi.dim} is odd")
    return errors


@dataclass(frozen=True)
class TemperedRep:
    """The generic member of a tempered packet, on either side of the
    equal-rank correspondence; the tower sign records which odd orthogonal
    form it matches."""

    flavor: str
    param: LParameter
    sign: str = "+"

    def __post_init__(self):
        if self.flavor not in (METAPLECTIC, ODD_ORTHOGONAL):
            raise ValueError(f"bad flavor {self.flavor!r}")
        if self.sign not in ("+", "-"):
            raise ValueError(f"bad tower sign {self.sign!r}")
        errors = validate_parameter(self.param)
        if errors:
            raise ValueError("invalid parameter: " + "; ".join(errors))
        object.__setattr__(self, "_hash",
                           hash((self.flavor, self.param, self.sign)))

    def __hash__(self):
        return self._hash

    @property
    def rank(self) -> int:
        return self.param.rank


MU0 = TemperedRep(METAPLECTIC, EMPTY_PARAM, "+")


def l_of_tempered(sigma: TemperedRep, chi_v: QuadChar = TRIVIAL_CHI) -> int:
    """First-occurrence invariant of a generic tempered representation:
    2 when the parameter contains the trivial 2-dim summand (trivial chi_v),
    0 otherwise; always 0 on the towers of a non-trivial chi_v."""
    if not chi_v.is_trivial:
        return 0
    return 2 if sigma.param.m_s2 > 0 else 0


@dataclass(frozen=True)
class LanglandsDatum:
    """Ordered GL factors with positive exponents over a tempered part.

    Denotes both the standard module and its Langlands quotient.  The
    psi_twist tag says which additive character's genuine structure the
    datum is written in; trivial means the system character itself.
    """

    gl_factors: tuple
    tempered: TemperedRep
    psi_twist: QuadChar = TRIVIAL_CHI

    def __post_init__(self):
        object.__setattr__(self, "_hash",
                           hash((self.gl_factors, self.tempered,
                                 self.psi_twist)))

    def __hash__(self):
        return self._hash

    @property
    def rank(self) -> int:
        return sum(f.gl_dim for f in self.gl_factors) + self.tempered.rank

    def untwisted(self) -> "LanglandsDatum":
        """Rewrite in the system character's coordinates: the twist moves
        onto the GL factors."""
        if self.psi_twist.is_trivial:
            return self
        return LanglandsDatum(
            tuple(f.twisted(self.psi_twist) for f in self.gl_factors),
            self.tempered, TRIVIAL_CHI)

    def standard_form_errors(self):
        errors = []
        prev = None
        for f in self.gl_factors:
            c = f.center
            if not c > ZERO:
                errors.append(f"factor {f} has exponent {c} <= 0")
            if prev is not None and c > prev:
                errors.append("exponents not weakly decreasing")
            prev = c
        return errors


def tempered_datum(sigma: TemperedRep,
                   psi_twist: QuadChar = TRIVIAL_CHI) -> LanglandsDatum:
    return LanglandsDatum((), sigma, psi_twist)


def normalize_datum(factors, tempered: TemperedRep,
                    psi_twist: QuadChar = TRIVIAL_CHI) -> LanglandsDatum:
    """Deterministic normal form: stable sort by exponent descending, then
    segment length descending, then cuspidal label ascending."""
    factors = list(factors)
    for f in factors:
        if not f.center > ZERO:
            raise ValueError(f"factor {f} has exponent {f.center} <= 0")
    factors.sort(key=Segment.sort_key)
    return LanglandsDatum(tuple(factors), tempered, psi_twist)


def _check_standard(pi: LanglandsDatum):
    errors = pi.standard_form_errors()
    if errors:
        raise ValueError("not a standard datum: " + "; ".join(errors))


@dataclass(frozen=True)
class GenericityVerdict:
    verdict: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.verdict


@dataclass(frozen=True)
class ReducibilityVerdict:
    reducible: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.reducible


def ord_gamma_vs_parameter(phi: LParameter, seg: Segment, u0: HalfInt) -> int:
    return gamma.ord_gamma_vs_parameter(phi, seg, u0)


def ord_local_coeff(seg: Segment, sigma: TemperedRep, mode: str,
                    u0: HalfInt) -> int:
    if not isinstance(sigma, TemperedRep):
        raise ValueError("local coefficient needs a tempered representation")
    return gamma.ord_local_coeff(seg, sigma.param, mode, u0)


@lru_cache(maxsize=None)
def is_generic_lq(pi: LanglandsDatum) -> GenericityVerdict:
    """Route A: genericity of the Langlands quotient from the inducing data.

    The quotient is generic iff every pair of factors is unlinked in both
    orientations, every factor that is not of trivial-Steinberg form gives
    an irreducible rank-one standard module, and every trivial-Steinberg
    factor St_{2s} v^s sees only parameter blocks (1, a) with a >= 4s.
    """
    _check_standard(pi)
    work = pi.untwisted()
    facs = work.gl_factors
    phi = work.tempered.param
    metaplectic = work.tempered.flavor == METAPLECTIC
    witnesses = []

    ts_positions = [i for i, f in enumerate(facs) if f.is_trivial_steinberg]
    if metaplectic and len(ts_positions) > 1:
        witnesses.append(
            "more than one trivial-Steinberg factor (positions "
            + ", ".join(str(i + 1) for i in ts_positions) + ")")

    for i in range(len(facs)):
        for j in range(i + 1, len(facs)):
            if segments_linked(facs[i], facs[j]):
                witnesses.append(f"factors {i + 1} and {j + 1} linked")
            if segments_linked(facs[i], facs[j].dual()):
                witnesses.append(
                    f"factor {i + 1} linked with dual of factor {j + 1}")

    for i, f in enumerate(facs):
        if metaplectic and f.is_trivial_steinberg:
            s4 = 2 * f.center.twice          # the integer 4s
            for rho, a, _ in phi.summands:
                if rho.is_trivial_character and a % 2 == 0 and a < s4:
                    witnesses.append(f"a={a} < 4s={s4}")
        else:
            if not gamma.so_rank1_standard_irreducible(
                    f.unitarized(), phi, f.center):
                witnesses.append(
                    f"rank-one module of factor {i + 1} ({f}) reduces")

    return GenericityVerdict(not witnesses, tuple(witnesses))


@lru_cache(maxsize=None)
def is_generic_lq_via_coeff(pi: LanglandsDatum) -> bool:
    """Route B: genericity via holomorphy of the full local coefficient.

    The coefficient is a product of factor families, one per pair of inducing
    factors and orientation plus one Siegel-type family per factor; it is
    holomorphic at the evaluation point iff every family's total order there
    is non-negative.
    """
    _check_standard(pi)
    work = pi.untwisted()
    facs = work.gl_factors
    phi = work.tempered.param
    metaplectic = work.tempered.flavor == METAPLECTIC

    for i in range(len(facs)):
        for j in range(i + 1, len(facs)):
            if gamma.ord_gamma_rs(facs[i], facs[j].dual(), ZERO) < 0:
                return False
            if gamma.ord_gamma_rs(facs[i], facs[j], ZERO) < 0:
                return False

    for f in facs:
        order = (gamma.ord_gamma_sym2(f, ZERO)
                 + gamma.ord_gamma_vs_parameter(phi, f, ZERO))
        if metaplectic:
            order -= gamma.ord_gamma_std(f, HALF)
        if order < 0:
            return False
    return True


@lru_cache(maxsize=None)
def mp_rank1_irreducible(seg: Segment, sigma: TemperedRep) -> bool:
    """Irreducibility of the rank-one metaplectic standard module attached
    to a factor with positive exponent over a generic tempered part."""
    if not seg.center > ZERO:
        raise ValueError(f"factor {seg} has exponent {seg.center} <= 0")
    if sigma.flavor != METAPLECTIC:
        raise ValueError("rank-one test is for the metaplectic side")
    if not seg.is_trivial_steinberg:
        return gamma.so_rank1_standard_irreducible(
            seg.unitarized(), sigma.param, seg.center)
    if l_of_tempered(sigma) == 2:
        # genericity forces s = 1/2 here, where the module is irreducible
        return True
    if seg.center == HALF:
        return False
    a0 = sigma.param.a0
    return a0 is not None and 2 * seg.center.twice == a0


@lru_cache(maxsize=None)
def standard_module_reducible(pi: LanglandsDatum) -> ReducibilityVerdict:
    """Reducibility of the full standard module of a generic Langlands
    quotient: it reduces exactly when the (unique) trivial-Steinberg factor
    has a reducible rank-one module."""
    verdict = is_generic_lq(pi)
    if not verdict:
        raise NotGenericError(verdict.witnesses)
    work = pi.untwisted()
    if work.tempered.flavor != METAPLECTIC:
        return ReducibilityVerdict(False, ())
    witnesses = []
    for f in work.gl_factors:
        if f.is_trivial_steinberg and not mp_rank1_irreducible(
                f, work.tempered):
            s4 = 2 * f.center.twice
            a0 = work.tempered.param.a0
            if f.center == HALF:
                reason = f"factor {f}: rank-one module reduces (no 2-dim " \
                         "trivial block in the parameter)"
            else:
                a0_text = "none" if a0 is None else str(a0)
                reason = f"factor {f}: 4s={s4} < a0={a0_text}"
            witnesses.append(reason)
    return ReducibilityVerdict(bool(witnesses), tuple(witnesses))


@dataclass(frozen=True)
class CuspidalReducibility:
    s0: HalfInt
    position: str                   # "subrepresentation" | "quotient"
    both_generic_at_zero: bool = False


def cuspidal_reducibility_point(tau: Cuspidal, sigma_param: LParameter,
                                has_s2: bool) -> CuspidalReducibility:
    """Reducibility point and generic-constituent position for a self-dual
    cuspidal GL symbol against a cuspidal generic tempered part."""
    if not tau.is_self_dual:
        raise ValueError(f"{tau} is not self-dual")
    if has_s2 != (sigma_param.m_s2 > 0):
        raise ValueError("has_s2 flag disagrees with the parameter")
    base = sigma_param.minus(Cuspidal.trivial(), 2) if has_s2 else sigma_param

    if tau.is_symplectic:
        if base.mult(tau, 1) > 0:
            return CuspidalReducibility(ONE, "subrepresentation")
        return CuspidalReducibility(ZERO, "subrepresentation",
                                    both_generic_at_zero=True)
    if not has_s2:
        position = "quotient" if tau.is_trivial_character else "subrepresentation"
        return CuspidalReducibility(HALF, position)
    if tau.is_trivial_character:
        return CuspidalReducibility(HalfInt(3), "subrepresentation")
    return CuspidalReducibility(HALF, "subrepresentation")


def generic_transfer_is_generic(pi: LanglandsDatum) -> bool:
    """Whether the equal-rank transfer of a generic quotient stays generic:
    true iff no factor has the trivial-Steinberg form."""
    verdict = is_generic_lq(pi)
    if not verdict:
        raise NotGenericError(verdict.witnesses)
    return not any(f.is_trivial_steinberg
                   for f in pi.untwisted().gl_factors)


def theta_psi_transfer(pi: LanglandsDatum) -> LanglandsDatum:
    """Equal-rank transfer: flips the tempered flavor, keeps the GL factors
    and the parameter.  An involution."""
    other = ODD_ORTHOGONAL if pi.tempered.flavor == METAPLECTIC else METAPLECTIC
    sigma = TemperedRep(other, pi.tempered.param, pi.tempered.sign)
    return LanglandsDatum(pi.gl_factors, sigma, pi.psi_twist)


def discrete_series_embedding(phi: LParameter):
    """Segments of the standard embedding of a generic discrete series of
    the odd orthogonal group, plus an opaque residual cuspidal-support tag.

    Per support symbol the block sizes are paired in ascending order; an
    odd leftover contributes the half-open trailing segment, dropped when
    empty.
    """
    errors = validate_parameter(phi)
    if errors:
        raise ValueError("invalid parameter: " + "; ".join(errors))
    if not phi.is_discrete:
        raise ValueError("parameter is not discrete (a multiplicity > 1)")
    segments = []
    by_rho = {}
    for rho, a, _ in phi.summands:
        by_rho.setdefault(rho, []).append(a)
    for rho in sorted(by_rho, key=Cuspidal.sort_key):
        sizes = sorted(by_rho[rho])
        pairs, leftover = len(sizes) // 2, len(sizes) % 2
        for r in range(pairs):
            lo, hi = sizes[2 * r], sizes[2 * r + 1]
            segments.append(Segment(rho, -HalfInt(lo - 1), HalfInt(hi - 1)))
        if leftover:
            top = HalfInt(sizes[-1] - 1)
            start = HALF if sizes[-1] % 2 == 0 else ONE
            if start <= top:
                segments.append(Segment(rho, start, top))
    return segments, "sigma_cusp"
