"""Order-of-vanishing engine for Shahidi-type gamma factors at real points.

Every quantity here is the integer order of a meromorphic factor at an exact
half-integer point: -k is a pole of order k, +k a zero of order k, 0 a unit.
Orders add under products, so each computation reduces to counting the
elementary factors whose pole (at argument 1) or zero (at argument 0) lands
on the evaluation point.

Elementary rules:
  * standard gamma of a cuspidal: active only for the trivial character;
  * Rankin-Selberg gamma of a pair: active iff the second symbol is the
    formal contragredient of the first (base and twist);
  * symmetric-square gamma of a cuspidal: active iff the symbol is of
    orthogonal self-dual type.

Orders are computed at real points only; complex poles of unramified
L-factors off the real axis are treated as absent.  Epsilon factors and
exponential prefactors are units everywhere and never materialized.
"""

from __future__ import annotations

from functools import lru_cache

from .core import HALF, ONE, ZERO, Cuspidal, HalfInt, Segment


def _rs_active(rho1: Cuspidal, rho2: Cuspidal) -> bool:
    return rho2 == rho1.dual()


def _count_cross(s1: Segment, s2: Segment, c: HalfInt) -> int:
    """Number of pairs (x, y) with x in s1, y in s2 and x + y = c."""
    if (c.twice - s1.b.twice - s2.b.twice) % 2:
        return 0
    lo = max(s1.b.twice, c.twice - s2.a.twice)
    hi = min(s1.a.twice, c.twice - s2.b.twice)
    if hi < lo:
        return 0
    return (hi - lo) // 2 + 1


def _count_points(seg: Segment, c: HalfInt) -> int:
    if (c.twice - seg.b.twice) % 2:
        return 0
    return 1 if seg.b <= c <= seg.a else 0


def _count_internal_pairs(seg: Segment, c: HalfInt) -> int:
    """Number of pairs i < j inside the segment with i + j = c."""
    ordered = _count_cross(seg, seg, c)
    diagonal = _count_points(seg, c.halved()) if c.twice % 2 == 0 else 0
    return (ordered - diagonal) // 2


def ord_gamma_std(seg: Segment, u0: HalfInt) -> int:
    """Order at u0 of the standard gamma factor of the segment.

    After telescoping the product over the segment there is one pole
    candidate at u = 1 - b and one zero candidate at u = -a, active only
    for the trivial character.
    """
    if not seg.rho.is_trivial_character:
        return 0
    order = 0
    if u0 == HalfInt(2) - seg.b:
        order -= 1
    if u0 == -seg.a:
        order += 1
    return order


def ord_gamma_rs(seg1: Segment, seg2: Segment, u0: HalfInt) -> int:
    """Order at u0 of the Rankin-Selberg gamma factor of two segments,
    exponents included in the endpoints."""
    if not _rs_active(seg1.rho, seg2.rho):
        return 0
    zeros = _count_cross(seg1, seg2, -u0)
    poles = _count_cross(seg1, seg2, HalfInt(2) - u0)
    return zeros - poles


def ord_gamma_sym2(seg: Segment, u0: HalfInt) -> int:
    """Order at u0 of the symmetric-square gamma factor of the segment.

    Expands to cross factors over point pairs i < j (active for self-dual
    base) and diagonal factors at 2i (active for orthogonal base).
    """
    order = 0
    if seg.rho.is_self_dual:
        order += _count_internal_pairs(seg, -u0)
        order -= _count_internal_pairs(seg, HalfInt(2) - u0)
    if seg.rho.is_orthogonal:
        if (-u0).twice % 2 == 0:
            order += _count_points(seg, (-u0).halved())
        pole_arg = HalfInt(2) - u0
        if pole_arg.twice % 2 == 0:
            order -= _count_points(seg, pole_arg.halved())
    return order


def _summands(phi):
    # accepts an LParameter-like object or a bare iterable of (rho, a, mult)
    return tuple(getattr(phi, "summands", phi))


@lru_cache(maxsize=None)
def _summand_segment(rho: Cuspidal, a: int) -> Segment:
    half_span = HalfInt(a - 1)
    return Segment(rho, -half_span, half_span)


def ord_gamma_vs_parameter(phi, seg: Segment, u0: HalfInt) -> int:
    """Order at u0 of the gamma factor of the segment against a tempered
    parameter, by multiplicativity over its summands."""
    return _vs_summands(_summands(phi), seg, u0)


@lru_cache(maxsize=None)
def _vs_summands(summands, seg: Segment, u0: HalfInt) -> int:
    total = 0
    for rho, a, mult in summands:
        total += mult * ord_gamma_rs(seg, _summand_segment(rho, a), u0)
    return total


METAPLECTIC_MODE = "metaplectic"
ORTHOGONAL_MODE = "orthogonal"


def ord_local_coeff(seg: Segment, phi, mode: str, u0: HalfInt) -> int:
    """Order at u0 of the rank-one local coefficient for a segment (with its
    exponent folded into the endpoints) against a generic tempered parameter.

    Metaplectic mode divides by the standard gamma factor at u + 1/2; the
    orthogonal mode has no denominator.  The exponential prefactor is a unit.
    """
    if mode not in (METAPLECTIC_MODE, ORTHOGONAL_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    return _local_coeff(seg, _summands(phi), mode, u0)


@lru_cache(maxsize=None)
def _local_coeff(seg: Segment, summands, mode: str, u0: HalfInt) -> int:
    order = ord_gamma_sym2(seg, 2 * u0) + _vs_summands(summands, seg, u0)
    if mode == METAPLECTIC_MODE:
        order -= ord_gamma_std(seg, u0 + HALF)
    return order


def so_rank1_standard_irreducible(seg: Segment, phi, s0: HalfInt) -> bool:
    """Irreducibility of the rank-one standard module on the odd orthogonal
    side: the Langlands quotient is generic iff the local coefficient is
    holomorphic at the point, and the standard module conjecture holds there.

    ``seg`` is unitary (center 0) before the shift by s0 > 0.
    """
    if not s0 > ZERO:
        raise ValueError(f"exponent must be positive, got {s0}")
    return ord_local_coeff(seg.shifted(s0), phi, ORTHOGONAL_MODE, ZERO) >= 0


def ord_plancherel(seg: Segment, phi, s0: HalfInt) -> int:
    """Order at s0 of the rank-one Plancherel factor for a unitary segment
    against a generic tempered parameter (cross-check use)."""
    forward = ord_local_coeff(seg.shifted(s0), phi, METAPLECTIC_MODE, ZERO)
    backward = ord_local_coeff(seg.dual().shifted(-s0), phi,
                               METAPLECTIC_MODE, ZERO)
    return forward + backward


def gamma_breakdown(kind: str, segs, u0: HalfInt):
    """Per-elementary-factor contributions for the debug command.

    Returns (order, terms); each term lists the factor, the point where it
    is singular and its contribution at u0.
    """
    terms = []

    def note(desc, at, order):
        if order:
            terms.append({"factor": desc, "at": at.json(), "order": order})

    if kind == "std":
        (seg,) = segs
        if seg.rho.is_trivial_character:
            note(f"L(1-u, dual {seg})", HalfInt(2) - seg.b,
                 -1 if u0 == HalfInt(2) - seg.b else 0)
            note(f"L(u, {seg})", -seg.a, 1 if u0 == -seg.a else 0)
    elif kind == "rs":
        seg1, seg2 = segs
        if _rs_active(seg1.rho, seg2.rho):
            for x in seg1.points():
                for y in seg2.points():
                    arg = u0 + x + y
                    if arg == ZERO:
                        note(f"gamma(u+{x}+{y})", x + y, 1)
                    elif arg == ONE:
                        note(f"gamma(u+{x}+{y})", x + y, -1)
    elif kind == "sym2":
        (seg,) = segs
        pts = seg.points()
        if seg.rho.is_self_dual:
            for i, x in enumerate(pts):
                for y in pts[i + 1:]:
                    arg = u0 + x + y
                    if arg == ZERO:
                        note(f"gamma(u+{x}+{y}, rho x rho)", x + y, 1)
                    elif arg == ONE:
                        note(f"gamma(u+{x}+{y}, rho x rho)", x + y, -1)
        if seg.rho.is_orthogonal:
            for x in pts:
                arg = u0 + 2 * x
                if arg == ZERO:
                    note(f"gamma(u+{2 * x}, Sym2)", 2 * x, 1)
                elif arg == ONE:
                    note(f"gamma(u+{2 * x}, Sym2)", 2 * x, -1)
    else:
        raise ValueError(f"unknown gamma kind {kind!r}")
    return sum(t["order"] for t in terms), terms

