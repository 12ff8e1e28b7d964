import random

import pytest

from mptheta.core import (HALF, ONE, TRIVIAL_CHI, ZERO, Cuspidal, HalfInt,
                          QuadChar, Segment, character_segment,
                          segments_linked)

H = HalfInt   # H(t) is t/2


def test_halfint_arithmetic_is_exact():
    assert H(1) + H(1) == ONE
    assert H(3) - H(1) == ONE
    assert -H(1) == H(-1)
    assert 3 * H(1) == H(3)
    assert H(1) + 1 == H(3)
    assert 2 - H(1) == H(3)
    assert H(4).halved() == ONE
    with pytest.raises(ValueError):
        H(1).halved()


def test_halfint_ordering_and_parity():
    assert H(1) < H(2) < H(3)
    assert H(2) == 1 and H(1) != 1
    assert H(2).is_integer and not H(2).is_strict_half
    assert H(3).is_strict_half and not H(3).is_integer
    assert sorted([H(3), ZERO, H(-1)]) == [H(-1), ZERO, H(3)]


def test_halfint_parse_and_render():
    assert HalfInt.parse("3/2") == H(3)
    assert HalfInt.parse("-1/2") == H(-1)
    assert HalfInt.parse("2") == H(4)
    assert HalfInt.parse("4/2") == H(4)
    assert str(H(3)) == "3/2" and str(H(4)) == "2" and str(H(-1)) == "-1/2"
    assert H(3).json() == "3/2" and H(4).json() == "4/2"


def test_quadchar_group_structure():
    a = QuadChar.named("a")
    b = QuadChar.named("b")
    assert TRIVIAL_CHI.is_trivial
    assert a * TRIVIAL_CHI == a
    assert a * a == TRIVIAL_CHI
    assert a * b == b * a
    assert (a * b) * b == a
    assert QuadChar.named("a.b") == a * b


def test_cuspidal_constructors_and_validation():
    triv = Cuspidal.trivial()
    assert triv.is_trivial_character and triv.dim == 1 and triv.is_orthogonal
    chi = Cuspidal.character(QuadChar.named("a"))
    assert chi.dim == 1 and chi.is_orthogonal and not chi.is_trivial_character
    with pytest.raises(ValueError):
        Cuspidal.named("1", 1, "o")
    with pytest.raises(ValueError):
        Cuspidal("y", 0, "o")
    with pytest.raises(ValueError):
        Cuspidal("y", 2, "x")


def test_cuspidal_dual_is_involutive():
    for rho in (Cuspidal.trivial(),
                Cuspidal.character(QuadChar.named("a")),
                Cuspidal.named("x", 2, "s"),
                Cuspidal.named("y", 3, "n"),
                Cuspidal.named("y", 3, "n").twisted(QuadChar.named("a"))):
        assert rho.dual().dual() == rho
    nsd = Cuspidal.named("y", 3, "n")
    assert nsd.dual() != nsd and nsd.dual().base == "y~"


def test_segment_new_examples():
    st2_shift = Segment(Cuspidal.trivial(), HALF, H(3))
    assert st2_shift == Segment.steinberg(2, ONE)
    assert st2_shift.center == 1 and st2_shift.length == 2
    st2 = Segment.steinberg(2)
    assert st2.b == H(-1) and st2.a == HALF and st2.center == ZERO
    with pytest.raises(ValueError):
        Segment(Cuspidal.trivial(), HALF, ZERO)
    with pytest.raises(ValueError):
        Segment(Cuspidal.trivial(), ZERO, HALF)   # non-integral span


def test_segment_dual_examples():
    seg = Segment(Cuspidal.trivial(), HALF, H(3))
    assert seg.dual() == Segment(Cuspidal.trivial(), H(-3), H(-1))
    st2 = Segment.steinberg(2)
    assert st2.dual() == st2
    rho = Cuspidal.named("y", 2, "n")
    seg = Segment(rho, ZERO, ONE)
    assert seg.dual() == Segment(rho.dual(), -ONE, ZERO)
    assert seg.dual().rho.base == "y~"


def test_segments_linked_examples():
    one_pt = character_segment(H(3))
    st2 = Segment.steinberg(2)
    assert segments_linked(one_pt, st2)                      # [3/2] vs [-1/2,1/2]
    seg = Segment(Cuspidal.trivial(), HALF, H(3))
    assert not segments_linked(seg, seg)                     # equal segments
    chi_pt = character_segment(H(3), QuadChar.named("a"))
    assert not segments_linked(character_segment(HALF), chi_pt)


def test_is_trivial_steinberg_examples():
    assert Segment(Cuspidal.trivial(), HALF, H(5)).is_trivial_steinberg
    assert character_segment(HALF).is_trivial_steinberg
    chi = QuadChar.named("a")
    assert not Segment(Cuspidal.character(chi), HALF, H(3)).is_trivial_steinberg
    assert not Segment.steinberg(2).is_trivial_steinberg    # b = -1/2


def test_twist_segment_examples():
    chi = QuadChar.named("a")
    st2v1 = Segment(Cuspidal.trivial(), HALF, H(3))
    twisted = st2v1.twisted(chi)
    assert twisted.rho == Cuspidal.character(chi)
    assert twisted.b == HALF and twisted.a == H(3)
    assert st2v1.twisted(TRIVIAL_CHI) == st2v1
    assert twisted.twisted(chi) == st2v1


def _segment_pool():
    chi = QuadChar.named("a")
    bases = [Cuspidal.trivial(), Cuspidal.character(chi),
             Cuspidal.named("x", 2, "s"), Cuspidal.named("y", 3, "n")]
    pool = []
    for rho in bases:
        for b_twice in range(-5, 4):
            for span in range(0, 4):
                pool.append(Segment(rho, H(b_twice), H(b_twice) + span))
    return pool


def test_segment_invariants_sweep():
    chi = QuadChar.named("a")
    pool = _segment_pool()
    rng = random.Random(97)
    for seg in pool:
        assert seg.dual().dual() == seg
        assert seg.twisted(chi).twisted(chi) == seg
        assert seg.twisted(chi).dual() == seg.dual().twisted(chi)
        assert seg.gl_dim >= 1
        assert seg.dual().center == -seg.center
        assert not segments_linked(seg, seg)
        if seg.is_trivial_steinberg:
            assert seg.center >= HALF
            assert seg.rho.twist.is_trivial
    for _ in range(300):
        s1, s2 = rng.choice(pool), rng.choice(pool)
        assert segments_linked(s1, s2) == segments_linked(s2, s1)


def test_linked_matches_definition_on_sample():
    # direct containment/union reformulation as an independent check
    pool = [s for s in _segment_pool() if s.rho == Cuspidal.trivial()]
    for s1 in pool:
        for s2 in pool:
            if (s1.b.twice - s2.b.twice) % 2:
                assert not segments_linked(s1, s2)   # different lattices
                continue
            p1, p2 = set(x.twice for x in s1.points()), \
                     set(x.twice for x in s2.points())
            union = p1 | p2
            contiguous = (max(union) - min(union)) // 2 + 1 == len(union)
            expected = (not p1 <= p2 and not p2 <= p1 and contiguous)
            assert segments_linked(s1, s2) == expected
