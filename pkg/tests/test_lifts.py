import pytest

from mptheta.core import (HALF, ONE, TRIVIAL_CHI, ZERO, Cuspidal, HalfInt,
                          QuadChar, Segment, character_segment)
from mptheta.lifts import (NONSPLIT, SPLIT, LiftLevel, Tower,
                           first_occurrence, lift_table, tempered_lift,
                           theta_lift)
from mptheta.reps import (METAPLECTIC, MU0, LParameter, NotGenericError,
                          TemperedRep, normalize_datum, theta_psi_transfer)

H = HalfInt
TRIV = Cuspidal.trivial()
RHO2 = Cuspidal.named("x", 2, "s")
CHI_V = QuadChar.named("v")


def mp(*summands) -> TemperedRep:
    return TemperedRep(METAPLECTIC, LParameter.of(summands))


def datum(factors, sigma, twist=TRIVIAL_CHI):
    return normalize_datum(factors, sigma, twist)


def params(sym):
    return None if sym.param is None else sym.param.summands


OMEGA = datum([character_segment(HALF)], MU0)   # rank-one datum over mu_0


def test_first_occurrence_fixtures():
    fo = first_occurrence(datum([], MU0))
    assert (fo.l, fo.m_down, fo.m_up, fo.down_branch) == (0, 1, 3, SPLIT)
    fo = first_occurrence(OMEGA)
    assert (fo.l, fo.m_down, fo.m_up) == (2, 1, 7)
    fo = first_occurrence(datum([], mp((TRIV, 2))))
    assert fo.l == 2
    # no nu^{1/2} factor, tempered invariant 2
    pi = datum([Segment(RHO2, HALF, HALF)], mp((TRIV, 2)))
    assert first_occurrence(pi).l == 2
    # trivial-Steinberg with s >= 1 does not move the first occurrence
    pi = datum([Segment(TRIV, HALF, H(3))], mp((TRIV, 4)))
    fo = first_occurrence(pi)
    assert fo.l == 0 and fo.m_down == 2 * pi.rank + 1


def test_first_occurrence_chi_tower():
    fo = first_occurrence(OMEGA, CHI_V)
    assert (fo.l, fo.m_down, fo.m_up) == (0, 3, 5)
    with pytest.raises(NotGenericError):
        first_occurrence(datum([character_segment(HALF)] * 2, MU0))


def test_lift_level_conversion():
    assert LiftLevel(0).target_dim(1) == 3
    assert LiftLevel(-4).target_dim(1) == 7
    with pytest.raises(ValueError):
        LiftLevel(1)
    with pytest.raises(ValueError):
        LiftLevel(4).target_dim(1)


def test_tempered_lift_down_tower():
    sigma = mp((TRIV, 4))
    r = tempered_lift(sigma, Tower(branch=SPLIT), -6)
    assert [str(f) for f in r.gl_factors] == \
        ["St(1) v^5/2", "St(1) v^3/2", "St(1) v^1/2"]
    assert r.tempered.level == 0 and params(r.tempered) == sigma.param.summands
    assert tempered_lift(sigma, Tower(branch=SPLIT), 2) is None


def test_tempered_lift_up_tower_cases():
    sigma0 = mp((TRIV, 4))                      # invariant 0
    r = tempered_lift(sigma0, Tower(branch=NONSPLIT), -6)
    assert [str(f) for f in r.gl_factors] == ["St(1) v^5/2", "St(1) v^3/2"]
    assert r.tempered.level == -2
    assert r.tempered.param == sigma0.param.plus(TRIV, 2)
    assert tempered_lift(sigma0, Tower(branch=NONSPLIT), 0) is None

    sigma_odd = mp((TRIV, 2))                   # S_2 multiplicity odd
    r = tempered_lift(sigma_odd, Tower(branch=NONSPLIT), -4)
    assert r.gl_factors == ()
    assert r.tempered.level == -4
    assert r.tempered.param == sigma_odd.param.plus(TRIV, 4)
    assert tempered_lift(sigma_odd, Tower(branch=NONSPLIT), -2) is None

    sigma_even = mp((TRIV, 2, 2))               # S_2 multiplicity 2h = 2
    r = tempered_lift(sigma_even, Tower(branch=NONSPLIT), -8)
    assert [str(f) for f in r.gl_factors] == \
        ["St(1) v^7/2", "St(1) v^5/2", "St(3) v^1/2"]
    assert r.tempered.level == -2
    assert r.tempered.param == sigma_even.param.minus(TRIV, 2)
    assert r.tempered.st2_copies == 0
    assert r.tempered.base.param == LParameter.of([])


def test_tempered_lift_down_with_invariant_two():
    sigma = mp((TRIV, 2))
    r = tempered_lift(sigma, Tower(branch=SPLIT), 2)
    assert r.gl_factors == () and r.tempered.level == 2
    assert r.tempered.param == LParameter.of([])
    r = tempered_lift(sigma, Tower(branch=SPLIT), 0)
    assert r.gl_factors == () and r.tempered.level == 0
    assert r.tempered.param == sigma.param


def test_theta_lift_first_lift_fixtures():
    r = theta_lift(OMEGA, Tower(branch=SPLIT), 2)
    assert r.gl_factors == () and r.tempered.level == 0
    assert r.target_dim == 1

    r = theta_lift(OMEGA, Tower(branch=SPLIT), 0)
    assert [str(f) for f in r.gl_factors] == ["St(1) v^1/2"]
    assert r.tempered.level == 0 and r.target_dim == 3

    r = theta_lift(OMEGA, Tower(branch=NONSPLIT), -4)
    assert r.gl_factors == (Segment(TRIV, HALF, H(3)),)
    assert r.tempered.level == -2
    assert r.tempered.param == LParameter.of([(TRIV, 2)])
    assert r.target_dim == 7

    assert theta_lift(OMEGA, Tower(branch=NONSPLIT), -2) is None
    assert theta_lift(OMEGA, Tower(branch=SPLIT), 4) is None


def test_theta_lift_sk_ge_one_fixtures():
    pi = datum([Segment(TRIV, HALF, H(3))], mp((TRIV, 4)))
    r = theta_lift(pi, Tower(branch=SPLIT), 0)
    assert [str(f) for f in r.gl_factors] == ["St(2) v^1"]
    assert r.tempered.level == 0 and r.tempered.param == pi.tempered.param
    r = theta_lift(pi, Tower(branch=NONSPLIT), -2)
    assert [str(f) for f in r.gl_factors] == ["St(2) v^1"]
    assert r.tempered.level == -2
    assert r.tempered.param == pi.tempered.param.plus(TRIV, 2)


def test_theta_lift_general_merge():
    seg = Segment(RHO2, ZERO, ONE).shifted(H(3))     # exponent 3/2
    pi = datum([seg], mp((TRIV, 4)))
    r = theta_lift(pi, Tower(branch=SPLIT), -2)
    assert r.gl_factors == (seg, character_segment(HALF))
    assert r.chain == (character_segment(HALF),)
    assert r.tempered.level == 0


def test_theta_lift_exceptional_level_two_with_invariant_two():
    pi = datum([character_segment(HALF)], mp((TRIV, 2)))
    r = theta_lift(pi, Tower(branch=SPLIT), 2)       # first occurrence
    assert r.gl_factors == ()
    assert r.tempered.level == 0 and r.tempered.param == pi.tempered.param
    r = theta_lift(pi, Tower(branch=SPLIT), 0)
    assert r.gl_factors == (character_segment(HALF),)
    assert r.tempered.level == 0


def test_theta_lift_half_case_deep_split_keeps_both_copies():
    r = theta_lift(OMEGA, Tower(branch=SPLIT), -2)
    assert [str(f) for f in r.gl_factors] == ["St(1) v^1/2", "St(1) v^1/2"]
    assert r.chain == (character_segment(HALF),)
    r = theta_lift(OMEGA, Tower(branch=NONSPLIT), -6)
    assert [str(f) for f in r.gl_factors] == ["St(1) v^5/2", "St(2) v^1"]


def test_lift_table_fixtures():
    table = lift_table(datum([], MU0), depth=2)
    assert sorted(r.target_dim for k, r in table.items() if k[0] == SPLIT) \
        == [1, 3, 5]
    assert sorted(r.target_dim for k, r in table.items() if k[0] == NONSPLIT) \
        == [3, 5, 7]
    table = lift_table(OMEGA, depth=1)
    assert sorted(r.target_dim for k, r in table.items() if k[0] == SPLIT) \
        == [1, 3]
    assert sorted(r.target_dim for k, r in table.items() if k[0] == NONSPLIT) \
        == [7, 9]
    assert len(lift_table(OMEGA, depth=0)) == 2


def test_chi_tower_lifts_follow_displayed_shape():
    pi = datum([character_segment(H(3), CHI_V), character_segment(HALF)], MU0)
    r = theta_lift(pi, Tower(CHI_V, SPLIT), 0)
    assert not r.extrapolated
    assert character_segment(H(3)) in r.gl_factors          # twist removed
    assert character_segment(HALF, CHI_V) in r.gl_factors   # twist acquired
    r = theta_lift(pi, Tower(CHI_V, NONSPLIT), -2)
    assert r.tempered.param is None and r.tempered.level == -2
    assert theta_lift(pi, Tower(CHI_V, SPLIT), 2) is None
    r = theta_lift(pi, Tower(CHI_V, NONSPLIT), -4)
    assert character_segment(H(3)) in r.chain                # untwisted chain


def test_chi_tower_extrapolation_flag():
    r = theta_lift(datum([], MU0), Tower(CHI_V, SPLIT), 0)
    assert r.extrapolated            # no untwisted Steinberg factor present
    pi = datum([character_segment(H(3), CHI_V), character_segment(HALF)], MU0)
    assert not theta_lift(pi, Tower(CHI_V, SPLIT), 0).extrapolated


def test_equal_rank_lift_matches_transfer():
    for pi in (OMEGA,
               datum([], mp((TRIV, 2))),
               datum([Segment(TRIV, HALF, H(3))], mp((TRIV, 4))),
               datum([Segment(RHO2, HALF, HALF)], mp((TRIV, 2)))):
        r = theta_lift(pi, Tower(branch=SPLIT), 0)
        transfer = theta_psi_transfer(pi)
        assert r.gl_factors == transfer.gl_factors
        assert r.tempered.param == transfer.tempered.param


def test_rank_accounting_on_samples():
    for pi in (OMEGA, datum([], mp((TRIV, 2, 2))),
               datum([Segment(TRIV, HALF, H(3))], mp((TRIV, 4)))):
        for (branch, level), r in lift_table(pi, depth=3).items():
            total = 2 * sum(f.gl_dim for f in r.gl_factors) + r.tempered.dim
            assert total == r.target_dim - 1


def test_tempered_lift_composite_with_higher_multiplicity():
    sigma = mp((TRIV, 2, 4), (RHO2, 1))          # S_2 multiplicity 2h = 4
    r = tempered_lift(sigma, Tower(branch=NONSPLIT), -4)
    assert [str(f) for f in r.gl_factors] == ["St(3) v^1/2"]
    assert r.tempered.st2_copies == 1
    assert r.tempered.param == sigma.param.minus(TRIV, 2)
    assert r.tempered.base.param == LParameter.of([(RHO2, 1)])
    total = 2 * sum(f.gl_dim for f in r.gl_factors) + r.tempered.dim
    assert total == r.target_dim - 1


def test_theta_lift_half_factor_over_even_multiplicity():
    pi = datum([character_segment(HALF)], mp((TRIV, 2, 2)))
    r = theta_lift(pi, Tower(branch=NONSPLIT), -6)
    assert [str(f) for f in r.gl_factors] == \
        ["St(1) v^5/2", "St(3) v^1/2", "St(1) v^1/2"]
    assert r.tempered.param == pi.tempered.param.minus(TRIV, 2)


def test_equal_rank_lift_matches_transfer_universe_sweep():
    import random
    from mptheta import universe
    from mptheta.reps import is_generic_lq
    rng = random.Random(3)
    data = [pi for pi in universe.datum_universe(max_rank=3)
            if is_generic_lq(pi).verdict]
    for pi in rng.sample(data, 400):
        r = theta_lift(pi, Tower(branch=SPLIT), 0)
        transfer = theta_psi_transfer(pi)
        assert r.gl_factors == transfer.gl_factors
        assert r.tempered.param == transfer.tempered.param


def test_theta_lift_input_validation():
    pi = datum([], MU0)
    with pytest.raises(ValueError):
        theta_lift(theta_psi_transfer(pi), Tower(branch=SPLIT), 0)
    with pytest.raises(ValueError):
        theta_lift(pi, Tower(branch=SPLIT), 1)
    with pytest.raises(NotGenericError):
        theta_lift(datum([character_segment(HALF)] * 2, MU0),
                   Tower(branch=SPLIT), 0)
    with pytest.raises(ValueError):
        lift_table(pi, depth=-1)


def test_theta_lift_of_twisted_datum_untwists_first():
    chi = QuadChar.named("a")
    # written in the chi-twisted coordinates, the factor is chi v^{3/2}
    pi = datum([character_segment(H(3), chi)], MU0, chi)
    r = theta_lift(pi, Tower(branch=SPLIT), 0)
    assert r.gl_factors == (character_segment(H(3)),)
    fo = first_occurrence(pi)
    assert fo.l == 0


def test_carried_factors_multiset_semantics():
    r = theta_lift(OMEGA, Tower(branch=SPLIT), -2)
    # two copies of nu^{1/2}: one carried, one from the chain
    assert r.gl_factors == (character_segment(HALF),) * 2
    assert r.carried_factors == (character_segment(HALF),)


def test_chi_tower_tables_satisfy_lift_properties():
    import random
    from mptheta import universe
    from mptheta.reps import is_generic_lq, standard_module_reducible
    from mptheta.universe import _check_chain_step, _check_one_lift
    rng = random.Random(9)
    data = [pi for pi in universe.datum_universe(max_rank=3)
            if is_generic_lq(pi).verdict]
    for pi in rng.sample(data, 250):
        smc = not standard_module_reducible(pi).reducible
        table = lift_table(pi, CHI_V, depth=3)
        for branch, l_first in ((SPLIT, 0), (NONSPLIT, -2)):
            assert theta_lift(pi, Tower(CHI_V, branch), l_first + 2) is None
            previous = None
            for k in range(4):
                result = table[(branch, l_first - 2 * k)]
                total = (2 * sum(f.gl_dim for f in result.gl_factors)
                         + result.tempered.dim)
                assert total == result.target_dim - 1
                assert _check_one_lift(pi, result, smc) == []
                if previous is not None:
                    assert _check_chain_step(pi, previous, result) == []
                previous = result
