import json

import numpy as np
import pytest

from hopfcount import bicrossed as bc
from hopfcount.cohomology import is_cocycle, trivialize
from hopfcount.cyclotomic import CycloField
from hopfcount.families import (apqq_pair, appp_pair, bpqq_pair, build_omega_zeta_lambda, h8_matched_pair,
                                h8_pair)
from hopfcount.groups import DomainError, build_group, is_exact_factorization

from oracles import kac_omega_loop


def _trivial_actions(F, G):
    return bc.MatchedPair(F, G, np.tile(np.arange(F.order), (G.order, 1)),
                          np.tile(np.arange(G.order)[:, None], (1, F.order)))


def test_matched_pair_examples():
    mp, _ = appp_pair(3, 1, 1)
    assert bc.verify_matched_pair(mp)
    assert bc.verify_matched_pair(_trivial_actions(build_group("cyclic:4"), build_group("cyclic:3")))
    # x |> swaps a and b^2: a permutation of F that is not an automorphism
    rhd = mp.rhd.copy()
    rhd[1] = np.arange(9)
    rhd[1][[1, 6]] = rhd[1][[6, 1]]
    rhd[2] = rhd[1][rhd[1]]
    bad = bc.MatchedPair(mp.F, mp.Gamma, rhd, mp.lhd)
    viol = bc.matched_pair_violations(bad)
    assert viol and not bc.verify_matched_pair(bad)
    assert "s |> xy" in viol
    s, x, y = viol["s |> xy"]
    R, L, mul = bad.rhd, bad.lhd, bad.F.mul
    assert R[s][mul[x][y]] != mul[R[s][x]][R[L[s][x]][y]]


def test_double_group_embeddings():
    for mp in [appp_pair(3, 1, 0)[0], bpqq_pair(2, 3, 2, 0, 1)[0], apqq_pair(3, 2, 2, 2, 1, 1)[0], h8_matched_pair()]:
        D = mp.double_group()
        assert D.order == mp.F.order * mp.Gamma.order
        assert is_exact_factorization(D, mp.F_subgroup(), mp.Gamma_subgroup())
        # (x, s)(y, t) = (x (s |> y), (s <| y) t)
        nF = mp.F.order
        for a in range(0, D.order, max(1, D.order // 9)):
            for b in range(D.order):
                x, s = a % nF, a // nF
                y, t = b % nF, b // nF
                want = mp.F.mul[x, mp.rhd[s, y]] + nF * mp.Gamma.mul[mp.lhd[s, y], t]
                assert D.mul[a, b] == want


def test_cocycle_pair_examples():
    mp, cp = appp_pair(3, 1, 1)
    rep = bc.cocycle_pair_violations(mp, cp)
    assert all(ok for ok, _ in rep.values())
    assert bc.verify_cocycle_pair(mp, bc.CocyclePair.trivial(mp, 3))
    sig = cp.sigma.copy()
    sig[1, 1, 3] = (sig[1, 1, 3] + 1) % 3
    rep = bc.cocycle_pair_violations(mp, bc.CocyclePair(3, sig, cp.tau))
    ok, wit = rep["cocycle sigma"]
    assert not ok and wit is not None and len(wit) == 4


def test_build_bicrossed_dimensions():
    assert bc.build_bicrossed(*appp_pair(3, 1, 1)).dim == 27
    assert bc.build_bicrossed(*bpqq_pair(2, 3, 2, 0, 1)).dim == 18
    assert bc.build_bicrossed(*apqq_pair(3, 2, 2, 2, 0, 1)).dim == 12
    mp = h8_matched_pair()
    B = bc.build_bicrossed(mp, bc.CocyclePair.trivial(mp, 4))
    assert B.dim == 8 and B.is_commutative()
    with pytest.raises(DomainError):
        mp, cp = appp_pair(3, 1, 1)
        sig = cp.sigma.copy()
        sig[1, 1, 3] += 1
        bc.build_bicrossed(mp, bc.CocyclePair(3, sig, cp.tau))


def test_mult_sparsity_against_dense_oracle():
    mp, cp = appp_pair(3, 2, 1)
    B = bc.build_bicrossed(mp, cp)
    nF = mp.F.order
    for i in range(B.dim):
        for j in range(B.dim):
            x, g = i % nF, i // nF
            y, h = j % nF, j // nF
            # (e_g # x)(e_h # y) = delta_{g <| x, h} sigma_g(x, y) e_g # xy
            if mp.lhd[g, x] == h:
                assert B.mult_target[i, j] == mp.F.mul[x, y] + nF * g
                assert B.mult_phase[i, j] % 3 == cp.sigma[g, x, y]
            else:
                assert B.mult_target[i, j] == -1
    assert B.co_left.shape[1] == mp.Gamma.order


@pytest.mark.parametrize("name", ["appp", "bpqq", "apqq", "h8"])
def test_verify_hopf_passes(name):
    mp, cp = {"appp": lambda: appp_pair(3, 1, 1), "bpqq": lambda: bpqq_pair(2, 3, 2, 0, 1),
              "apqq": lambda: apqq_pair(3, 2, 2, 2, 1, 1), "h8": lambda: h8_pair(0)}[name]()
    rep = bc.verify_hopf(bc.build_bicrossed(mp, cp))
    assert rep.ok and rep.antipode_status == "ok"
    json.dumps(rep.to_json())


def test_group_algebra_antipode_is_inverse():
    F = build_group("dihedral:8")
    mp = _trivial_actions(F, build_group("cyclic:1"))
    B = bc.build_bicrossed(mp, bc.CocyclePair.trivial(mp, 1))
    rep = bc.verify_hopf(B)
    assert rep.antipode_status == "ok"
    K = CycloField(1)
    for a, row in enumerate(rep.antipode):
        assert row == [(int(F.inv[a]), K.one)]


def test_antipode_cap_skips():
    B = bc.build_bicrossed(*appp_pair(3, 1, 1))
    rep = bc.verify_hopf(B, antipode_cap=10)
    assert rep.antipode_status == "skipped" and rep.ok


def test_bialgebra_p5_within_cap():
    B = bc.build_bicrossed(*appp_pair(5, 2, 3))
    rep = bc.verify_hopf(B, antipode_cap=100)
    assert rep.antipode_status == "skipped"
    assert all(ok for ok, _ in rep.checks.values())


def test_broken_comultiplication_detected():
    mp, cp = appp_pair(3, 1, 1)
    tau = cp.tau.copy()
    tau[3, 1, 1] = (tau[3, 1, 1] + 1) % 3
    B = bc.build_bicrossed(mp, bc.CocyclePair(3, cp.sigma, tau), check=False)
    rep = bc.verify_hopf(B, antipode_cap=0)
    assert not rep.ok
    bad = [k for k, (ok, _) in rep.checks.items() if not ok]
    assert bad and all(rep.checks[k][1] is not None for k in bad)


@pytest.mark.parametrize("z,l", [(1, 0), (2, 1), (1, 2), (0, 1)])
def test_kac_omega_appp_vs_loop_and_closed_form(z, l):
    mp, cp = appp_pair(3, z, l)
    w = bc.kac_omega(mp, cp)
    loop = kac_omega_loop(mp.F.mul, mp.Gamma.mul, mp.rhd, mp.lhd, cp.sigma, cp.tau, 3)
    assert (w.values == loop).all()
    assert (w.values == build_omega_zeta_lambda(3, z, l).values).all()
    assert is_cocycle(w)


def test_kac_omega_zero_and_cocycle_everywhere():
    mp = h8_matched_pair()
    assert bc.kac_omega(mp, bc.CocyclePair.trivial(mp, 4)).is_zero()
    for mp, cp in [bpqq_pair(2, 3, 2, 0, 1), bpqq_pair(2, 5, 4, 0, 2), apqq_pair(3, 2, 2, 2, 1, 1), h8_pair(0)]:
        assert is_cocycle(bc.kac_omega(mp, cp))


@pytest.mark.parametrize("args", [(2, 3, 2, 0, 1), (2, 5, 4, 0, 1), (3, 7, 2, 0, 1), (3, 7, 2, 1, 3)])
def test_coprime_kac_omega_trivial(args):
    w = bc.kac_omega(*bpqq_pair(*args))
    assert not w.is_zero()
    assert trivialize(w) is not None


@pytest.mark.parametrize("maker", [lambda: appp_pair(3, 1, 1), lambda: appp_pair(3, 2, 2), lambda: h8_pair(0),
                                   lambda: bpqq_pair(2, 3, 2, 0, 1), lambda: apqq_pair(3, 2, 2, 2, 1, 1)])
def test_dual_pairing(maker):
    mp, cp = maker()
    H = bc.build_bicrossed(mp, cp)
    mp2, cp2 = bc.dual_data(mp, cp)
    assert bc.verify_matched_pair(mp2) and bc.verify_cocycle_pair(mp2, cp2)
    K = bc.build_bicrossed(mp2, cp2)
    assert bc.pairing_check(H, K, cop=True)


def test_dual_of_dual_is_isomorphic_data():
    mp, cp = appp_pair(3, 1, 2)
    mp2, cp2 = bc.dual_data(*bc.dual_data(mp, cp))
    assert mp2.F.order == mp.F.order and mp2.Gamma.order == mp.Gamma.order
    assert bc.verify_cocycle_pair(mp2, cp2)


def test_bicrossed_json():
    B = bc.build_bicrossed(*appp_pair(3, 1, 1))
    bc.verify_hopf(B)
    d = B.to_json()
    assert d["dimension"] == 27 and len(d["basis"]) == 27 and "antipode" in d
    json.dumps(d)
