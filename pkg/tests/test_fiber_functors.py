import json
import numpy as np
import pytest

from hopfcount.bicrossed import dual_data
from hopfcount.cohomology import Cochain, coboundary, conj_cochain, h2, omega_g
from hopfcount.families import build_family, parse_family_spec
from hopfcount.fiber_functors import (CategoryData, _category, classify_pairs, count_galois,
                                      enumerate_fiber_functor_pairs, galois_category, pair_equivalence)
from hopfcount.groups import DomainError, build_group


def _appp(p, z, l):
    return parse_family_spec(f"appp:p={p},zeta={z},lambda={l}")


def _Lj(G, p, j):
    return G.subgroup([j * p + p * p])


def test_enumerate_p5_lambda0_passing_are_Lj():
    p = 5
    cat = galois_category(_appp(p, 1, 0))
    rep = enumerate_fiber_functor_pairs(cat)
    passing = [rep.candidates[i] for i in rep.passing]
    assert all(c.beta_class_index == 0 for c in passing)
    classify_pairs(rep)
    assert rep.count == p
    # up to conjugacy the passing subgroups are exactly L_j = <b^j x>, one per class
    for k in rep.classes:
        Ls = {rep.candidates[i].L.elements for i in k.members}
        hits = [j for j in range(p) if _Lj(cat.G, p, j).elements in Ls]
        assert len(hits) == 1
    seen = {frozenset(c.L.conjugate(g).elements for g in range(cat.G.order)) for c in passing}
    assert len(seen) == p


def test_enumerate_p3_lambda0_only_gamma():
    p = 3
    cat = galois_category(_appp(p, 1, 0))
    rep = enumerate_fiber_functor_pairs(cat)
    classify_pairs(rep)
    assert rep.count == 1
    G = cat.G
    L0 = _Lj(G, p, 0)
    for i in rep.passing:
        assert any(rep.candidates[i].L == L0.conjugate(g) for g in range(G.order))


def test_enumerate_b_family_only_conjugates_of_F():
    # C(Gamma x| F, omega, Gamma, 1), p = 2, q = 3: all passing L have order p
    cat = galois_category(parse_family_spec("bpqq:p=2,q=3,m=2,lam=0,zeta=1"))
    rep = enumerate_fiber_functor_pairs(cat)
    orders = sorted(rep.candidates[i].L.order for i in rep.passing)
    assert orders and set(orders) == {2}


def test_b_dual_classes_r_plus_1():
    for (p, q, m), r in [((2, 3, 2), 1), ((2, 5, 4), 2), ((3, 7, 2), 2)]:
        rep, n = count_galois(parse_family_spec(f"bpqq:p={p},q={q},m={m},lam=0,zeta=1"), dual=True)
        assert n == r + 1 == (p + q - 1) // p
        for k in rep.classes:
            assert rep.candidates[k.representative].L.order == q * q


def test_h8_merge_witness_a():
    cat = galois_category(parse_family_spec("h8"))
    G = cat.G
    rep = classify_pairs(enumerate_fiber_functor_pairs(cat))
    assert rep.count == 1
    (k,) = rep.classes
    members = {rep.candidates[i].L.elements for i in k.members}
    t, abt, a = G.index("t"), G.index("a b t"), G.index("a")
    assert members == {G.subgroup([t]).elements, G.subgroup([abt]).elements}
    (m,) = [i for i in k.members if i != k.representative]
    g, _ = k.witnesses[m]
    assert g == a


def test_class_certificates_verify():
    # p = 3, lambda != 0: classes of three conjugate pairs, each with a checkable witness
    cat = galois_category(_appp(3, 1, 1))
    rep = classify_pairs(enumerate_fiber_functor_pairs(cat))
    assert rep.count == 2
    G = cat.G
    for k in rep.classes:
        A = rep.candidates[k.representative]
        for m, (g, cert) in k.witnesses.items():
            B = rep.candidates[m]
            assert A.L.conjugate(g) == B.L
            if cert is not None:
                N = cert.modulus
                X = (conj_cochain(B.beta, g).at_modulus(N).values.astype(np.int64)
                     - A.beta.at_modulus(N).values + omega_g(cat.omega, g, on=A.L).at_modulus(N).values)
                assert coboundary(cert) == Cochain(A.L.as_group(), 2, N, X % N, A.L)


def test_pair_equivalence_identity_and_non_conjugate():
    cat = galois_category(_appp(5, 1, 0))
    rep = enumerate_fiber_functor_pairs(cat)
    classify_pairs(rep)
    A, B = (rep.candidates[k.representative] for k in rep.classes[:2])
    assert pair_equivalence(cat, A, A)[0] == cat.G.identity
    assert pair_equivalence(cat, A, B) is None


@pytest.mark.parametrize("spec,dual", [("appp:p=3,zeta=1,lambda=1", False), ("appp:p=3,zeta=2,lambda=0", False),
                                       ("bpqq:p=2,q=3,m=2,lam=0,zeta=1", True), ("h8", False),
                                       ("apqq:p=3,q=2,h=2,t=2,l=0,eta=1", False)])
def test_count_invariant_under_coboundary_shifts(spec, dual):
    params = parse_family_spec(spec)
    base = count_galois(params, dual=dual)[1]
    cat = galois_category(params, dual=dual)
    for seed in (1, 2, 3):
        rep = enumerate_fiber_functor_pairs(cat, shift_seed=seed)
        classify_pairs(rep)
        assert rep.count == base


@pytest.mark.parametrize("spec", ["appp:p=3,zeta=1,lambda=1", "apqq:p=3,q=2,h=2,t=2,l=0,eta=1", "h8"])
def test_dual_of_dual_same_count(spec):
    params = parse_family_spec(spec)
    mp, cp, _ = build_family(params, check=False)
    direct = _category(mp, cp, "direct", rebase=False)
    twice = _category(*dual_data(*dual_data(mp, cp)), "twice", rebase=False)
    n1 = classify_pairs(enumerate_fiber_functor_pairs(direct)).count
    n2 = classify_pairs(enumerate_fiber_functor_pairs(twice)).count
    assert n1 == n2


def test_passing_pairs_are_exact_factorizations():
    for params, dual in [(_appp(3, 1, 1), False), (_appp(5, 2, 0), False),
                         (parse_family_spec("bpqq:p=2,q=3,m=2,lam=0,zeta=1"), True)]:
        cat = galois_category(params, dual=dual)
        rep = enumerate_fiber_functor_pairs(cat)
        for i in rep.passing:
            L = rep.candidates[i].L
            assert len(L.intersection(cat.F)) == 1
            assert L.order * cat.F.order == cat.G.order


def test_count_equals_h2_of_F_for_lambda0():
    p = 5
    cat = galois_category(_appp(p, 2, 0))
    assert count_galois(_appp(p, 2, 0))[1] == h2(cat.F.as_group(), p).order == p


def test_failed_conditions_recorded():
    cat = galois_category(_appp(3, 1, 0))
    rep = enumerate_fiber_functor_pairs(cat)
    statuses = {c.status for c in rep.candidates}
    assert statuses <= {"pass", "i", "ii", "iii"} and {"i", "ii"} <= statuses
    for c in rep.candidates:
        if c.status == "ii":
            assert c.L.order * cat.F.order != cat.G.order * len(c.L.intersection(cat.F))


def test_non_abelian_square_intersection_is_an_error():
    G = build_group("dihedral:16")
    F = G.whole()
    cat = CategoryData(G, Cochain.zero(G, 3, 8), F, Cochain.zero(G, 2, 8, F), "d16")
    with pytest.raises(DomainError):
        enumerate_fiber_functor_pairs(cat)


def test_category_check_and_json():
    cat = galois_category(parse_family_spec("bpqq:p=2,q=5,m=4,lam=0,zeta=1"), dual=True)
    cat.check()
    assert cat.omega_zero and not cat.alpha.is_zero()
    rep, n = count_galois(parse_family_spec("appp:p=3,zeta=1,lambda=2"))
    d = rep.to_json()
    json.dumps(d)
    assert d["galois_object_count"] == n == 2
    assert {"category", "candidates", "classes"} <= set(d)


def test_jobs_give_same_answer():
    params = _appp(3, 2, 1)
    assert count_galois(params, jobs=3)[1] == count_galois(params, jobs=1)[1] == 2
