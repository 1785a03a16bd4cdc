"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line verdict; the lines are printed in the
terminal summary (see conftest.py) and when run as a script.
"""
import itertools
import math
import time

import numpy as np
import pytest

from hopfcount import bicrossed as bc
from hopfcount.cohomology import (Cochain, class_key, coboundary, cyclic_h3_class, h2, is_nondegenerate,
                                  lifted_modulus, trivialize)
from hopfcount.families import (alpha_xi, appp_pair, build_cyclic_cocycles, build_family, build_omega_zeta_lambda,
                                family_pair, parse_family_spec)
from hopfcount.fiber_functors import classify_pairs, count_galois, enumerate_fiber_functor_pairs, galois_category
from hopfcount.groups import build_group, exponent
from hopfcount.morita import morita_invariants, standard_morita_targets, ut3_index

from oracles import coboundary_loop, cyclic_tilde_exponent, omega_closed_form, radical_is_trivial

RESULTS: dict = {}


def verdict(n, ok, detail):
    RESULTS[n] = (bool(ok), detail)
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    assert ok, line


def _nonresidue(p):
    return next(t for t in range(2, p) if pow(t, (p - 1) // 2, p) == p - 1)


def _appp(p, z, l):
    return parse_family_spec(f"appp:p={p},zeta={z},lambda={l}")


def _grid(p):
    t = _nonresidue(p)
    rows = [((z, 0), p if p > 3 else 1) for z in (1, t)]
    rows += [((z, l), 1 if p > 3 else 2) for z in range(1, p) for l in range(1, p)]
    return rows


def _run_grid(p):
    bad = []
    for (z, l), want in _grid(p):
        got = count_galois(_appp(p, z, l))[1]
        if got != want:
            bad.append(((z, l), got, want))
    return bad


def test_criterion_01_p3_counts():
    t0 = time.perf_counter()
    bad = _run_grid(3)
    dt = time.perf_counter() - t0
    verdict(1, not bad and dt < 10, f"p=3 grid, mismatches={bad}, {dt:.1f}s")


def test_criterion_02_p5_and_p7_counts():
    t0 = time.perf_counter()
    bad5 = _run_grid(5)
    t1 = time.perf_counter()
    bad7 = _run_grid(7)
    t2 = time.perf_counter()
    ok = not bad5 and not bad7 and t2 - t1 < 300
    verdict(2, ok, f"p=5 mismatches={bad5} ({t1 - t0:.0f}s), p=7 mismatches={bad7} ({t2 - t1:.0f}s)")


B_CASES = [(2, 3, 2), (2, 5, 4), (3, 7, 2)]
A_CASES = [(2, 3, 2), (2, 5, 4), (3, 7, 2)]     # (q, p, element of order q mod p)


def test_criterion_03_pq_counts():
    t0 = time.perf_counter()
    bad, red = [], []
    for p, q, m in B_CASES:
        r = (q - 1) // p
        for lam in range(p):
            if (lam + 1) % p == 0:
                continue
            P = parse_family_spec(f"bpqq:p={p},q={q},m={m},lam={lam},zeta=1")
            n = count_galois(P)[1]
            nd = count_galois(P, dual=True)[1]
            if n != 1:
                red.append((P.spec(), n, 1))
            if nd != r + 1:
                bad.append((P.spec() + " dual", nd, r + 1))
    for q, p, h in A_CASES:
        for l in range(q):
            P = parse_family_spec(f"apqq:p={p},q={q},h={h},t={h},l={l},eta=1")
            n = count_galois(P)[1]
            want = q if l == 0 else 1
            if n != want:
                bad.append((P.spec(), n, want))
    dt = time.perf_counter() - t0
    verdict(3, not bad and not red and dt < 120,
            f"B_lambda (computed, expected): {red or 'ok'}; other mismatches={bad}; {dt:.0f}s")


def test_criterion_04_h8():
    cat = galois_category(parse_family_spec("h8"))
    G = cat.G
    rep = classify_pairs(enumerate_fiber_functor_pairs(cat))
    t, abt, a = G.index("t"), G.index("a b t"), G.index("a")
    merged = False
    for k in rep.classes:
        Ls = {rep.candidates[i].L.elements: i for i in k.members}
        Lt, Labt = G.subgroup([t]).elements, G.subgroup([abt]).elements
        if Lt in Ls and Labt in Ls:
            i, j = Ls[Lt], Ls[Labt]
            w = k.witnesses.get(j) if i == k.representative else k.witnesses.get(i)
            merged = w is not None and w[0] == a
    others = [count_galois(parse_family_spec(f"h8:choice={c}"), dual=d)[1]
              for c in range(1, 64) for d in (False, True)]
    ok = rep.count == 1 and merged and set(others) == {1}
    verdict(4, ok, f"count={rep.count}, <t>~<abt> via a: {merged}, all 64 realizations count 1: {set(others) == {1}}")


def test_criterion_05_kac_vs_closed_form():
    bad = []
    for z, l in itertools.product(range(3), repeat=2):
        w = bc.kac_omega(*appp_pair(3, z, l))
        if not (w.values == build_omega_zeta_lambda(3, z, l).values).all():
            bad.append((3, z, l))
    # independent loop formula on a slice, full tables above
    w = build_omega_zeta_lambda(3, 2, 1)
    for g1, g2, g3 in itertools.product(range(27), repeat=3):
        if w.values[g1, g2, g3] != omega_closed_form(3, 2, 1, g1, g2, g3):
            bad.append(("closed", g1, g2, g3))
            break
    rng = np.random.default_rng(2024)
    for z, l in [(1, 0), (2, 3), (4, 1)]:
        kw = bc.kac_omega(*appp_pair(5, z, l))
        cw = build_omega_zeta_lambda(5, z, l)
        idx = tuple(rng.integers(0, 125, (3, 10 ** 6)))
        if not (kw.values[idx] == cw.values[idx]).all():
            bad.append((5, z, l))
    verdict(5, not bad, f"19683 tuples x 9 at p=3, 10^6 samples x 3 at p=5, mismatches={bad}")


def test_criterion_06_cyclic_tilde_classes():
    bad = []
    for N in (3, 5, 7):
        C = build_group(f"cyclic:{N}").whole()
        for xi in range(N):
            k = cyclic_h3_class(build_cyclic_cocycles(N, xi, "tilde"), C, 1)
            want = xi * (N - 1) * N * (2 * N - 1) // 6 % N
            if k != want or k != cyclic_tilde_exponent(N, xi) or (N > 3 and k):
                bad.append((N, xi, k, want))
    verdict(6, not bad, f"N in 3,5,7 all xi, mismatches={bad}")


def test_criterion_07_h2_facts():
    bad = []
    for q in (2, 3, 5):
        G = build_group(f"product:cyclic:{q};cyclic:{q}")
        H = h2(G, q)
        keys = {class_key(alpha_xi(q, x)) for x in range(q)}
        if H.order != q or len(keys) != q:
            bad.append(("ZqxZq", q, H.order, len(keys)))
    for spec in ("bgroup:2,3,2,0", "bgroup:2,5,4,0"):
        G = build_group(spec)
        if not h2(G, exponent(G)).is_trivial():
            bad.append(spec)
    for N in range(1, 10):
        if not h2(build_group(f"cyclic:{N}"), N).is_trivial():
            bad.append(f"cyclic:{N}")
    verdict(7, not bad, f"failures={bad}")


def test_criterion_08_omega_nontrivial_p3():
    t0 = time.perf_counter()
    bad = []
    for z, l in itertools.product(range(3), repeat=2):
        w = build_omega_zeta_lambda(3, z, l)
        if z == 0 and l != 0:
            continue
        assert lifted_modulus(w) == 3 * 27
        trivial = trivialize(w) is not None
        if trivial != (z == 0):
            bad.append((z, l))
    dt = time.perf_counter() - t0
    verdict(8, not bad and dt < 300, f"6 pairs nontrivial, (0,0) trivial at modulus 81; failures={bad}; {dt:.1f}s")


def test_criterion_09_verify_hopf():
    bad = []
    specs = [f"appp:p=3,zeta={z},lambda={l}" for z in (1, 2) for l in range(3)]
    specs += ["bpqq:p=2,q=3,m=2,lam=0,zeta=1", "apqq:p=3,q=2,h=2,t=2,l=0,eta=1",
              "apqq:p=3,q=2,h=2,t=2,l=1,eta=1", "h8"]
    for s in specs:
        _, _, B = build_family(parse_family_spec(s))
        rep = bc.verify_hopf(B)
        if not rep.ok or rep.antipode_status != "ok":
            bad.append(s)
    for z, l in [(1, 0), (2, 3)]:
        _, _, B = build_family(_appp(5, z, l))
        rep = bc.verify_hopf(B, antipode_cap=100)
        if not (rep.ok and rep.antipode_status == "skipped" and all(ok for ok, _ in rep.checks.values())):
            bad.append(f"p=5 {z},{l}")
    verdict(9, not bad, f"{len(specs)} full checks + 2 bialgebra-only at p=5, failures={bad}")


def test_criterion_10_morita_p3():
    T = standard_morita_targets(3)
    rep = morita_invariants(T)
    parent = {t: t for t in T}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in rep.unseparated_pairs:
        parent[find(a)] = find(b)
    n_classes = len({find(t) for t in T})
    unsep = {frozenset(p) for p in rep.unseparated_pairs}
    want = {frozenset(("dual:ut3:3", "group:ut3:3")), frozenset(("dual:t:3", "group:t:3"))}
    verdict(10, n_classes == 9 and unsep == want, f"{n_classes} classes, not separated here: {sorted(map(sorted, unsep))}")


def test_criterion_11_properties():
    rng = np.random.default_rng(7)
    bad = []
    # d o d = 0, against the loop coboundary as well
    for spec in ("ut3:3", "dihedral:8", "bgroup:2,3,2,0", "product:cyclic:2;cyclic:4"):
        G = build_group(spec)
        for M in (2, 12, 35):
            c = Cochain(G, 1, M, rng.integers(0, M, G.order))
            if not coboundary(coboundary(c)).is_zero():
                bad.append(("dd", spec, M))
        c = Cochain(G, 1, 12, rng.integers(0, 12, G.order))
        if not (coboundary(c).values == coboundary_loop(c.values, G.mul, 12)).all():
            bad.append(("loop", spec))
    # non-degeneracy is a class invariant
    for q in (2, 3, 5):
        for xi in range(q):
            a = alpha_xi(q, xi)
            G = a.group
            phi = rng.integers(0, q, G.order)
            phi[G.identity] = 0
            b = a + coboundary(Cochain(G, 1, q, phi))
            nd = is_nondegenerate(a)
            if nd != is_nondegenerate(b) or nd != (xi != 0) or nd != radical_is_trivial(b.values, G.mul, q):
                bad.append(("nondeg", q, xi))
    # counts survive reshuffling cocycle representatives
    for spec, dual in [("appp:p=3,zeta=1,lambda=2", False), ("apqq:p=3,q=2,h=2,t=2,l=0,eta=1", False),
                       ("bpqq:p=2,q=5,m=4,lam=0,zeta=1", True), ("h8", True)]:
        P = parse_family_spec(spec)
        base = count_galois(P, dual=dual)[1]
        cat = galois_category(P, dual=dual)
        for seed in (11, 12):
            if classify_pairs(enumerate_fiber_functor_pairs(cat, shift_seed=seed)).count != base:
                bad.append(("shift", spec, seed))
    # (b^j x)^n = a^(C(n,2) j) b^(jn) x^n
    for p in (3, 5, 7):
        G = build_group(f"ut3:{p}")
        for j in range(p):
            g = ut3_index(p, 0, j, 1)
            acc = G.identity
            for n in range(p + 1):
                if acc != ut3_index(p, math.comb(n, 2) * j, j * n, n):
                    bad.append(("powers", p, j, n))
                acc = int(G.mul[acc, g])
    # coprime factorizations give a trivial Kac cocycle
    coprime = [f"bpqq:p={p},q={q},m={m},lam={lam},zeta={z}" for p, q, m in B_CASES
               for lam in range(p) if (lam + 1) % p for z in range(1, q)]
    coprime += [f"apqq:p={p},q={q},h={h},t={h},l={l},eta=1" for q, p, h in A_CASES for l in range(q)]
    checked = 0
    for s in coprime:
        mp, cp = family_pair(parse_family_spec(s))
        if math.gcd(mp.F.order, mp.Gamma.order) != 1:
            continue
        checked += 1
        if trivialize(bc.kac_omega(mp, cp)) is None:
            bad.append(("coprime", s))
    if not checked:
        bad.append("no coprime instance")
    verdict(11, not bad, f"d^2=0, non-degeneracy, reshuffles, powers p=3,5,7, {checked} coprime instances; failures={bad}")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
