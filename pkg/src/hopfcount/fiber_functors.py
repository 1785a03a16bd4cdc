"""Fiber functors on group-theoretical categories C(G, omega, F, alpha).

A fiber functor is given by a pair (L, beta): L a subgroup of G and beta a
2-cochain on L with d(beta) = omega|_L, such that

  (i)   omega|_L is cohomologically trivial,
  (ii)  L F = G,
  (iii) alpha - beta restricted to F n L is non-degenerate.

Two pairs are equivalent when L' = g L g^-1 and the 2-cocycle
conj(beta', g) - beta + Omega_g|_L is a coboundary on L.

beta only needs to range over psi_L + (one cocycle per H^2(L) class), where
d(psi_L) = omega|_L: taking g = e in the equivalence (Omega_e = 0 for a
normalized omega) identifies cohomologous choices.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from .bicrossed import dual_data, kac_omega
from .cohomology import (
    Cochain,
    coboundary,
    conj_cochain,
    h2,
    is_cocycle,
    is_nondegenerate,
    omega_g,
    restrict,
    trivialize,
)
from .families import FamilyParams, build_family
from .groups import DomainError, FiniteGroup, Subgroup, exponent, subgroups


@dataclass
class CategoryData:
    G: FiniteGroup
    omega: Cochain
    F: Subgroup
    alpha: Cochain
    name: str = ""

    def check(self) -> None:
        if self.omega.degree != 3 or self.omega.group is not self.G:
            raise DomainError("omega must be a 3-cochain on G")
        if not is_cocycle(self.omega):
            raise DomainError("omega is not a 3-cocycle")
        if self.alpha.degree != 2 or self.alpha.subgroup != self.F:
            raise DomainError("alpha must be a 2-cochain on F")
        N = math.lcm(self.omega.modulus, self.alpha.modulus)
        if not coboundary(self.alpha.at_modulus(N)) == restrict(self.omega.at_modulus(N), self.F):
            raise DomainError("d(alpha) differs from omega|_F")

    @cached_property
    def omega_zero(self) -> bool:
        return self.omega.is_zero()

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "omega_ref": self.name,
            "group_spec": self.G.spec,
            "group_order": self.G.order,
            "F_generators": [self.G.labels[g] for g in self.F.generators],
            "omega_modulus": self.omega.modulus,
            "omega_zero": self.omega_zero,
            "alpha_zero": self.alpha.is_zero(),
        }


@dataclass
class Candidate:
    L: Subgroup
    beta: Optional[Cochain]
    status: str                 # "pass", "i", "ii", "iii"
    beta_class_index: Optional[int] = None

    def to_json(self) -> dict:
        G = self.L.parent
        return {
            "subgroup_generators": [G.labels[g] for g in self.L.generators],
            "subgroup_order": self.L.order,
            "beta_class_index": self.beta_class_index,
            "status": self.status,
        }


@dataclass
class PairClass:
    representative: int                     # index into candidates
    members: list
    witnesses: dict = field(default_factory=dict)   # member -> (g, certificate)


@dataclass
class FiberFunctorReport:
    category: CategoryData
    candidates: list = field(default_factory=list)
    classes: Optional[list] = None
    lift: object = True

    @property
    def passing(self) -> list:
        return [i for i, c in enumerate(self.candidates) if c.status == "pass"]

    @property
    def count(self) -> int:
        if self.classes is None:
            raise ValueError("pairs not classified yet")
        return len(self.classes)

    def to_json(self) -> dict:
        G = self.category.G
        out = {
            "category": self.category.to_json(),
            "candidates": [c.to_json() for c in self.candidates],
        }
        if self.classes is not None:
            cls = []
            for k in self.classes:
                rep = self.candidates[k.representative]
                cls.append({
                    "subgroup_generators": [G.labels[g] for g in rep.L.generators],
                    "subgroup_order": rep.L.order,
                    "beta_class_index": rep.beta_class_index,
                    "members": len(k.members),
                    "witnesses": {str(m): G.labels[g] for m, (g, _) in sorted(k.witnesses.items())},
                })
            out["classes"] = cls
            out["galois_object_count"] = len(self.classes)
        return out


# ----------------------------------------------------------------------
# helpers


def _sub_restrict(c: Cochain, K: Subgroup) -> Cochain:
    """Restrict a cochain living on the subgroup c.subgroup to K inside it."""
    L = c.subgroup
    pos = np.array([L.local(x) for x in K.elements], dtype=np.int64)
    vals = c.values[np.ix_(*([pos] * c.degree))]
    return Cochain(K.as_group(), c.degree, c.modulus, vals, K)


def _could_be_nondegenerate(K: Subgroup) -> bool:
    """A group with a non-degenerate 2-cocycle has square order (its twisted
    group algebra is a full matrix algebra) and is not cyclic unless trivial
    (cyclic groups have no 2-cohomology)."""
    n = K.order
    if n == 1:
        return True
    r = math.isqrt(n)
    return r * r == n and not K.is_cyclic()


# ----------------------------------------------------------------------
# enumeration


def enumerate_fiber_functor_pairs(cat: CategoryData, lift=True, jobs: int = 1,
                                  shift_seed: Optional[int] = None) -> FiberFunctorReport:
    """Candidates (L, beta) over all subgroups L and H^2(L) classes.

    shift_seed adds a random coboundary to every beta; counts must not change.
    """
    G = cat.G
    F = cat.F
    rng = np.random.default_rng(shift_seed) if shift_seed is not None else None
    Ls = subgroups(G)
    cyclic_subs = [C for C in Ls if C.order > 1 and C.is_cyclic()]
    cyclic_trivial: dict = {}

    def obstructed(L: Subgroup) -> bool:
        # omega|_C nontrivial for a cyclic C inside L forces omega|_L nontrivial
        if L.is_cyclic():
            return False
        for C in cyclic_subs:
            if C.order < L.order and C._set <= L._set:
                if C not in cyclic_trivial:
                    cyclic_trivial[C] = trivialize(restrict(cat.omega, C), lift) is not None
                if not cyclic_trivial[C]:
                    return True
        return False

    def one(L: Subgroup) -> list:
        K = L.intersection(F)
        if L.order * F.order != G.order * K.order:
            return [Candidate(L, None, "ii")]
        if not _could_be_nondegenerate(K):
            return [Candidate(L, None, "iii")]
        if not cat.omega_zero and obstructed(L):
            return [Candidate(L, None, "i")]
        psi = trivialize(restrict(cat.omega, L), lift)
        if psi is None:
            return [Candidate(L, None, "i")]
        LG = L.as_group()
        Mh = math.lcm(psi.modulus, exponent(LG))
        desc = h2(LG, Mh, lift=lift)
        N = math.lcm(psi.modulus, desc.modulus, cat.alpha.modulus)
        base = psi.at_modulus(N).values.astype(np.int64)
        aK = _sub_restrict(cat.alpha, K).at_modulus(N) if K.order > 1 else None
        out = []
        for idx, rep in enumerate(desc.representatives):
            vals = (base + rep.at_modulus(N).values) % N
            if rng is not None:
                phi = rng.integers(0, N, LG.order)
                phi[LG.identity] = 0
                vals = (vals + coboundary(Cochain(LG, 1, N, phi)).values) % N
            beta = Cochain(LG, 2, N, vals, L)
            if K.order > 1:
                if not K.is_abelian():
                    raise DomainError("non-degeneracy of a 2-cocycle on a non-abelian F n L is not supported")
                diff = aK - _sub_restrict(beta, K)
                ok = is_nondegenerate(diff)
            else:
                ok = True
            out.append(Candidate(L, beta, "pass" if ok else "iii", idx))
        return out

    if jobs and jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            parts = list(ex.map(one, Ls))
    else:
        parts = [one(L) for L in Ls]
    return FiberFunctorReport(cat, [c for part in parts for c in part], lift=lift)


# ----------------------------------------------------------------------
# classification


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def pair_equivalence(cat: CategoryData, A: Candidate, B: Candidate, lift=True):
    """(g, certificate) with B.L = g A.L g^-1 and conj(beta_B, g) - beta_A +
    Omega_g|_L a coboundary, or None."""
    G = cat.G
    L, L2 = A.L, B.L
    if L.order != L2.order:
        return None
    trivial_h2 = None
    N = math.lcm(A.beta.modulus, B.beta.modulus, cat.omega.modulus)
    bA = A.beta.at_modulus(N).values.astype(np.int64)
    bB0 = B.beta.at_modulus(N)
    omega_zero = cat.omega_zero
    for g in range(G.order):
        if L.conjugate(g) != L2:
            continue
        if trivial_h2 is None:
            LG = L.as_group()
            trivial_h2 = L.order == 1 or h2(LG, exponent(LG), lift=lift).order == 1
        if trivial_h2:
            return g, None
        vals = conj_cochain(bB0, g).values.astype(np.int64) - bA
        if not omega_zero:
            vals += omega_g(cat.omega, g, on=L).at_modulus(N).values
        cert = trivialize(Cochain(L.as_group(), 2, N, vals % N, L), lift)
        if cert is not None:
            return g, cert
    return None


def classify_pairs(report: FiberFunctorReport, jobs: int = 1) -> FiberFunctorReport:
    cat = report.category
    idx = report.passing
    uf = _UnionFind(len(report.candidates))
    todo = [(a, b) for ai, a in enumerate(idx) for b in idx[ai + 1:]
            if report.candidates[a].L.order == report.candidates[b].L.order]

    def test(ab):
        a, b = ab
        return ab, pair_equivalence(cat, report.candidates[a], report.candidates[b], report.lift)

    if jobs and jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            results = list(ex.map(test, todo))
        for (a, b), w in results:
            if w is not None:
                uf.union(a, b)
    else:
        for a, b in todo:
            if uf.find(a) != uf.find(b) and test((a, b))[1] is not None:
                uf.union(a, b)
    groups: dict = {}
    for i in idx:
        groups.setdefault(uf.find(i), []).append(i)
    classes = []
    for root in sorted(groups):
        k = PairClass(root, groups[root])
        for m in k.members:
            if m != root:
                # direct witness against the representative
                w = pair_equivalence(cat, report.candidates[root], report.candidates[m], report.lift)
                if w is None:
                    raise ArithmeticError("pair equivalence is not transitive")
                k.witnesses[m] = w
        classes.append(k)
    report.classes = classes
    return report


# ----------------------------------------------------------------------
# family front end


def _category(mp, cp, name: str, rebase: bool, lift=True) -> CategoryData:
    G = mp.double_group()
    omega = kac_omega(mp, cp)
    F = mp.F_subgroup()
    alpha = Cochain.zero(F.as_group(), 2, omega.modulus, F)
    if rebase:
        # omega = d(psi): move to C(G, 1, F, alpha - psi|_F)
        psi = trivialize(omega, lift)
        if psi is None:
            raise DomainError("omega is not cohomologically trivial")
        N = psi.modulus
        alpha = Cochain(F.as_group(), 2, N, (-restrict(psi, F).values) % N, F)
        omega = Cochain.zero(G, 3, N)
    return CategoryData(G, omega, F, alpha, name)


def galois_category(params: FamilyParams, dual: bool = False, lift=True) -> CategoryData:
    """Category whose fiber functors count right Galois objects of the named
    Hopf algebra (dual=False) or of its dual.

    The bicrossed product H built for a family has Galois objects of H^*
    counted by C(F x Gamma, omega(H), F, 1); those of H itself use the dual
    bicrossed data on (Gamma^op, F).  For appp, apqq and h8 the named algebra
    is isomorphic to H^*; for bpqq it is H.
    """
    mp, cp, _ = build_family(params, check=False)
    use_dual = (params.family == "bpqq") != bool(dual)
    if use_dual:
        mp, cp = dual_data(mp, cp)
    name = params.spec() + (" (dual)" if dual else "")
    # coprime |F|, |Gamma|: omega is a coboundary, work with omega = 1
    rebase = params.family == "bpqq"
    return _category(mp, cp, name, rebase, lift)


def count_galois(params: FamilyParams, dual: bool = False, lift=True, jobs: int = 1):
    cat = galois_category(params, dual, lift)
    rep = enumerate_fiber_functor_pairs(cat, lift=lift, jobs=jobs)
    classify_pairs(rep, jobs=jobs)
    return rep, rep.count
