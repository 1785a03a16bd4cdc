"""Computable categorical Morita invariants for the Hopf algebras of dimension p^3.

Every target is represented by a pointed category: k^L and kL by C(L, 1),
A_{zeta,g} by C(G, omega_{zeta,lambda}) with G = UT(3, p).  The invariants
below are computed on that representative; a pair of targets that no
implemented invariant tells apart is reported as "not separated here", which
is weaker than claiming the two are equivalent.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
from sympy import isprime

from .cohomology import Cochain, cyclic_h3_class, restrict, trivialize
from .families import build_omega_zeta_lambda, parse_family_spec
from .fiber_functors import count_galois
from .groups import DomainError, GroupSpecError, build_group, exponent, subgroups


class FeasibilityError(RuntimeError):
    """The requested computation is above the configured size cap."""


def _odd_prime(p):
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)) or p == 2:
        raise DomainError("p must be an odd prime")


def ut3_index(p: int, i: int, j: int, n: int) -> int:
    """Index of a^i b^j x^n in ut3:p."""
    return i % p + p * (j % p) + p * p * (n % p)


def check_omega_nontrivial(p: int, zeta_exp: int, lambda_exp: int, lift=True, cap: int = 3) -> bool:
    """True iff omega_{zeta,lambda} is not a coboundary on UT(3, p)."""
    _odd_prime(p)
    if p > cap:
        raise FeasibilityError(f"direct coboundary solving on UT(3,{p}) is above the cap p <= {cap}")
    return trivialize(build_omega_zeta_lambda(p, zeta_exp, lambda_exp), lift) is None


def nu_factor_identity_check(p: int, zeta_exp: int = 1, lambda_exp: int = 0,
                             omega: Optional[Cochain] = None) -> bool:
    """The five-factor omega combination entering the nu-cocycle of G/Z
    vanishes for all (i, i', j, j', l):

        w(b^i x^j, a^l, a^-l) + w(b^i' x^j', a^l, a^-l) + w(a^l, b^j' x^i', a^(-j i'))
        - w(b^i' x^j', a^l, a^(-j i')) - w(b^i' x^j', a^(l - j i'), a^-l)
    """
    _odd_prime(p)
    w = build_omega_zeta_lambda(p, zeta_exp, lambda_exp) if omega is None else omega
    if w.group.order != p ** 3:
        raise DomainError("omega must live on ut3:p")
    v = w.values.astype(np.int64)
    r = np.arange(p)
    i, i2, j, j2, l = np.meshgrid(r, r, r, r, r, indexing="ij")
    idx = np.vectorize(lambda a, b, n: ut3_index(p, a, b, n))

    def el(a, b, n):
        return idx(a, b, n)

    bx = el(0, i, j)
    bx2 = el(0, i2, j2)
    al = el(l, 0, 0)
    aml = el(-l, 0, 0)
    bx3 = el(0, j2, i2)
    amji = el(-j * i2, 0, 0)
    al_ji = el(l - j * i2, 0, 0)
    tot = v[bx, al, aml] + v[bx2, al, aml] + v[al, bx3, amji] - v[bx2, al, amji] - v[bx2, al_ji, aml]
    return not (tot % w.modulus).any()


# ----------------------------------------------------------------------
# invariant vectors


@dataclass
class InvariantVector:
    label: str
    group_exponent: Optional[int] = None
    fiber_functor_count: Optional[int] = None
    omega_class_trivial: Optional[bool] = None
    group_abelian: Optional[bool] = None
    omega_restriction_profile: Optional[tuple] = None
    notes: list = field(default_factory=list)

    def populated(self) -> dict:
        return {k: v for k, v in asdict(self).items()
                if k not in ("label", "notes") and v is not None}

    def to_json(self) -> dict:
        d = asdict(self)
        if d["omega_restriction_profile"] is not None:
            d["omega_restriction_profile"] = [list(x) for x in d["omega_restriction_profile"]]
        return d


INVARIANTS = ("group_exponent", "group_abelian", "omega_class_trivial",
              "fiber_functor_count", "omega_restriction_profile")


def _square_orbit_label(value: int, n: int) -> int:
    """Smallest u^2 * value mod n over units u: the class up to automorphisms of Z_n."""
    units = [u for u in range(1, n) if np.gcd(u, n) == 1] or [1]
    return min((u * u * value) % n for u in units)


def omega_restriction_profile(omega: Cochain, lift=True) -> tuple:
    """Sorted multiset of (|C|, class of omega|_C up to Aut(C)) over cyclic C != 1."""
    G = omega.group
    out = []
    for C in subgroups(G):
        if C.order == 1 or not C.is_cyclic():
            continue
        k = cyclic_h3_class(omega, C, lift=lift)
        out.append((C.order, _square_orbit_label(k, C.order)))
    return tuple(sorted(out))


def _smallest_nonresidue(p: int) -> int:
    return next(t for t in range(2, p) if pow(t, (p - 1) // 2, p) == p - 1)


def standard_morita_targets(p: int) -> list:
    """The p + 6 representatives plus kG and kT."""
    _odd_prime(p)
    t = _smallest_nonresidue(p)
    out = [
        f"dual:product:cyclic:{p};cyclic:{p};cyclic:{p}",
        f"dual:product:cyclic:{p};cyclic:{p * p}",
        f"dual:cyclic:{p ** 3}",
        f"dual:ut3:{p}",
        f"group:ut3:{p}",
        f"dual:t:{p}",
        f"group:t:{p}",
        f"appp:p={p},zeta=1,lambda=0",
        f"appp:p={p},zeta={t},lambda=0",
    ]
    out += [f"appp:p={p},zeta={z},lambda=1" for z in range(1, p)]
    return out


def invariant_vector(target: str, lift=True, cap: int = 3) -> InvariantVector:
    kind = target.split(":", 1)[0]
    if kind in ("dual", "group"):
        L = build_group(target.split(":", 1)[1])
        # k^L and kL are both Morita equivalent to C(L, 1)
        return InvariantVector(target, group_exponent=exponent(L), omega_class_trivial=True,
                               group_abelian=L.is_abelian())
    if kind == "appp":
        P = parse_family_spec(target)
        vec = InvariantVector(target)
        w = build_omega_zeta_lambda(P.p, P.zeta_exp, P.lambda_exp)
        try:
            vec.omega_class_trivial = not check_omega_nontrivial(P.p, P.zeta_exp, P.lambda_exp, lift, cap)
        except FeasibilityError as e:
            vec.notes.append(str(e))
        vec.fiber_functor_count = count_galois(P, dual=False, lift=lift)[1]
        vec.omega_restriction_profile = omega_restriction_profile(w, lift)
        return vec
    raise GroupSpecError(f"unknown Morita target {target!r}")


@dataclass
class SeparationReport:
    targets: list
    invariants: list
    separated_pairs: list
    unseparated_pairs: list

    def to_json(self) -> dict:
        return {
            "targets": self.targets,
            "invariants": [v.to_json() for v in self.invariants],
            "separated_pairs": [{"pair": list(p), "by": by} for p, by in self.separated_pairs],
            "unseparated_pairs": [{"pair": list(p), "status": "not separated here"}
                                  for p in self.unseparated_pairs],
        }


def separate(vectors: list) -> SeparationReport:
    sep, unsep = [], []
    for A, B in itertools.combinations(vectors, 2):
        a, b = A.populated(), B.populated()
        by = [k for k in INVARIANTS if k in a and k in b and a[k] != b[k]]
        if by:
            sep.append(((A.label, B.label), by))
        else:
            unsep.append((A.label, B.label))
    return SeparationReport([v.label for v in vectors], vectors, sep, unsep)


def morita_invariants(targets: list, lift=True, cap: int = 3, jobs: int = 1) -> SeparationReport:
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(jobs) as ex:
            vecs = list(ex.map(lambda t: invariant_vector(t, lift, cap), targets))
    else:
        vecs = [invariant_vector(t, lift, cap) for t in targets]
    return separate(vecs)
