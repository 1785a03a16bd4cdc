"""Concrete matched pairs, cocycle pairs and closed-form 3-cocycles.

Families:

    appp  H_{zeta,lambda} = k^Gamma #_sigma^tau kF,  F = Z_p^2 = <a, b>, Gamma = <x> = Z_p
    bpqq  B_lambda(m, zeta),                      F = <g> = Z_p, Gamma = Z_q^2 = <a, b>
    apqq  A_l,                                    F' = <g> = Z_q, Gamma' = Z_p x| Z_q
    h8    Kac-Paljutkin algebra,                  F = Z_2^2 = <a, b>, Gamma = <t> = Z_2

All cocycles are exponent tables; appp uses p-th roots, bpqq and apqq q-th
roots and h8 fourth roots of unity.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, asdict
from functools import lru_cache
from typing import Optional

import numpy as np
from sympy import isprime, n_order

from .groups import (DomainError, GroupSpecError, abelian, cyclic, gamma_prime, build_group,
                     _coords, _index, _check_bparams, _check_aparams)
from .cohomology import Cochain, trivialize, omega_theta_values
from .bicrossed import (MatchedPair, CocyclePair, BicrossedProduct, build_bicrossed,
                        verify_cocycle_pair, kac_omega)


@dataclass(frozen=True)
class FamilyParams:
    family: str                 # appp | bpqq | apqq | h8
    p: int = 0
    q: int = 0
    zeta_exp: int = 1
    lambda_exp: int = 0
    m: int = 0
    lam: int = 0
    h: int = 0
    t: int = 0
    l: int = 0
    eta_exp: int = 1
    h8_choice: int = 0          # which H8 cocycle pair (index into h8_cocycle_pairs)

    def validate(self) -> "FamilyParams":
        f = self.family
        if f == "appp":
            p = self.p
            if not isprime(p):
                raise DomainError(f"{p} is not prime")
            if p == 2:
                raise DomainError("p must be odd")
            if not (0 <= self.zeta_exp < p and 0 <= self.lambda_exp < p):
                raise DomainError("exponents must lie in 0..p-1")
        elif f == "bpqq":
            _check_bparams(self.p, self.q, self.m, self.lam)
            if self.zeta_exp % self.q == 0:
                raise DomainError("zeta must be a primitive q-th root of unity")
        elif f == "apqq":
            _check_aparams(self.p, self.q, self.t, self.h)
            if not 0 <= self.l < self.q:
                raise DomainError("l must lie in 0..q-1")
            if self.eta_exp % self.q == 0:
                raise DomainError("eta must be a primitive q-th root of unity")
        elif f == "h8":
            pass
        else:
            raise DomainError(f"unknown family {f!r}")
        return self

    def spec(self) -> str:
        f = self.family
        if f == "appp":
            return f"appp:p={self.p},zeta={self.zeta_exp},lambda={self.lambda_exp}"
        if f == "bpqq":
            return f"bpqq:p={self.p},q={self.q},m={self.m},lam={self.lam},zeta={self.zeta_exp}"
        if f == "apqq":
            return f"apqq:p={self.p},q={self.q},h={self.h},t={self.t},l={self.l},eta={self.eta_exp}"
        return "h8" if self.h8_choice == 0 else f"h8:choice={self.h8_choice}"

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v or k == "family"}


_KEYS = {
    "appp": {"p": "p", "zeta": "zeta_exp", "lambda": "lambda_exp"},
    "bpqq": {"p": "p", "q": "q", "m": "m", "lam": "lam", "zeta": "zeta_exp"},
    "apqq": {"p": "p", "q": "q", "h": "h", "t": "t", "l": "l", "eta": "eta_exp"},
    "h8": {"choice": "h8_choice"},
}


def parse_family_spec(spec: str) -> FamilyParams:
    """Parse strings like ``appp:p=3,zeta=1,lambda=1`` or ``h8``."""
    spec = spec.strip()
    name, _, rest = spec.partition(":")
    name = name.lower()
    if name not in _KEYS:
        raise GroupSpecError(f"unknown family {name!r}")
    kw = {}
    if rest:
        for part in rest.split(","):
            k, eq, v = part.partition("=")
            k = k.strip()
            if not eq or k not in _KEYS[name]:
                raise GroupSpecError(f"bad parameter {part!r} for {name}")
            try:
                kw[_KEYS[name][k]] = int(v)
            except ValueError:
                raise GroupSpecError(f"parameter {k} must be an integer") from None
    return FamilyParams(name, **kw).validate()


# ----------------------------------------------------------------------
# matched pairs and cocycle pairs


def appp_pair(p: int, zeta_exp: int, lambda_exp: int):
    F = abelian([p, p], ["a", "b"])
    Gam = cyclic(p, "x")
    co = _coords(p * p, [p, p])
    i, j = co[:, 0], co[:, 1]
    rhd = np.array([_index(np.stack([(i + n * j) % p, j], 1), [p, p]) for n in range(p)])
    lhd = np.repeat(np.arange(p)[:, None], p * p, axis=1)
    n = np.arange(p)
    # sigma_{x^n}(a^i b^j, a^i' b^j') = zeta^(-n j i' - C(n,2) j j')
    sig = zeta_exp * (-n[:, None, None] * j[None, :, None] * i[None, None, :]
                      - (n * (n - 1) // 2)[:, None, None] * j[None, :, None] * j[None, None, :])
    # tau_{a^i b^j}(x^n, x^m) = lambda^(j [(n+m)/p])
    carry = (n[:, None] + n[None, :]) // p
    tau = lambda_exp * j[:, None, None] * carry[None, :, :]
    mp = MatchedPair(F, Gam, rhd, lhd, name=f"appp:{p}")
    return mp, CocyclePair(p, sig, tau)


def bpqq_pair(p: int, q: int, m: int, lam: int, zeta_exp: int):
    F = cyclic(p, "g")
    Gam = abelian([q, q], ["a", "b"])
    co = _coords(q * q, [q, q])
    minv = pow(m, -1, q)
    # s <| g^k: a <| g^-1 = a^m, so a <| g^k = a^(m^-k)
    lhd = np.zeros((q * q, p), dtype=np.int64)
    for k in range(p):
        ea, eb = pow(minv, k, q), pow(minv, k * lam, q)
        lhd[:, k] = _index(np.stack([(co[:, 0] * ea) % q, (co[:, 1] * eb) % q], 1), [q, q])
    rhd = np.repeat(np.arange(p)[None, :], q * q, axis=0)
    sig = np.zeros((q * q, p, p), dtype=np.int64)
    # tau_{g^t}(a^i b^j, a^k b^l) = zeta_t^(j k), zeta_t = zeta^(c_t(n)).
    # With a <| g^-1 = a^m the compatibility condition forces n = m^-(lam+1).
    n = pow(minv, lam + 1, q)
    zt = np.array([zeta_exp * sum(pow(n, e, q) for e in range(t)) % q for t in range(p)])
    jj = co[:, 1]
    kk = co[:, 0]
    tau = zt[:, None, None] * jj[None, :, None] * kk[None, None, :]
    mp = MatchedPair(F, Gam, rhd, lhd, name=f"bpqq:{p},{q},{m},{lam}")
    return mp, CocyclePair(q, sig, tau)


def apqq_pair(p: int, q: int, h: int, t: int, l: int, eta_exp: int):
    F = cyclic(q, "g")
    Gam = gamma_prime(p, q, t)
    co = _coords(p * q, [p, q])       # (j, i) for b^j a^i
    lhd = np.zeros((p * q, q), dtype=np.int64)
    for n in range(q):
        lhd[:, n] = _index(np.stack([(co[:, 0] * pow(h, n, p)) % p, co[:, 1]], 1), [p, q])
    rhd = np.repeat(np.arange(q)[None, :], p * q, axis=0)
    nn = np.arange(q)
    carry = (nn[:, None] + nn[None, :]) // q
    # sigma_{b^j a^i}(g^n, g^n') = eta^(l i [(n+n')/q])
    sig = eta_exp * l * co[:, 1][:, None, None] * carry[None, :, :]
    tau = np.zeros((q, p * q, p * q), dtype=np.int64)
    mp = MatchedPair(F, Gam, rhd, lhd, name=f"apqq:{p},{q},{t},{h}")
    return mp, CocyclePair(q, sig, tau)


def h8_matched_pair() -> MatchedPair:
    F = abelian([2, 2], ["a", "b"])
    Gam = cyclic(2, "t")
    rhd = np.array([[0, 1, 2, 3], [0, 2, 1, 3]])     # t |> a = b
    lhd = np.zeros((2, 4), dtype=np.int64)
    lhd[1] = 1
    return MatchedPair(F, Gam, rhd, lhd, name="h8")


@lru_cache(maxsize=None)
def _h8_search():
    """All normalized cocycle pairs at modulus 4 on the H8 matched pair whose
    bicrossed product is neither commutative nor cocommutative."""
    mp = h8_matched_pair()
    M = 4
    found = []
    nz = [(x, y) for x in range(1, 4) for y in range(1, 4)]
    mul = mp.F.mul
    # sigma_t must be a 2-cocycle on F (the right action is trivial)
    vals = np.array(list(itertools.product(range(M), repeat=9)), dtype=np.int64)
    S = np.zeros((len(vals), 4, 4), dtype=np.int64)
    for c, (x, y) in enumerate(nz):
        S[:, x, y] = vals[:, c]
    # d s(x, y, z) = s(y, z) - s(xy, z) + s(x, yz) - s(x, y)
    dd = S[:, None, :, :] - S[:, mul, :] + S[:, :, mul] - S[:, :, :, None]
    sig_ok = S[~(dd % M).reshape(len(S), -1).any(axis=1)]
    for s in sig_ok:
        for tv in itertools.product(range(M), repeat=3):
            sigma = np.zeros((2, 4, 4), dtype=np.int64)
            sigma[1] = s
            tau = np.zeros((4, 2, 2), dtype=np.int64)
            tau[1:, 1, 1] = tv
            cp = CocyclePair(M, sigma, tau)
            if not verify_cocycle_pair(mp, cp):
                continue
            B = build_bicrossed(mp, cp, check=False)
            if B.is_commutative() or B.is_cocommutative():
                continue
            found.append(cp)
    return mp, found


def h8_cocycle_pairs():
    return _h8_search()[1]


def h8_pair(choice: int = 0):
    mp, found = _h8_search()
    if not found:
        raise ArithmeticError("no noncommutative noncocommutative cocycle pair found")
    if not 0 <= choice < len(found):
        raise DomainError(f"h8 choice must lie in 0..{len(found) - 1}")
    return mp, found[choice]


def family_pair(params: FamilyParams):
    f = params.family
    if f == "appp":
        return appp_pair(params.p, params.zeta_exp, params.lambda_exp)
    if f == "bpqq":
        return bpqq_pair(params.p, params.q, params.m, params.lam, params.zeta_exp)
    if f == "apqq":
        return apqq_pair(params.p, params.q, params.h, params.t, params.l, params.eta_exp)
    if f == "h8":
        return h8_pair(params.h8_choice)
    raise DomainError(f"unknown family {f!r}")


def build_family(params: FamilyParams, check: bool = True):
    params.validate()
    mp, cp = family_pair(params)
    B = build_bicrossed(mp, cp, check=check)
    return mp, cp, B


def family_group_spec(params: FamilyParams) -> str:
    f = params.family
    if f == "appp":
        return f"ut3:{params.p}"
    if f == "bpqq":
        return f"bgroup:{params.p},{params.q},{params.m},{params.lam}"
    if f == "apqq":
        return f"agroup:{params.p},{params.q},{params.t},{params.h}"
    return "dihedral:8"


# ----------------------------------------------------------------------
# closed-form 3-cocycles


def build_omega_zeta_lambda(p: int, zeta_exp: int, lambda_exp: int) -> Cochain:
    """omega_{zeta,lambda}(a^i b^j x^n, a^i' b^j' x^n', a^i'' b^j'' x^n'') on ut3:p,
    evaluated straight from the closed formula."""
    if not isprime(p) or p == 2:
        raise DomainError("p must be an odd prime")
    G = build_group(f"ut3:{p}")
    n = p ** 3
    idx = np.arange(n)
    i, j, k = idx % p, (idx // p) % p, idx // (p * p)
    # first argument contributes n = k; second j' and n'; third i'', j''
    N = k[:, None, None]
    J1 = j[None, :, None]
    N1 = k[None, :, None]
    I2 = i[None, None, :]
    J2 = j[None, None, :]
    vals = np.empty((n, n, n), dtype=np.int64)
    for a in range(n):
        na = int(k[a])
        z = -na * J1[0] * (I2[0] + N1[0] * J2[0]) - (na * (na - 1) // 2) * J1[0] * J2[0]
        lam = J2[0] * ((na + N1[0]) // p)
        vals[a] = (zeta_exp * z + lambda_exp * lam) % p
    return Cochain(G, 3, p, vals)


def build_upsilon(p: int, q: int, h: int, t: int, l: int, eta_exp: int) -> Cochain:
    """upsilon(g^n b^j a^i, g^n' b^j' a^i', g^n'' b^j'' a^i'') = eta^(l i [(n'+n'')/q])."""
    G = build_group(f"agroup:{p},{q},{t},{h}")
    n = G.order
    idx = np.arange(n)
    nn = idx % q
    ii = idx // (q * p)
    vals = (eta_exp * l * ii[:, None, None] * ((nn[None, :, None] + nn[None, None, :]) // q)) % q
    return Cochain(G, 3, q, vals)


def build_cyclic_cocycles(N: int, exp: int, variant: str = "standard") -> Cochain:
    """omega_theta (standard) or the tilde cocycle
    xi^(m (n C(l,2) + l C(n,2) + n m l)) on cyclic:N."""
    C = build_group(f"cyclic:{N}")
    if variant == "standard":
        return Cochain(C, 3, N, omega_theta_values(N, exp % N))
    if variant == "tilde":
        a = np.arange(N)
        n_, m_, l_ = a[:, None, None], a[None, :, None], a[None, None, :]
        e = m_ * (n_ * (l_ * (l_ - 1) // 2) + l_ * (n_ * (n_ - 1) // 2) + n_ * m_ * l_)
        return Cochain(C, 3, N, (exp * e) % N)
    raise DomainError(f"unknown variant {variant!r}")


def alpha_xi(q: int, xi_exp: int) -> Cochain:
    """alpha_xi(a^i b^j, a^i' b^j') = xi^(j i') on Z_q x Z_q (index i + q j)."""
    G = build_group(f"product:cyclic:{q};cyclic:{q}")
    co = _coords(q * q, [q, q])
    vals = xi_exp * co[:, 1][:, None] * co[:, 0][None, :]
    return Cochain(G, 2, q, vals)
