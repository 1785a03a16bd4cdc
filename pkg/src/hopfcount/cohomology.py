"""Cochains with values in roots of unity, written additively.

A cochain of modulus M stores exponents of a fixed primitive M-th root of
unity.  Coboundaries use the inhomogeneous formula with trivial action:

    (d phi)(g, h)       = phi(h) - phi(gh) + phi(g)
    (d psi)(g, h, k)    = psi(h, k) - psi(gh, k) + psi(g, hk) - psi(g, h)

Triviality over k^x is decided at a lifted modulus (M |G| by default): a
witness over k^x can always be rescaled to take values in roots of unity of
that order.

The coboundary solvers rely on one observation.  If c is a normalized
n-cocycle and c(s, ...) = 0 for every s in a generating set S, then c = 0:
the cocycle identity with first argument s collapses to
c(s g, ...) = c(g, ...).  So to solve d psi = c it is enough to impose the
equations whose first argument is a generator.  Those equations let us
propagate psi(s g, k) from psi(g, k) along a spanning tree of the Cayley
graph, leaving psi(s, x) for s in S as unknowns and one block of equations
for every edge outside the tree.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp

from .groups import FiniteGroup, Subgroup, DomainError, exponent, build_group
from .modlinalg import ModSystem, HowellBasis, mm_mod


class Cochain:
    """An n-cochain on `group` with values in Z/modulus.

    `subgroup` records the ambient Subgroup when the cochain lives on a
    subgroup (restrictions, conjugates); element i of `group` is then
    subgroup.elements[i].
    """

    def __init__(self, group: FiniteGroup, degree: int, modulus: int, values, subgroup: Optional[Subgroup] = None):
        self.group = group
        self.degree = degree
        self.modulus = int(modulus)
        v = np.asarray(values)
        if v.shape != (group.order,) * degree:
            raise ValueError(f"values have shape {v.shape}, expected {(group.order,) * degree}")
        if v.dtype.kind not in "iu":
            v = v.astype(np.int64)
        self.values = np.remainder(v, self.modulus).astype(np.int32, copy=False)
        self.subgroup = subgroup

    @classmethod
    def zero(cls, group, degree, modulus=1, subgroup=None):
        return cls(group, degree, modulus, np.zeros((group.order,) * degree, dtype=np.int32), subgroup)

    def __repr__(self):
        return f"Cochain(degree={self.degree}, modulus={self.modulus}, order={self.group.order})"

    def is_zero(self) -> bool:
        return not self.values.any()

    def is_normalized(self) -> bool:
        e = self.group.identity
        v = self.values
        for axis in range(self.degree):
            if np.take(v, e, axis=axis).any():
                return False
        return True

    def at_modulus(self, N: int) -> "Cochain":
        if N % self.modulus:
            raise ValueError(f"modulus {self.modulus} does not divide {N}")
        if N == self.modulus:
            return self
        return Cochain(self.group, self.degree, N, self.values.astype(np.int64) * (N // self.modulus), self.subgroup)

    def _common(self, other):
        N = math.lcm(self.modulus, other.modulus)
        return self.at_modulus(N), other.at_modulus(N), N

    def __add__(self, other):
        a, b, N = self._common(other)
        return Cochain(self.group, self.degree, N, a.values.astype(np.int64) + b.values, self.subgroup)

    def __neg__(self):
        return Cochain(self.group, self.degree, self.modulus, -self.values.astype(np.int64), self.subgroup)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Cochain) or other.degree != self.degree or other.group.order != self.group.order:
            return False
        a, b, _ = self._common(other)
        return bool((a.values == b.values).all())

    def __call__(self, *args):
        return int(self.values[tuple(args)])

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "modulus": self.modulus,
            "group_spec": self.group.spec,
            "values": self.values.ravel().tolist(),
        }

    @classmethod
    def from_json(cls, data, group: Optional[FiniteGroup] = None) -> "Cochain":
        if isinstance(data, str):
            data = json.loads(data)
        G = group if group is not None else build_group(data["group_spec"])
        n = int(data["degree"])
        vals = np.array(data["values"], dtype=np.int64).reshape((G.order,) * n)
        return cls(G, n, int(data["modulus"]), vals)


# ----------------------------------------------------------------------
# coboundaries and cocycle checks


def coboundary(c: Cochain) -> Cochain:
    G = c.group
    M = c.modulus
    mul = G.mul
    v = c.values.astype(np.int64)
    if c.degree == 1:
        out = v[None, :] - v[mul] + v[:, None]
    elif c.degree == 2:
        n = G.order
        out = np.empty((n, n, n), dtype=np.int64)
        for g in range(n):
            # psi(h,k) - psi(gh,k) + psi(g,hk) - psi(g,h)
            out[g] = v - v[mul[g]] + v[g][mul] - v[g][:, None]
    else:
        raise DomainError("coboundary is implemented for degrees 1 and 2")
    return Cochain(G, c.degree + 1, M, out % M, c.subgroup)


def is_cocycle(c: Cochain, gens: Optional[Sequence[int]] = None) -> bool:
    """True iff d c = 0.

    For normalized cochains only the rows d c(s, ...) with s in a generating
    set are checked (see module docstring); otherwise every tuple is checked.
    """
    G = c.group
    M = c.modulus
    v = c.values.astype(np.int64)
    mul = G.mul
    normalized = c.is_normalized()
    rows = list(gens) if (normalized and gens is not None) else (
        list(generators_of(G)) if normalized else range(G.order))
    if c.degree == 1:
        return bool(((v[mul] - v[:, None] - v[None, :]) % M == 0).all())
    if c.degree == 2:
        for g in rows:
            d = v - v[mul[g]] + v[g][mul] - v[g][:, None]
            if (d % M).any():
                return False
        return True
    if c.degree == 3:
        for g in rows:
            vg = v[g]
            for h in range(G.order):
                # d w(g,h,k,l) = w(h,k,l) - w(gh,k,l) + w(g,hk,l) - w(g,h,kl) + w(g,h,k)
                d = v[h] - v[mul[g, h]] + vg[mul[h]] - vg[h][mul] + vg[h][:, None]
                if (d % M).any():
                    return False
        return True
    raise DomainError("degree must be 1, 2 or 3")


def restrict(c: Cochain, L: Subgroup) -> Cochain:
    el = np.array(L.elements)
    vals = c.values[np.ix_(*([el] * c.degree))]
    return Cochain(L.as_group(), c.degree, c.modulus, vals, L)


# ----------------------------------------------------------------------
# propagation systems


def generators_of(G: FiniteGroup) -> tuple:
    """A small generating set, highest element order first."""
    cache = getattr(G, "_gens", None)
    if cache is None:
        from .groups import _small_generating_set
        cache = _small_generating_set(G, range(G.order))
        G._gens = cache
    return cache


class _Propagation:
    """Spanning tree of the left Cayley graph and the signed edge terms of
    every cycle it closes.

    For the non-tree edge (s, g) -> h = s g the block of equations reads
    sum over terms (sign, s', w) of [unknown(s', w) evaluated at k] = rhs(k),
    where the terms are the tree path to g, the edge itself, and minus the
    tree path to h (common prefix removed).
    """

    def __init__(self, G: FiniteGroup, gens: Sequence[int]):
        self.G = G
        self.gens = tuple(int(s) for s in gens)
        n = G.order
        parent = np.full(n, -1, dtype=np.int64)
        via = np.full(n, -1, dtype=np.int64)
        depth = np.zeros(n, dtype=np.int64)
        order = [G.identity]
        seen = np.zeros(n, dtype=bool)
        seen[G.identity] = True
        tree_edges = set()
        q = deque([G.identity])
        while q:
            g = q.popleft()
            for si, s in enumerate(self.gens):
                h = G.m(s, g)
                if not seen[h]:
                    seen[h] = True
                    parent[h] = g
                    via[h] = si
                    depth[h] = depth[g] + 1
                    tree_edges.add((si, g))
                    order.append(h)
                    q.append(h)
        if not seen.all():
            raise ValueError("generators do not generate the group")
        self.parent, self.via, self.depth = parent, via, depth
        self.bfs_order = order
        blocks = []
        for g in range(n):
            for si, s in enumerate(self.gens):
                if (si, g) in tree_edges:
                    continue
                h = G.m(s, g)
                blocks.append(self._cycle_terms(si, g, h))
        self.blocks = blocks

    def _path(self, g):
        """Tree edges (si, w) from the identity to g, in order from the root."""
        out = []
        while g != self.G.identity:
            out.append((int(self.via[g]), int(self.parent[g])))
            g = int(self.parent[g])
        return out[::-1]

    def _cycle_terms(self, si, g, h):
        pg, ph = self._path(g), self._path(h)
        i = 0
        while i < min(len(pg), len(ph)) and pg[i] == ph[i]:
            i += 1
        terms = [(1, a, w) for a, w in pg[i:]] + [(1, si, g)] + [(-1, a, w) for a, w in ph[i:]]
        return terms


_prop_cache: dict = {}


def _propagation(G: FiniteGroup, gens=None) -> _Propagation:
    gens = tuple(gens) if gens is not None else generators_of(G)
    key = (G.key, gens)
    if key not in _prop_cache:
        _prop_cache[key] = _Propagation(G, gens)
    return _prop_cache[key]


class _TwoCochainSystem:
    """Unknowns psi(s, x); rows (block, k) for k != e.

    With gauge fixing, a coboundary d phi is used to zero psi(s1, x) on all
    but one point of every orbit of x -> s1 x, where s1 is the first generator.
    That is harmless when we only ask whether a solution exists.
    """

    def __init__(self, P: _Propagation, gauge: bool):
        G = P.G
        n = G.order
        S = len(P.gens)
        e = G.identity
        var = np.arange(S * n, dtype=np.int64).reshape(S, n)
        fixed = np.zeros((S, n), dtype=bool)
        fixed[:, e] = True
        if gauge:
            s1 = P.gens[0]
            done = np.zeros(n, dtype=bool)
            for x0 in [e] + list(range(n)):
                if done[x0]:
                    continue
                orbit = [x0]
                y = G.m(s1, x0)
                while y != x0:
                    orbit.append(y)
                    y = G.m(s1, y)
                for y in orbit:
                    done[y] = True
                for y in orbit[:-1]:
                    fixed[0, y] = True
        cols = np.full((S, n), -1, dtype=np.int64)
        free = ~fixed
        cols[free] = np.arange(int(free.sum()))
        self.cols = cols
        self.ncols = int(free.sum())
        ks = np.array([k for k in range(n) if k != e], dtype=np.int64)
        self.ks = ks
        nk = len(ks)
        rows, colidx, vals = [], [], []
        for b, terms in enumerate(P.blocks):
            base = b * nk
            r = base + np.arange(nk)
            for sign, si, w in terms:
                c1 = cols[si, G.mul[w, ks]]
                m = c1 >= 0
                rows.append(r[m]); colidx.append(c1[m]); vals.append(np.full(int(m.sum()), sign))
                c0 = cols[si, w]
                if c0 >= 0:
                    rows.append(r); colidx.append(np.full(nk, c0)); vals.append(np.full(nk, -sign))
        R = len(P.blocks) * nk
        if rows:
            A = sp.coo_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(colidx))),
                              shape=(R, self.ncols)).tocsr()
            A.sum_duplicates()
            A.eliminate_zeros()
        else:
            A = sp.csr_matrix((R, self.ncols), dtype=np.int64)
        self.A = A.astype(np.int64)
        # term arrays for right-hand sides
        tb, ts, tsi, tw = [], [], [], []
        for b, terms in enumerate(P.blocks):
            for sign, si, w in terms:
                tb.append(b); ts.append(sign); tsi.append(si); tw.append(w)
        self.tb = np.array(tb, dtype=np.int64)
        self.ts = np.array(ts, dtype=np.int64)
        self.tsi = np.array(tsi, dtype=np.int64)
        self.tw = np.array(tw, dtype=np.int64)
        self.P = P
        self._systems: dict = {}

    def rhs(self, c_rows: np.ndarray, N: int) -> np.ndarray:
        """c_rows[si, g, k] = c(s_i, g, k); returns the stacked right-hand side."""
        nb = len(self.P.blocks)
        out = np.zeros((nb, self.P.G.order), dtype=np.int64)
        np.add.at(out, self.tb, self.ts[:, None] * c_rows[self.tsi, self.tw, :].astype(np.int64))
        return (out[:, self.ks] % N).ravel()

    def system(self, N: int) -> ModSystem:
        if N not in self._systems:
            self._systems[N] = ModSystem(self.A, N)
        return self._systems[N]

    def psi_from(self, u: np.ndarray, c_rows: Optional[np.ndarray], N: int) -> np.ndarray:
        """Rebuild the full 2-cochain from the unknowns by tree propagation."""
        G = self.P.G
        n = G.order
        S = len(self.P.gens)
        U = np.zeros((S, n), dtype=np.int64)
        free = self.cols >= 0
        U[free] = np.asarray(u, dtype=np.int64)[self.cols[free]]
        psi = np.zeros((n, n), dtype=np.int64)
        for h in self.P.bfs_order[1:]:
            g = int(self.P.parent[h])
            si = int(self.P.via[h])
            row = psi[g] + U[si, G.mul[g]] - U[si, g]
            if c_rows is not None:
                row = row - c_rows[si, g]
            psi[h] = row % N
        return psi


_sys_cache: dict = {}


def _two_system(G: FiniteGroup, gauge: bool) -> _TwoCochainSystem:
    key = (G.key, gauge)
    if key not in _sys_cache:
        _sys_cache[key] = _TwoCochainSystem(_propagation(G), gauge)
    return _sys_cache[key]


class _OneCochainSystem:
    """phi(s) unknown for s in S; phi(s g) = phi(g) + phi(s) - beta(s, g)."""

    def __init__(self, P: _Propagation):
        S = len(P.gens)
        nb = len(P.blocks)
        E = np.zeros((nb, S), dtype=np.int64)
        for b, terms in enumerate(P.blocks):
            for sign, si, w in terms:
                E[b, si] += sign
        self.E = E
        self.P = P
        tb, ts, tsi, tw = [], [], [], []
        for b, terms in enumerate(P.blocks):
            for sign, si, w in terms:
                tb.append(b); ts.append(sign); tsi.append(si); tw.append(w)
        self.tb = np.array(tb, dtype=np.int64)
        self.ts = np.array(ts, dtype=np.int64)
        self.tsi = np.array(tsi, dtype=np.int64)
        self.tw = np.array(tw, dtype=np.int64)
        self.gens = np.array(P.gens, dtype=np.int64)
        self._howell: dict = {}
        self._systems: dict = {}

    def rhs(self, beta: np.ndarray, N: int) -> np.ndarray:
        out = np.zeros(len(self.P.blocks), dtype=np.int64)
        np.add.at(out, self.tb, self.ts * beta[self.gens[self.tsi], self.tw].astype(np.int64))
        return out % N

    def howell(self, N: int) -> HowellBasis:
        if N not in self._howell:
            self._howell[N] = HowellBasis(self.E.T.tolist(), self.E.shape[0], N)
        return self._howell[N]

    def system(self, N: int) -> ModSystem:
        if N not in self._systems:
            self._systems[N] = ModSystem(self.E, N)
        return self._systems[N]

    def phi_from(self, phiS, beta: np.ndarray, N: int) -> np.ndarray:
        G = self.P.G
        phi = np.zeros(G.order, dtype=np.int64)
        for h in self.P.bfs_order[1:]:
            g = int(self.P.parent[h])
            si = int(self.P.via[h])
            phi[h] = (phi[g] + phiS[si] - beta[self.gens[si], g]) % N
        return phi


_one_cache: dict = {}


def _one_system(G: FiniteGroup) -> _OneCochainSystem:
    if G.key not in _one_cache:
        _one_cache[G.key] = _OneCochainSystem(_propagation(G))
    return _one_cache[G.key]


# ----------------------------------------------------------------------
# trivialization


def lifted_modulus(c: Cochain, lift=True) -> int:
    """Modulus at which triviality is decided.

    lift=True uses M |G|; an integer lift multiplies M by that integer;
    lift=False (or 1) keeps M.
    """
    if lift is True:
        return c.modulus * c.group.order
    if lift is False or lift is None:
        return c.modulus
    return c.modulus * int(lift)


def trivialize(c: Cochain, lift=True) -> Optional[Cochain]:
    """A cochain w with d w = c at the lifted modulus, or None.

    c must be a normalized cocycle of degree 2 or 3.
    """
    if c.degree not in (2, 3):
        raise DomainError("trivialize needs degree 2 or 3")
    N = lifted_modulus(c, lift)
    cl = c.at_modulus(N)
    G = c.group
    if G.order == 1 or cl.is_zero():
        return Cochain.zero(G, c.degree - 1, N, c.subgroup)
    if not c.is_normalized():
        raise DomainError("trivialize expects a normalized cochain")
    gens = np.array(_propagation(G).gens)
    if c.degree == 2:
        sysm = _one_system(G)
        beta = cl.values.astype(np.int64)
        sol = sysm.system(N).solve(sysm.rhs(beta, N))
        if sol is None:
            return None
        phi = sysm.phi_from(sol, beta, N)
        w = Cochain(G, 1, N, phi, c.subgroup)
    else:
        sysm = _two_system(G, gauge=True)
        c_rows = cl.values[gens].astype(np.int64)
        sol = sysm.system(N).solve(sysm.rhs(c_rows, N))
        if sol is None:
            return None
        psi = sysm.psi_from(sol, c_rows, N)
        w = Cochain(G, 2, N, psi, c.subgroup)
    if not _check_witness(w, cl):
        raise ArithmeticError("witness failed verification")
    return w


def _check_witness(w: Cochain, c: Cochain) -> bool:
    G = w.group
    N = c.modulus
    v = w.values.astype(np.int64)
    mul = G.mul
    target = c.values
    if w.degree == 1:
        return bool(((v[None, :] - v[mul] + v[:, None] - target) % N == 0).all())
    for g in range(G.order):
        d = v - v[mul[g]] + v[g][mul] - v[g][:, None]
        if ((d - target[g]) % N).any():
            return False
    return True


def is_trivial(c: Cochain, lift=True) -> bool:
    return trivialize(c, lift) is not None


# ----------------------------------------------------------------------
# second cohomology


@dataclass
class H2Description:
    group: FiniteGroup
    modulus: int
    invariant_factors: list
    representatives: list
    lift_modulus: int = 0

    @property
    def order(self) -> int:
        return len(self.representatives)

    def is_trivial(self) -> bool:
        return self.order == 1

    def to_json(self) -> dict:
        return {
            "group_spec": self.group.spec,
            "modulus": self.modulus,
            "invariant_factors": list(self.invariant_factors),
            "order": self.order,
            "representatives": [r.to_json() for r in self.representatives],
        }


def class_key(beta: Cochain, lift=True) -> tuple:
    """Canonical label of the class of a normalized 2-cocycle over k^x."""
    N = lifted_modulus(beta, lift)
    s = _one_system(beta.group)
    return s.howell(N).reduce(s.rhs(beta.at_modulus(N).values.astype(np.int64), N))


def cocycle_basis(G: FiniteGroup, M: int) -> list:
    """Generators of the normalized 2-cocycles Z^2(G, Z/M) as value tables."""
    if G.order == 1:
        return []
    sysm = _two_system(G, gauge=False)
    ker = sysm.system(M).kernel()
    return [sysm.psi_from(u, None, M) for u in ker]


_h2_cache: dict = {}
MAX_H2_ORDER = 100000


def h2(G: FiniteGroup, M: int, lift=True, subgroup: Optional[Subgroup] = None) -> H2Description:
    """H^2(G, k^x) classes representable with M-th roots of unity.

    M must be a multiple of exponent(G).  Classes are listed in a
    deterministic breadth-first order starting from the trivial class.
    """
    if M % exponent(G):
        raise DomainError(f"modulus {M} is not a multiple of exponent {exponent(G)}")
    lift_mod = M * G.order if lift is True else M * (int(lift) if lift else 1)
    key = (G.key, M, lift_mod)
    if key in _h2_cache:
        d = _h2_cache[key]
        return H2Description(G, M, d.invariant_factors, [Cochain(G, 2, M, r.values, subgroup) for r in d.representatives], lift_mod)
    zero = Cochain.zero(G, 2, M, subgroup)
    if G.order == 1:
        out = H2Description(G, M, [], [zero], lift_mod)
        _h2_cache[key] = out
        return out
    basis = cocycle_basis(G, M)
    s = _one_system(G)
    H = s.howell(lift_mod)
    scale = lift_mod // M

    def key_of(vals):
        return H.reduce(s.rhs(vals.astype(np.int64) * scale, lift_mod))

    gen_vals = []
    gen_keys = []
    for b in basis:
        k = key_of(b)
        if any(k):
            gen_vals.append(b)
            gen_keys.append(np.array(k, dtype=np.int64))
    zero_key = tuple([0] * len(s.P.blocks))
    classes = {zero_key: np.zeros((G.order, G.order), dtype=np.int64)}
    order = [zero_key]
    frontier = [zero_key]
    while frontier:
        nxt = []
        for k in frontier:
            base = np.array(k, dtype=np.int64)
            for gk, gv in zip(gen_keys, gen_vals):
                k2 = H.reduce(base + gk)
                if k2 not in classes:
                    classes[k2] = (classes[k] + gv) % M
                    order.append(k2)
                    nxt.append(k2)
                    if len(classes) > MAX_H2_ORDER:
                        raise DomainError("H^2 too large to enumerate")
        frontier = nxt
    reps = [Cochain(G, 2, M, classes[k], subgroup) for k in order]
    inv = _invariant_factors([np.array(k, dtype=np.int64) for k in order], H, lift_mod)
    out = H2Description(G, M, inv, reps, lift_mod)
    _h2_cache[key] = out
    return out


def _invariant_factors(elements, H: HowellBasis, N: int) -> list:
    """Invariant factors of a finite abelian group given by all its elements."""
    n = len(elements)
    if n == 1:
        return []

    def order_of(v):
        k = 1
        w = v.copy()
        while any(H.reduce(w)):
            w = w + v
            k += 1
        return k

    orders = [order_of(v) for v in elements]
    from sympy import factorint
    primes = sorted(factorint(n))
    parts = {}
    for p in primes:
        # c_j = #{x : p^j x = 0} = p^(sum_i min(j, e_i))
        e = 0
        counts = []
        while True:
            cnt = sum(1 for o in orders if (p ** e) % _ppart(o, p) == 0)
            counts.append(cnt)
            if cnt == p ** _vp(n, p):
                break
            e += 1
        logs = [_vp(c, p) for c in counts]
        # number of cyclic factors of exponent >= j is logs[j] - logs[j-1]
        ge = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        exps = []
        for j in range(len(ge)):
            nxt = ge[j + 1] if j + 1 < len(ge) else 0
            exps += [j + 1] * (ge[j] - nxt)
        parts[p] = sorted(exps, reverse=True)
    width = max(len(v) for v in parts.values())
    inv = []
    for i in range(width):
        d = 1
        for p, ex in parts.items():
            if i < len(ex):
                d *= p ** ex[i]
        inv.append(d)
    return sorted(inv)


def _vp(n, p):
    k = 0
    while n % p == 0 and n:
        n //= p
        k += 1
    return k


def _ppart(n, p):
    return p ** _vp(n, p)


# ----------------------------------------------------------------------
# cyclic H^3, non-degeneracy, conjugation twists


def omega_theta_values(N: int, theta_exp: int, modulus: Optional[int] = None) -> np.ndarray:
    """omega_theta(c^n, c^m, c^l) = theta^(l [(n+m)/N]) on Z/N, theta = zeta_N^theta_exp."""
    M = modulus or N
    n = np.arange(N)
    carry = (n[:, None] + n[None, :]) // N
    vals = (theta_exp * carry[:, :, None] * n[None, None, :]) % N
    return (vals * (M // N)) % M


def cyclic_h3_class(omega: Cochain, L: Subgroup, generator: Optional[int] = None, lift=True) -> int:
    """theta-exponent with omega|_L cohomologous to omega_theta (generator c)."""
    G = omega.group
    N = L.order
    c = generator if generator is not None else next(g for g in L.generators if G.element_order(g) == N) if L.generators else G.identity
    if N == 1:
        return 0
    if G.element_order(c) != N or c not in L:
        raise DomainError("L must be cyclic with the given generator")
    powers = [G.identity]
    for _ in range(N - 1):
        powers.append(G.m(powers[-1], c))
    C = Subgroup(G, powers, (c,))
    # reindex L by exponents of c
    el = np.array(powers)
    vals = omega.values[np.ix_(el, el, el)]
    Mc = math.lcm(omega.modulus, N)
    Cg = _cyclic_group_cached(N)
    w = Cochain(Cg, 3, omega.modulus, vals).at_modulus(Mc)
    hits = []
    for theta in range(N):
        diff = Cochain(Cg, 3, Mc, w.values.astype(np.int64) - omega_theta_values(N, theta, Mc))
        if trivialize(diff, lift) is not None:
            hits.append(theta)
    if len(hits) != 1:
        raise ArithmeticError(f"cyclic H^3 classification found {len(hits)} matches")
    return hits[0]


def _cyclic_group_cached(N):
    return build_group(f"cyclic:{N}")


def is_nondegenerate(beta: Cochain, A=None) -> bool:
    """Trivial radical of b(x, y) = beta(x, y) - beta(y, x) on abelian A."""
    G = beta.group
    if A is not None and isinstance(A, Subgroup) and A.parent is not G:
        raise DomainError("beta must live on A")
    if not G.is_abelian():
        raise DomainError("non-degeneracy test needs an abelian group")
    if G.order == 1:
        return True
    v = beta.values.astype(np.int64)
    b = (v - v.T) % beta.modulus
    radical = np.flatnonzero(~b.any(axis=1))
    return radical.tolist() == [G.identity]


def omega_g(omega: Cochain, g: int, on: Optional[Subgroup] = None) -> Cochain:
    """Omega_g(a, b) = w(g a g^-1, g b g^-1, g) + w(g, a, b) - w(g a g^-1, g, b).

    With `on` the result is computed only for a, b in that subgroup.
    """
    G = omega.group
    v = omega.values
    el = np.arange(G.order) if on is None else np.array(on.elements)
    ca = G.conj(g, el)
    vals = (v[ca[:, None], ca[None, :], g].astype(np.int64) + v[g][np.ix_(el, el)]
            - v[ca, g, :][:, el])
    if on is None:
        return Cochain(G, 2, omega.modulus, vals, omega.subgroup)
    return Cochain(on.as_group(), 2, omega.modulus, vals, on)


def conj_cochain(beta: Cochain, g: int) -> Cochain:
    """Pull back beta (on L) along conjugation by g: a cochain on g^-1 L g with
    beta^g(s, t) = beta(g s g^-1, g t g^-1)."""
    L = beta.subgroup
    if L is None:
        raise DomainError("conj_cochain needs a cochain carrying its subgroup")
    G = L.parent
    gi = int(G.inv[g])
    L2 = L.conjugate(gi)
    el2 = np.array(L2.elements)
    img = G.conj(g, el2)                      # g s g^-1 in L
    pos = np.array([L.local(x) for x in img])
    vals = beta.values[np.ix_(pos, pos)]
    return Cochain(L2.as_group(), 2, beta.modulus, vals, L2)


def transport_cochain(beta: Cochain, target: Subgroup) -> Cochain:
    """Re-express a cochain on a subgroup in the local indexing of `target`,
    which must have the same element set."""
    L = beta.subgroup
    if L is None or L.elements != target.elements:
        raise DomainError("subgroups differ")
    return Cochain(target.as_group(), beta.degree, beta.modulus, beta.values, target)
