"""Finite groups stored as dense Cayley tables.

Elements are integers 0..n-1.  Every constructor here fixes a normal form
for element labels so that tables, subgroup lists and reports come out in
the same order on every run.
"""
from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import isprime, n_order


class GroupSpecError(ValueError):
    """Malformed group spec."""


class DomainError(ValueError):
    """Parameters outside the allowed family constraints."""


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, mul, labels: Optional[Sequence[str]] = None, spec: str = "", identity: Optional[int] = None):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int32))
        n = mul.shape[0]
        if mul.shape != (n, n):
            raise ValueError("multiplication table must be square")
        self.mul = mul
        self.mul.setflags(write=False)
        self.order = n
        if identity is None:
            rows = np.flatnonzero((mul == np.arange(n)).all(axis=1))
            if len(rows) != 1:
                raise ValueError("no two-sided identity")
            identity = int(rows[0])
        self.identity = identity
        e_pos = np.argwhere(mul == identity)
        inv = np.full(n, -1, dtype=np.int32)
        inv[e_pos[:, 0]] = e_pos[:, 1]
        if (inv < 0).any():
            raise ValueError("some element has no inverse")
        self.inv = inv
        self.inv.setflags(write=False)
        self.labels = list(labels) if labels is not None else [f"g{i}" for i in range(n)]
        self.spec = spec
        self._key = None

    def __repr__(self):
        return f"FiniteGroup({self.spec or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def key(self) -> bytes:
        """Hashable fingerprint of the table, used for caching solvers."""
        if self._key is None:
            import hashlib
            self._key = hashlib.sha1(self.mul.tobytes()).digest()
        return self._key

    def m(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, g: int, k: int) -> int:
        k %= self.element_order(g)
        r = self.identity
        for _ in range(k):
            r = self.m(r, g)
        return r

    def conj(self, g: int, x):
        """g x g^-1 (vectorized over x)."""
        return self.mul[self.mul[g, x], self.inv[g]]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.m(x, g)
            k += 1
        return k

    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(g) for g in range(self.order)])

    def label(self, g: int) -> str:
        return self.labels[g]

    def index(self, label: str) -> int:
        want = label.replace(" ", "")
        for i, lab in enumerate(self.labels):
            if lab.replace(" ", "") == want:
                return i
        raise KeyError(label)

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def check(self, samples: int = 200000, seed: int = 0) -> None:
        """Verify associativity, unit and inverses; exhaustive up to order 512."""
        n = self.order
        e = self.identity
        ar = np.arange(n)
        if not ((self.mul[e] == ar).all() and (self.mul[:, e] == ar).all()):
            raise ValueError("identity is not a two-sided unit")
        if not ((self.mul[ar, self.inv] == e).all() and (self.mul[self.inv, ar] == e).all()):
            raise ValueError("inverse table is wrong")
        for row in self.mul:
            if len(np.unique(row)) != n:
                raise ValueError("table is not a Latin square")
        if n <= 512:
            for a in range(n):
                lhs = self.mul[self.mul[a]]          # (ab)c indexed [b, c]
                rhs = self.mul[a][self.mul]          # a(bc)
                if not (lhs == rhs).all():
                    b, c = np.argwhere(lhs != rhs)[0]
                    raise ValueError(f"not associative at {(a, int(b), int(c))}")
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, samples))
            if not (self.mul[self.mul[a, b], c] == self.mul[a, self.mul[b, c]]).all():
                raise ValueError("not associative")

    def opposite(self) -> "FiniteGroup":
        """The opposite group (same elements, reversed product)."""
        spec = f"op({self.spec})" if self.spec else ""
        return FiniteGroup(self.mul.T, self.labels, spec, self.identity)

    # subgroup helpers -------------------------------------------------

    def closure(self, gens: Iterable[int]) -> frozenset:
        elems = {self.identity}
        frontier = [self.identity]
        gens = [int(g) for g in gens]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = int(self.mul[x, g])
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return frozenset(elems)

    def subgroup(self, gens: Iterable[int]) -> "Subgroup":
        gens = list(gens)
        return Subgroup(self, self.closure(gens), tuple(int(g) for g in gens))

    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, frozenset([self.identity]))


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple
    generators: tuple = ()

    def __init__(self, parent: FiniteGroup, elements, generators: tuple = ()):
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "elements", tuple(sorted(int(x) for x in elements)))
        if not generators:
            generators = _small_generating_set(parent, self.elements)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "_set", frozenset(self.elements))
        object.__setattr__(self, "_group", None)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return int(g) in self._set

    def __repr__(self):
        gens = ", ".join(self.parent.labels[g] for g in self.generators)
        return f"<{gens}> (order {len(self)})"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.elements)] = True
        return m

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup, indexed by position in `elements`."""
        if self._group is None:
            el = np.array(self.elements)
            pos = np.full(self.parent.order, -1, dtype=np.int64)
            pos[el] = np.arange(len(el))
            table = pos[self.parent.mul[np.ix_(el, el)]]
            labels = [self.parent.labels[g] for g in el]
            G = FiniteGroup(table, labels, spec="", identity=int(pos[self.parent.identity]))
            G.embedding = el
            object.__setattr__(self, "_group", G)
        return self._group

    def local(self, g: int) -> int:
        return self.elements.index(int(g))

    def is_abelian(self) -> bool:
        return self.as_group().is_abelian()

    def is_cyclic(self) -> bool:
        G = self.parent
        return any(G.element_order(g) == self.order for g in self.elements)

    def conjugate(self, g: int) -> "Subgroup":
        """g L g^-1."""
        G = self.parent
        gens = tuple(int(G.conj(g, x)) for x in self.generators)
        return Subgroup(G, G.conj(g, np.array(self.elements)), gens)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self._set & other._set)

    def is_normal(self) -> bool:
        G = self.parent
        el = np.array(self.elements)
        return all(set(G.conj(g, el).tolist()) == self._set for g in range(G.order))


def _small_generating_set(G: FiniteGroup, elements) -> tuple:
    """Greedy generating set, preferring elements of large order then small index."""
    target = frozenset(elements)
    if len(target) == 1:
        return ()
    cand = sorted(target - {G.identity}, key=lambda g: (-G.element_order(g), g))
    gens: list = []
    cur = frozenset([G.identity])
    for g in cand:
        if g not in cur:
            gens.append(g)
            cur = G.closure(gens)
            if cur == target:
                break
    return tuple(gens)


@dataclass(frozen=True)
class GroupAction:
    """actor acting on space by permutations; side is 'left' or 'right'.

    table[s, x] is the image of x under s.
    """
    actor: FiniteGroup
    space: FiniteGroup
    table: np.ndarray
    side: str = "left"

    def check(self) -> bool:
        A, X, t = self.actor, self.space, self.table
        if t.shape != (A.order, X.order):
            return False
        if any(len(np.unique(row)) != X.order for row in t):
            return False
        if not (t[A.identity] == np.arange(X.order)).all():
            return False
        for s in range(A.order):
            for u in range(A.order):
                su = A.m(s, u)
                if self.side == "left":
                    ok = (t[su] == t[s][t[u]]).all()
                else:
                    ok = (t[su] == t[u][t[s]]).all()
                if not ok:
                    return False
        return True


# ----------------------------------------------------------------------
# constructors


def _semidirect(n_f: int, f_mul, f_labels, n_h: int, h_mul, h_labels, act, spec) -> FiniteGroup:
    """F x| H with (f, h)(f', h') = (f * act[h][f'], h h'); index f + |F| h."""
    f_mul = np.asarray(f_mul)
    h_mul = np.asarray(h_mul)
    act = np.asarray(act)
    n = n_f * n_h
    f = np.arange(n) % n_f
    h = np.arange(n) // n_f
    F1, F2 = np.meshgrid(f, f, indexing="ij")
    H1, H2 = np.meshgrid(h, h, indexing="ij")
    mul = f_mul[F1, act[H1, F2]] + n_f * h_mul[H1, H2]
    labels = [_join(f_labels[i % n_f], h_labels[i // n_f]) for i in range(n)]
    return FiniteGroup(mul, labels, spec)


def _join(*parts):
    parts = [p for p in parts if p != "1"]
    return " ".join(parts) if parts else "1"


def _mono(sym, k):
    if k == 0:
        return "1"
    return sym if k == 1 else f"{sym}^{k}"


def cyclic_table(n: int) -> np.ndarray:
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n


def cyclic(n: int, sym: str = "c") -> FiniteGroup:
    if n < 1:
        raise DomainError("cyclic order must be positive")
    return FiniteGroup(cyclic_table(n), [_mono(sym, k) for k in range(n)], f"cyclic:{n}", 0)


def abelian(orders: Sequence[int], syms: Sequence[str]) -> FiniteGroup:
    """Z_{n1} x Z_{n2} x ..., index = mixed radix with the first factor fastest."""
    orders = list(orders)
    n = int(np.prod(orders)) if orders else 1
    coords = _coords(n, orders)
    s = (coords[:, None, :] + coords[None, :, :]) % np.array(orders)
    mul = _index(s, orders)
    labels = [_join(*[_mono(sym, int(c)) for sym, c in zip(syms, coords[i])]) for i in range(n)]
    return FiniteGroup(mul, labels, "", 0)


def _coords(n, orders):
    out = np.zeros((n, len(orders)), dtype=np.int64)
    r = np.arange(n)
    for k, o in enumerate(orders):
        out[:, k] = r % o
        r = r // o
    return out


def _index(coords, orders):
    idx = np.zeros(coords.shape[:-1], dtype=np.int64)
    scale = 1
    for k, o in enumerate(orders):
        idx = idx + scale * coords[..., k]
        scale *= o
    return idx


def direct_product(A: FiniteGroup, B: FiniteGroup, spec: str = "") -> FiniteGroup:
    act = np.tile(np.arange(A.order), (B.order, 1))
    G = _semidirect(A.order, A.mul, A.labels, B.order, B.mul, B.labels, act, spec)
    return G


def ut3(p: int) -> FiniteGroup:
    """F x| Gamma with F = <a, b> = Z_p^2, Gamma = <x>, x.a = a, x.b = ab.

    Element a^i b^j x^n has index i + p j + p^2 n.  This is UT(3, p).
    """
    F = abelian([p, p], ["a", "b"])
    X = cyclic(p, "x")
    co = _coords(p * p, [p, p])
    act = np.zeros((p, p * p), dtype=np.int64)
    for n in range(p):
        act[n] = _index(np.stack([(co[:, 0] + n * co[:, 1]) % p, co[:, 1]], axis=1), [p, p])
    return _semidirect(p * p, F.mul, F.labels, p, X.mul, X.labels, act, f"ut3:{p}")


def t_group(p: int) -> FiniteGroup:
    """Z_{p^2} x| Z_p = <y, z | y^{p^2} = z^p = 1, z y z^-1 = y^{1+p}>."""
    Y = cyclic(p * p, "y")
    Z = cyclic(p, "z")
    act = np.array([[(i * pow(1 + p, k, p * p)) % (p * p) for i in range(p * p)] for k in range(p)])
    return _semidirect(p * p, Y.mul, Y.labels, p, Z.mul, Z.labels, act, f"t:{p}")


def dihedral8() -> FiniteGroup:
    """F x| Gamma with F = <a, b> = Z_2^2, Gamma = <t>, t.a = b."""
    F = abelian([2, 2], ["a", "b"])
    T = cyclic(2, "t")
    swap = [0, 2, 1, 3]
    act = np.array([[0, 1, 2, 3], swap])
    return _semidirect(4, F.mul, F.labels, 2, T.mul, T.labels, act, "dihedral:8")


def dihedral(n2: int) -> FiniteGroup:
    if n2 == 8:
        return dihedral8()
    if n2 < 2 or n2 % 2:
        raise DomainError("dihedral order must be even")
    n = n2 // 2
    R = cyclic(n, "r")
    S = cyclic(2, "s")
    act = np.array([np.arange(n), (-np.arange(n)) % n])
    return _semidirect(n, R.mul, R.labels, 2, S.mul, S.labels, act, f"dihedral:{n2}")


def bgroup(p: int, q: int, m: int, lam: int) -> FiniteGroup:
    """F |x Gamma with F = <g> = Z_p, Gamma = <a, b> = Z_q^2 and
    g a g^-1 = a^m, g b g^-1 = b^(m^lam).

    Element g^k a^i b^j has index k + p (i + q j).
    """
    _check_bparams(p, q, m, lam)
    minv = pow(m, -1, q)
    G_ = abelian([q, q], ["a", "b"])
    co = _coords(q * q, [q, q])
    # right action of F on Gamma: s <| g^k, with a <| g = a^(m^-1)
    rhs = np.zeros((p, q * q), dtype=np.int64)
    for k in range(p):
        ea = pow(minv, k, q)
        eb = pow(minv, k * lam, q)
        rhs[k] = _index(np.stack([(co[:, 0] * ea) % q, (co[:, 1] * eb) % q], axis=1), [q, q])
    return _left_by_right(cyclic(p, "g"), G_, rhs, f"bgroup:{p},{q},{m},{lam}")


def agroup(p: int, q: int, t: int, h: int) -> FiniteGroup:
    """F' |x Gamma' with Gamma' = <a, b | a^q = b^p = 1, a b a^-1 = b^t>,
    F' = <g> = Z_q, b <| g = b^h, a <| g = a.

    Element g^n b^j a^i has index n + q (j + p i).
    """
    _check_aparams(p, q, t, h)
    Gp = gamma_prime(p, q, t)
    co = _coords(p * q, [p, q])
    rhs = np.zeros((q, p * q), dtype=np.int64)
    for n in range(q):
        rhs[n] = _index(np.stack([(co[:, 0] * pow(h, n, p)) % p, co[:, 1]], axis=1), [p, q])
    return _left_by_right(cyclic(q, "g"), Gp, rhs, f"agroup:{p},{q},{t},{h}")


def gamma_prime(p: int, q: int, t: int) -> FiniteGroup:
    """Z_p x| Z_q = <a, b | a^q = b^p = 1, a b a^-1 = b^t>, element b^j a^i at j + p i."""
    B = cyclic(p, "b")
    A = cyclic(q, "a")
    act = np.array([(np.arange(p) * pow(t, i, p)) % p for i in range(q)])
    return _semidirect(p, B.mul, B.labels, q, A.mul, A.labels, act, "")


def _left_by_right(F: FiniteGroup, Gam: FiniteGroup, rhs, spec: str) -> FiniteGroup:
    """Double group of a matched pair with trivial left action:
    (x, s)(y, t) = (x y, (s <| y) t), index x + |F| s."""
    nf, ng = F.order, Gam.order
    n = nf * ng
    x = np.arange(n) % nf
    s = np.arange(n) // nf
    X1, X2 = np.meshgrid(x, x, indexing="ij")
    S1, S2 = np.meshgrid(s, s, indexing="ij")
    mul = F.mul[X1, X2] + nf * Gam.mul[rhs[X2, S1], S2]
    labels = [_join(F.labels[i % nf], Gam.labels[i // nf]) for i in range(n)]
    return FiniteGroup(mul, labels, spec)


def _need_prime(*ps):
    for p in ps:
        if not isprime(p):
            raise DomainError(f"{p} is not prime")


def _check_bparams(p, q, m, lam):
    _need_prime(p, q)
    if p == q:
        raise DomainError("p and q must differ")
    if (q - 1) % p:
        raise DomainError("need q = 1 mod p")
    if m % q == 0 or n_order(m % q, q) != p:
        raise DomainError(f"m={m} does not have order {p} mod {q}")
    if not 0 <= lam < p:
        raise DomainError("lambda must lie in 0..p-1")
    if (lam + 1) % p == 0:
        raise DomainError("lambda = -1 mod p is excluded")


def _check_aparams(p, q, t, h):
    _need_prime(p, q)
    if p == q:
        raise DomainError("p and q must differ")
    if (p - 1) % q:
        raise DomainError("need p = 1 mod q")
    for name, v in (("t", t), ("h", h)):
        if v % p == 0 or n_order(v % p, p) != q:
            raise DomainError(f"{name}={v} does not have order {q} mod {p}")


# ----------------------------------------------------------------------
# spec parsing


def _split_top(s: str, sep: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _ints(s: str, k: int, spec: str) -> list:
    try:
        vals = [int(v) for v in s.split(",")]
    except ValueError:
        raise GroupSpecError(f"bad integer parameters in {spec!r}")
    if len(vals) != k:
        raise GroupSpecError(f"{spec!r} needs {k} parameters")
    return vals


@functools.lru_cache(maxsize=64)
def build_group(spec: str) -> FiniteGroup:
    """Parse a group spec such as 'ut3:3', 'product:cyclic:3;cyclic:3'."""
    s = spec.strip()
    if s.startswith("(") and s.endswith(")"):
        return build_group(s[1:-1])
    if ":" not in s:
        raise GroupSpecError(f"malformed group spec {spec!r}")
    kind, arg = s.split(":", 1)
    if kind == "product":
        parts = [x.strip() for x in _split_top(arg, ";")]
        if len(parts) < 2 or any(not x for x in parts):
            raise GroupSpecError(f"product needs at least two factors: {spec!r}")
        G = build_group(parts[0])
        for part in parts[1:]:
            G = direct_product(G, build_group(part))
        G.spec = s
        return G
    if kind == "cyclic":
        (n,) = _ints(arg, 1, spec)
        G = cyclic(n)
    elif kind == "ut3":
        (p,) = _ints(arg, 1, spec)
        _need_prime(p)
        G = ut3(p)
    elif kind == "t":
        (p,) = _ints(arg, 1, spec)
        _need_prime(p)
        G = t_group(p)
    elif kind == "dihedral":
        (n,) = _ints(arg, 1, spec)
        G = dihedral(n)
    elif kind == "bgroup":
        G = bgroup(*_ints(arg, 4, spec))
    elif kind == "agroup":
        G = agroup(*_ints(arg, 4, spec))
    else:
        raise GroupSpecError(f"unknown group kind {kind!r}")
    G.spec = s
    if G.order <= 512:
        G.check()
    return G


# ----------------------------------------------------------------------
# subgroup lattice


def subgroups(G: FiniteGroup, order_filter: Optional[int] = None) -> list:
    """All subgroups of G (optionally of one order), sorted by (order, elements).

    Built by repeatedly joining known subgroups with cyclic subgroups, which
    reaches every subgroup.
    """
    if order_filter is not None and G.order % order_filter:
        raise DomainError("order filter must divide |G|")
    cache = _lattice_cache.get(G.key)
    if cache is None:
        cache = _lattice(G)
        _lattice_cache[G.key] = cache
    out = [Subgroup(G, els) for els in cache if order_filter is None or len(els) == order_filter]
    return out


_lattice_cache: dict = {}


def _closure_mask(G: FiniteGroup, gens) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    frontier = np.array([G.identity])
    gens = np.asarray(list(gens), dtype=np.int64)
    while frontier.size:
        cand = np.unique(G.mul[np.ix_(frontier, gens)].ravel())
        cand = cand[~mask[cand]]
        mask[cand] = True
        frontier = cand
    return mask


def _lattice(G: FiniteGroup) -> list:
    gens_of = {}
    cyclics = []
    for g in range(G.order):
        key = _closure_mask(G, [g]).tobytes()
        if key not in gens_of:
            gens_of[key] = (g,)
            cyclics.append((np.frombuffer(key, dtype=bool), g))
    layer = list(gens_of)
    while layer:
        nxt = []
        for key in layer:
            H = np.frombuffer(key, dtype=bool)
            for C, g in cyclics:
                if H[g]:
                    continue
                gens = gens_of[key] + (g,)
                J = _closure_mask(G, gens).tobytes()
                if J not in gens_of:
                    gens_of[J] = gens
                    nxt.append(J)
        layer = nxt
    subs = [tuple(np.flatnonzero(np.frombuffer(k, dtype=bool)).tolist()) for k in gens_of]
    return sorted(subs, key=lambda e: (len(e), e))


def conjugacy_classes_of_subgroups(G: FiniteGroup, candidates: Sequence[Subgroup]) -> list:
    """Partition candidates into G-conjugacy classes.

    Returns a list of dicts with keys 'representative' and 'members', where
    members is a list of (subgroup, witness) with witness * rep * witness^-1
    equal to the member.  The representative is the member with the
    lexicographically smallest element tuple.
    """
    remaining = sorted(set(candidates), key=lambda H: (H.order, H.elements))
    classes = []
    while remaining:
        rep = remaining[0]
        members = []
        rest = []
        seen = {}
        for g in range(G.order):
            C = rep.conjugate(g)
            seen.setdefault(C.elements, g)
        for H in remaining:
            if H.elements in seen:
                members.append((H, seen[H.elements]))
            else:
                rest.append(H)
        classes.append({"representative": rep, "members": members})
        remaining = rest
    return classes


def center(G: FiniteGroup) -> Subgroup:
    z = [g for g in range(G.order) if (G.mul[g] == G.mul[:, g]).all()]
    return Subgroup(G, z)


def exponent(G: FiniteGroup) -> int:
    return math.lcm(*[int(o) for o in G.element_orders()]) if G.order > 1 else 1


def is_exact_factorization(G: FiniteGroup, A: Subgroup, B: Subgroup) -> bool:
    return A.order * B.order == G.order and len(A.intersection(B)) == 1


def product_set(G: FiniteGroup, A: Subgroup, B: Subgroup) -> frozenset:
    return frozenset(G.mul[np.ix_(list(A.elements), list(B.elements))].ravel().tolist())


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[dict]:
    """Brute-force isomorphism search through images of a generating set."""
    if G.order != H.order:
        return None
    gens = list(_small_generating_set(G, range(G.order)))
    og = G.element_orders()
    oh = H.element_orders()
    if sorted(og) != sorted(oh):
        return None
    # words: express every element of G as a product of generators
    word = {G.identity: []}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for k, g in enumerate(gens):
                y = G.m(x, g)
                if y not in word:
                    word[y] = word[x] + [k]
                    new.append(y)
        frontier = new

    def attempt(images):
        phi = {}
        for x, w in word.items():
            y = H.identity
            for k in w:
                y = H.m(y, images[k])
            phi[x] = y
        if len(set(phi.values())) != G.order:
            return None
        arr = np.array([phi[x] for x in range(G.order)])
        if (arr[G.mul] == H.mul[np.ix_(arr, arr)]).all():
            return phi
        return None

    cands = [[h for h in range(H.order) if oh[h] == og[g]] for g in gens]

    def rec(i, chosen):
        if i == len(gens):
            return attempt(chosen)
        for h in cands[i]:
            r = rec(i + 1, chosen + [h])
            if r is not None:
                return r
        return None

    return rec(0, [])
