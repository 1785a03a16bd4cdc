"""Exact arithmetic in Q(zeta_M), elements as rational coordinate tuples in
the power basis 1, z, ..., z^(phi(M)-1) modulo the M-th cyclotomic polynomial."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import Poly, cyclotomic_poly, symbols


@lru_cache(maxsize=None)
def reduction_table(M: int) -> np.ndarray:
    """R[k] = coordinates of z^k, 0 <= k < M (integer entries)."""
    x = symbols("x")
    phi = Poly(cyclotomic_poly(M, x), x)
    d = phi.degree()
    coeffs = [int(c) for c in phi.all_coeffs()[::-1]]  # low to high, monic
    R = np.zeros((M, d), dtype=np.int64)
    cur = np.zeros(d, dtype=np.int64)
    cur[0] = 1
    for k in range(M):
        R[k] = cur
        # multiply by x and reduce with x^d = -(c_0 + ... + c_{d-1} x^{d-1})
        top = cur[-1]
        cur = np.concatenate([[0], cur[:-1]])
        cur = cur - top * np.array(coeffs[:d], dtype=np.int64)
    return R


def counts_to_coords(counts, M: int) -> np.ndarray:
    """Integer coordinates of sum_k counts[k] z^k."""
    return np.asarray(counts, dtype=np.int64) @ reduction_table(M)


class CycloField:
    """Q(zeta_M) with elements stored as tuples of Fractions."""

    def __init__(self, M: int):
        self.M = int(M)
        self.R = reduction_table(self.M)
        self.d = self.R.shape[1]
        self._roots = [tuple(Fraction(int(v)) for v in self.R[k]) for k in range(self.M)]
        self.zero = tuple(Fraction(0) for _ in range(self.d))
        self.one = self._roots[0]

    def root(self, k: int):
        return self._roots[k % self.M]

    def from_counts(self, counts):
        return tuple(Fraction(int(v)) for v in counts_to_coords(counts, self.M))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def is_zero(self, a) -> bool:
        return not any(a)

    def mul(self, a, b):
        out = [Fraction(0)] * self.d
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                r = self.R[(i + j) % self.M]
                c = x * y
                for k in range(self.d):
                    if r[k]:
                        out[k] += c * int(r[k])
        return tuple(out)

    def mul_root(self, a, k: int):
        return self.mul(a, self.root(k))

    def as_root(self, a):
        """k with a = z^k, or None."""
        for k, r in enumerate(self._roots):
            if r == a:
                return k
        return None

    def inv(self, a):
        k = self.as_root(a)
        if k is not None:
            return self.root(-k)
        # solve (multiplication by a) y = 1
        basis = [tuple(Fraction(int(i == j)) for j in range(self.d)) for i in range(self.d)]
        cols = [self.mul(a, e) for e in basis]
        A = [[cols[j][i] for j in range(self.d)] + [self.one[i]] for i in range(self.d)]
        n = self.d
        for c in range(n):
            piv = next((r for r in range(c, n) if A[r][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("not invertible")
            A[c], A[piv] = A[piv], A[c]
            pv = A[c][c]
            A[c] = [v / pv for v in A[c]]
            for r in range(n):
                if r != c and A[r][c] != 0:
                    f = A[r][c]
                    A[r] = [v - f * w for v, w in zip(A[r], A[c])]
        return tuple(A[i][n] for i in range(n))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a) -> str:
        k = self.as_root(a)
        if k is not None:
            return "1" if k == 0 else f"z^{k}"
        if self.is_zero(a):
            return "0"
        return "[" + ", ".join(str(x) for x in a) + "]"


def solve_sparse(field: CycloField, equations, nvars: int):
    """Solve a sparse linear system over the field.

    equations: list of (dict var -> coeff, rhs).  Equations with a single
    remaining unknown are solved first; whatever is left goes through dense
    Gauss-Jordan.  Returns a list of values or None when inconsistent.  Free
    variables are set to zero.
    """
    eqs = [(dict(c), r) for c, r in equations]
    occurs: dict = {}
    for i, (c, _) in enumerate(eqs):
        for v in c:
            occurs.setdefault(v, set()).add(i)
    value: dict = {}
    alive = set(range(len(eqs)))
    queue = [i for i in alive if len(eqs[i][0]) == 1]
    while queue:
        i = queue.pop()
        if i not in alive:
            continue
        c, r = eqs[i]
        if len(c) != 1:
            if len(c) == 0:
                alive.discard(i)
                if not field.is_zero(r):
                    return None
            continue
        (v, a), = c.items()
        val = field.div(r, a)
        value[v] = val
        alive.discard(i)
        for j in occurs.get(v, ()):
            if j == i or j not in alive:
                continue
            cj, rj = eqs[j]
            coef = cj.pop(v)
            rj = field.sub(rj, field.mul(coef, val))
            eqs[j] = (cj, rj)
            if len(cj) <= 1:
                queue.append(j)
    for i in list(alive):
        c, r = eqs[i]
        if not c:
            alive.discard(i)
            if not field.is_zero(r):
                return None
    if alive:
        rest = _dense_solve(field, [eqs[i] for i in sorted(alive)])
        if rest is None:
            return None
        value.update(rest)
    return [value.get(v, field.zero) for v in range(nvars)]


def _dense_solve(field: CycloField, eqs):
    vars_ = sorted({v for c, _ in eqs for v in c})
    pos = {v: k for k, v in enumerate(vars_)}
    n = len(vars_)
    rows = []
    for c, r in eqs:
        row = [field.zero] * (n + 1)
        for v, a in c.items():
            row[pos[v]] = a
        row[n] = r
        rows.append(row)
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows)) if not field.is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not field.is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(rows)):
        if not field.is_zero(rows[i][n]):
            return None
    out = {v: field.zero for v in vars_}
    for i, col in enumerate(pivots):
        out[vars_[col]] = rows[i][n]
    return out
