"""Exact linear algebra over Z/N.

Systems are split by CRT into prime powers.  Over Z/p^k a system is
handled level by level: pick a maximal set of rows and columns that is
invertible mod p, eliminate, and recurse on the Schur complement divided
by p.  Pivot search runs in float64 BLAS on residues mod p, which is exact
because every product and partial sum stays below 2^53.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np
import scipy.sparse as sp
from sympy import factorint

_EXACT = 2.0 ** 52


def _as_int(A):
    if sp.issparse(A):
        return A.tocsr().astype(np.int64)
    return np.asarray(A, dtype=np.int64)


def mm_mod(A, B, N: int) -> np.ndarray:
    """(A @ B) mod N without overflow; A may be sparse."""
    B = np.asarray(B, dtype=np.int64) % N
    if sp.issparse(A):
        A = A.tocsr()
        A = A.copy()
        A.data %= N
        inner = int(np.diff(A.indptr).max()) if A.shape[0] else 0
        if inner * (N - 1) ** 2 < 2 ** 62:
            return np.asarray(A @ B) % N
        s = math.isqrt(N) + 1
        return (mm_mod(A, B // s, N) * s + mm_mod(A, B % s, N)) % N
    A = np.asarray(A, dtype=np.int64) % N
    inner = A.shape[-1]
    if inner == 0:
        return np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    if inner * float(N - 1) ** 2 < _EXACT:
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % N
    s = math.isqrt(N) + 1
    hi, lo = B // s, B % s
    if inner * float(N - 1) * (s - 1) < _EXACT:
        Af = A.astype(np.float64)
        r_hi = np.rint(Af @ hi.astype(np.float64)).astype(np.int64) % N
        r_lo = np.rint(Af @ lo.astype(np.float64)).astype(np.int64) % N
        return (r_hi * s + r_lo) % N
    return (A @ B) % N  # int64 fallback; callers keep N small enough for this


def _inv_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod a prime (Gauss-Jordan)."""
    n = A.shape[0]
    M = np.concatenate([A % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = c + int(np.flatnonzero(M[c:, c] % p)[0])
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
        M[c] = (M[c] * pow(int(M[c, c]), -1, p)) % p
        col = M[:, c].copy()
        col[c] = 0
        nz = np.flatnonzero(col)
        if nz.size:
            M[nz] = (M[nz] - np.outer(col[nz], M[c])) % p
    return M[:, n:]


def inv_mod_prime_power(A: np.ndarray, p: int, k: int) -> np.ndarray:
    """Inverse mod p^k of a matrix invertible mod p, by Newton lifting."""
    N = p ** k
    X = _inv_mod_p(A, p)
    e = 1
    n = A.shape[0]
    I2 = 2 * np.eye(n, dtype=np.int64)
    while e < k:
        e = min(2 * e, k)
        X = mm_mod(X, (I2 - mm_mod(A, X, N)) % N, N)
    return X % N


def rank_profile_mod_p(A, p: int, chunk: int = 2048):
    """Rows I and columns J with A[I, J] invertible mod p and |I| = rank.

    Rows are scanned in order and kept greedily, so I is the lexicographically
    first independent row set.
    """
    R, C = A.shape
    E = np.zeros((0, C), dtype=np.float64)       # reduced basis, E[:, J] = identity
    J: list = []
    I: list = []
    sparse = sp.issparse(A)
    for start in range(0, R, chunk):
        stop = min(R, start + chunk)
        X = A[start:stop]
        X = (X.toarray() if sparse else np.asarray(X)).astype(np.int64) % p
        if not X.any():
            continue
        if J:
            Xf = X.astype(np.float64)
            X = (X - np.rint(Xf[:, J] @ E).astype(np.int64)) % p
        rows = np.flatnonzero(X.any(axis=1))
        if rows.size == 0:
            continue
        new_rows = []        # local reduced rows added during this chunk
        new_cols = []
        for r in rows:
            v = X[r]
            if new_rows:
                coef = v[new_cols]
                if coef.any():
                    v = (v - coef @ np.array(new_rows)) % p
            nz = np.flatnonzero(v)
            if nz.size == 0:
                continue
            c = int(nz[0])
            v = (v * pow(int(v[c]), -1, p)) % p
            if new_rows:
                NR = np.array(new_rows)
                f = NR[:, c].copy()
                if f.any():
                    NR = (NR - np.outer(f, v)) % p
                new_rows = [row for row in NR]
            new_rows.append(v)
            new_cols.append(c)
            I.append(start + int(r))
        if new_rows:
            NR = np.array(new_rows, dtype=np.int64)
            if J:
                Ei = E.astype(np.int64)
                f = Ei[:, new_cols]
                Ei = (Ei - mm_mod(f, NR, p)) % p
                E = Ei.astype(np.float64)
            E = np.concatenate([E, NR.astype(np.float64)], axis=0)
            J.extend(new_cols)
        if len(J) == C:
            break
    return I, J


def _extract(A, rows, cols):
    if sp.issparse(A):
        sub = A[rows][:, cols]
        return sub
    return np.asarray(A)[np.ix_(rows, cols)]


def _dense(A):
    return A.toarray() if sp.issparse(A) else np.asarray(A)


class _Level:
    """One p-adic elimination level for A x = b mod p^k."""

    def __init__(self, A, p: int, k: int):
        self.p, self.k = p, k
        self.N = N = p ** k
        self.shape = R, C = A.shape
        I, J = rank_profile_mod_p(A, p)
        self.I = np.array(I, dtype=np.int64)
        self.J = np.array(J, dtype=np.int64)
        rmask = np.ones(R, dtype=bool)
        rmask[self.I] = False
        cmask = np.ones(C, dtype=bool)
        cmask[self.J] = False
        self.Ic = np.flatnonzero(rmask)
        self.K = np.flatnonzero(cmask)
        A = A.tocsr() if sp.issparse(A) else np.asarray(A, dtype=np.int64)
        r = len(I)
        self.A_IJ_inv = inv_mod_prime_power(_dense(_extract(A, self.I, self.J)).astype(np.int64) % N, p, k) if r else np.zeros((0, 0), dtype=np.int64)
        self.A_IK = _dense(_extract(A, self.I, self.K)).astype(np.int64) % N
        self.A_IcJ = _extract(A, self.Ic, self.J)
        if sp.issparse(self.A_IcJ):
            self.A_IcJ = self.A_IcJ.tocsr()
        X = mm_mod(self.A_IJ_inv, self.A_IK, N) if r else np.zeros((0, len(self.K)), dtype=np.int64)
        self.X = X
        self.child = None
        self.nz_rows = np.zeros(0, dtype=np.int64)
        if len(self.K) and len(self.Ic):
            S = (_dense(_extract(A, self.Ic, self.K)).astype(np.int64) - (mm_mod(self.A_IcJ, X, N) if r else 0)) % N
            if (S % p).any():
                raise ArithmeticError("Schur complement is not divisible by p")
            S //= p
            nz = np.flatnonzero(S.any(axis=1))
            self.nz_rows = nz
            if k > 1 and nz.size:
                Sn = S[nz]
                # drop duplicate rows, remembering where each went
                uniq, inverse = np.unique(Sn, axis=0, return_inverse=True)
                self.uniq_inverse = inverse.ravel()
                self.child = _Level(uniq, p, k - 1)

    def solve(self, b: np.ndarray) -> Optional[np.ndarray]:
        """b has shape (R,) or (R, m); returns x mod p^k or None."""
        p, k, N = self.p, self.k, self.N
        b = np.asarray(b, dtype=np.int64) % N
        vec = b.ndim == 1
        if vec:
            b = b[:, None]
        m = b.shape[1]
        r = len(self.I)
        bI = b[self.I]
        y = mm_mod(self.A_IJ_inv, bI, N) if r else np.zeros((0, m), dtype=np.int64)
        bc = b[self.Ic]
        if r and len(self.Ic):
            bc = (bc - mm_mod(self.A_IcJ, y, N)) % N
        if (bc % p).any():
            return None
        uK = np.zeros((len(self.K), m), dtype=np.int64)
        if k > 1 and len(self.Ic):
            bb = bc // p
            zero = np.ones(len(self.Ic), dtype=bool)
            zero[self.nz_rows] = False
            if (bb[zero] % (N // p)).any():
                return None
            if self.child is not None:
                sub = bb[self.nz_rows]
                # duplicate rows of the Schur complement need equal right-hand sides
                first = np.full(self.child.shape[0], -1, dtype=np.int64)
                order = np.arange(len(self.uniq_inverse))
                first[self.uniq_inverse[::-1]] = order[::-1]
                if ((sub - sub[first[self.uniq_inverse]]) % (N // p)).any():
                    return None
                u = self.child.solve(sub[first])
                if u is None:
                    return None
                uK = u if u.ndim == 2 else u[:, None]
        x = np.zeros((self.shape[1], m), dtype=np.int64)
        x[self.K] = uK % N
        if r:
            x[self.J] = mm_mod(self.A_IJ_inv, (bI - mm_mod(self.A_IK, uK, N)) % N, N)
        return x[:, 0] if vec else x

    def kernel(self) -> np.ndarray:
        """Generators (as rows) of {x : A x = 0 mod p^k}."""
        p, k, N = self.p, self.k, self.N
        gens_K = []
        if self.child is not None:
            for w in self.child.kernel():
                gens_K.append(w % N)
        elif k > 1 and len(self.K):
            # rows of the Schur complement are all zero: everything mod p^(k-1) works
            gens_K.extend(np.eye(len(self.K), dtype=np.int64))
        scale = p ** (k - 1)
        for i in range(len(self.K)):
            e = np.zeros(len(self.K), dtype=np.int64)
            e[i] = scale
            gens_K.append(e)
        out = []
        for g in gens_K:
            x = np.zeros(self.shape[1], dtype=np.int64)
            x[self.K] = g
            if len(self.J):
                x[self.J] = (-mm_mod(self.X, g[:, None], N)[:, 0]) % N
            if x.any():
                out.append(x % N)
        return np.array(out, dtype=np.int64).reshape(-1, self.shape[1])


class ModSystem:
    """A x = b over Z/N for a fixed integer matrix A; factorizations are cached."""

    def __init__(self, A, N: int):
        self.A = _as_int(A)
        self.N = int(N)
        self.shape = self.A.shape
        self.parts = [(p, k, p ** k) for p, k in sorted(factorint(self.N).items())]
        self._levels: dict = {}

    def _level(self, p, k):
        if (p, k) not in self._levels:
            A = self.A
            if sp.issparse(A):
                A = A.copy()
                A.data %= p ** k
                A.eliminate_zeros()
            else:
                A = A % p ** k
            self._levels[(p, k)] = _Level(A, p, k)
        return self._levels[(p, k)]

    def _crt_unit(self, q):
        """e with e = 1 mod q and e = 0 mod N/q."""
        rest = self.N // q
        return (rest * pow(rest, -1, q)) % self.N if rest > 1 else 1

    def solve(self, b) -> Optional[np.ndarray]:
        b = np.asarray(b, dtype=np.int64)
        if self.N == 1:
            return np.zeros((self.shape[1],) + b.shape[1:], dtype=np.int64)
        x = 0
        for p, k, q in self.parts:
            xp = self._level(p, k).solve(b % q)
            if xp is None:
                return None
            x = (x + xp * self._crt_unit(q)) % self.N
        return x

    def kernel(self) -> np.ndarray:
        rows = []
        if self.N == 1:
            return np.zeros((0, self.shape[1]), dtype=np.int64)
        for p, k, q in self.parts:
            e = self._crt_unit(q)
            for g in self._level(p, k).kernel():
                rows.append((g * e) % self.N)
        return np.array(rows, dtype=np.int64).reshape(-1, self.shape[1])


def solve_mod(A, b, N: int) -> Optional[np.ndarray]:
    return ModSystem(A, N).solve(b)


def kernel_mod(A, N: int) -> np.ndarray:
    return ModSystem(A, N).kernel()


# ----------------------------------------------------------------------
# canonical residues modulo a submodule of (Z/N)^n


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _unit_to_gcd(a: int, N: int) -> int:
    """A unit u mod N with u a = gcd(a, N) mod N."""
    g, x, _ = _xgcd(a % N, N)
    step = N // g
    u = x % N
    while math.gcd(u, N) != 1:
        u = (u + step) % N
    return u


class HowellBasis:
    """Howell-form basis of the submodule of (Z/N)^n spanned by given vectors.

    reduce(v) returns a canonical representative of v modulo the submodule,
    so two vectors are congruent iff their reductions agree.
    """

    def __init__(self, gens, n: int, N: int):
        self.n, self.N = n, N
        self.rows = [None] * n         # row with leading position i, or None
        for g in gens:
            self._insert([int(x) % N for x in g])

    def _insert(self, v):
        N = self.N
        stack = [v]
        while stack:
            v = stack.pop()
            for i in range(self.n):
                if v[i] % N == 0:
                    v[i] = 0
                    continue
                h = self.rows[i]
                if h is None:
                    u = _unit_to_gcd(v[i], N)
                    v = [(u * t) % N for t in v]          # now v[i] divides N
                    self.rows[i] = v
                    ann = N // v[i]
                    if ann != 1:
                        stack.append([(ann * t) % N for t in v])
                    self._normalize(i)
                    break
                a, b = h[i], v[i]
                g, x, y = _xgcd(a, b)
                new = [(x * s + y * t) % N for s, t in zip(h, v)]
                v = [((b // g) * s - (a // g) * t) % N for s, t in zip(h, v)]
                self.rows[i] = new
                ann = N // math.gcd(new[i], N)
                if ann != 1:
                    stack.append([(ann * t) % N for t in new])
                self._normalize(i)

    def _normalize(self, i):
        N = self.N
        h = self.rows[i]
        if h[i] and N % h[i]:
            u = _unit_to_gcd(h[i], N)
            self.rows[i] = [(u * t) % N for t in h]

    def reduce(self, v) -> tuple:
        N = self.N
        v = [int(x) % N for x in v]
        for i in range(self.n):
            h = self.rows[i]
            if h is None or v[i] == 0:
                continue
            q = v[i] // h[i]
            if q:
                v = [(s - q * t) % N for s, t in zip(v, h)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))
