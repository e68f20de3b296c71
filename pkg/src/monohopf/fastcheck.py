"""Vectorized exact verification kernels for large structure-constant tables.

Associativity on all dim^3 triples and comultiplicativity on all dim^2 pairs
are the only quadratic/cubic suites; everything else stays in plain Python.
The trick: intern every scalar that appears into a pool, precompute pairwise
products of pool entries on demand (exact cyclotomic arithmetic, cached),
and turn each law into "these integer vectors, grouped by target index, sum
to zero" -- a sort + cumulative-sum over int64 arrays.  Common denominators
are factored out per pool, so the integer comparison is exact; any risk of
int64 overflow aborts the kernel (returns None) and the caller falls back
to the pure implementation.  A True from these kernels is a proof,
never an approximation.
"""

from __future__ import annotations

import numpy as np

from .cyclo import CycloNum, lcm

_POOL_BITS = 24
_POOL_MASK = (1 << _POOL_BITS) - 1
_NUM_LIMIT = 1 << 55
_SUM_LIMIT = 1 << 62


class _Overflow(Exception):
    pass


class _Pool:
    """Interns CycloNum scalars at a fixed conductor; index 0 is zero."""

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.entries: list[CycloNum] = []
        self.index: dict = {}
        self._mul: dict = {}
        self._neg: list[int] = []
        self._neg_arr = None
        self._psv = None
        self._psv_len = 0
        self.zero = self.idx(CycloNum.zero(conductor))
        self.one = self.idx(CycloNum.one(conductor))

    def idx(self, c: CycloNum) -> int:
        key = (c.den, c.nums)
        i = self.index.get(key)
        if i is None:
            i = len(self.entries)
            if i >= _POOL_MASK:
                raise _Overflow
            self.entries.append(c)
            self.index[key] = i
        return i

    def mul(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        r = self._mul.get(key)
        if r is None:
            r = self.idx(self.entries[a] * self.entries[b])
            self._mul[key] = r
        return r

    def neg_table(self) -> np.ndarray:
        if self._neg_arr is None or len(self._neg_arr) < len(self.entries):
            while len(self._neg) < len(self.entries):
                i = len(self._neg)
                self._neg.append(self.idx(-self.entries[i]))
            self._neg_arr = np.array(self._neg, dtype=np.int64)
        return self._neg_arr

    def value_matrix(self):
        """(pool size, phi(N)) int64 numerators over one shared denominator."""
        if self._psv is None or self._psv_len != len(self.entries):
            den = 1
            for c in self.entries:
                den = lcm(den, c.den)
            width = len(self.entries[self.zero].nums)
            mat = np.zeros((len(self.entries), width), dtype=np.int64)
            for i, c in enumerate(self.entries):
                scale = den // c.den
                for j, num in enumerate(c.nums):
                    v = num * scale
                    if abs(v) >= _NUM_LIMIT:
                        raise _Overflow
                    mat[i, j] = v
            self._psv = mat
            self._psv_len = len(self.entries)
        return self._psv


class _PairMap:
    """Vectorized lookup of pool-index products, computed exactly on miss."""

    def __init__(self, pool: _Pool):
        self.pool = pool
        self.keys = np.empty(0, dtype=np.int64)
        self.vals = np.empty(0, dtype=np.int64)

    def lookup(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        pairs = (a << _POOL_BITS) | b
        uniq = np.unique(pairs)
        pos = np.searchsorted(self.keys, uniq)
        pos_c = np.minimum(pos, max(len(self.keys) - 1, 0))
        if len(self.keys):
            missing = uniq[(pos == len(self.keys)) | (self.keys[pos_c] != uniq)]
        else:
            missing = uniq
        if len(missing):
            newvals = [self.pool.mul(int(k) >> _POOL_BITS, int(k) & _POOL_MASK)
                       for k in missing]
            keys = np.concatenate([self.keys, missing])
            vals = np.concatenate([self.vals,
                                   np.array(newvals, dtype=np.int64)])
            order = np.argsort(keys)
            self.keys, self.vals = keys[order], vals[order]
        return self.vals[np.searchsorted(self.keys, pairs)]


def _mult_tables(alg, pool: _Pool):
    dim = alg.dim
    width = max((len(terms) for row in alg.mult for terms in row), default=0)
    width = max(width, 1)
    tbk = np.zeros((dim, dim, width), dtype=np.int64)
    tbp = np.zeros((dim, dim, width), dtype=np.int64)
    for i in range(dim):
        for j in range(dim):
            for s, (k, c) in enumerate(alg.mult[i][j]):
                tbk[i, j, s] = k
                tbp[i, j, s] = pool.idx(c)
    return tbk, tbp


def _segments_zero(kidx: np.ndarray, pidx: np.ndarray, pool: _Pool) -> bool:
    """True iff, within each slice, terms grouped by kidx sum to zero."""
    nterms = kidx.shape[-1]
    pack = (kidx << _POOL_BITS) | pidx
    pack.sort(axis=-1)
    kidx = pack >> _POOL_BITS
    pidx = pack & _POOL_MASK
    psv = pool.value_matrix()
    if nterms * int(np.abs(psv).max(initial=0)) >= _SUM_LIMIT:
        raise _Overflow
    vals = psv[pidx]
    cums = np.cumsum(vals, axis=-2)
    ends = np.ones(kidx.shape, dtype=bool)
    ends[..., :-1] = kidx[..., 1:] != kidx[..., :-1]
    return not bool(cums[ends].any())


def assoc_fast(alg) -> bool | None:
    """Exact associativity over all triples; None if the kernel can't run."""
    if alg.dim >= (1 << 20):
        return None
    try:
        pool = _Pool(alg.conductor)
        tbk, tbp = _mult_tables(alg, pool)
        pm = _PairMap(pool)
        dim = alg.dim
        for i in range(dim):
            m1k, m1p = tbk[i], tbp[i]                      # (D, S)
            lk = tbk[m1k]                                  # (D, S, D, S)
            lp = pm.lookup(m1p[:, :, None, None], tbp[m1k])
            lk = lk.transpose(0, 2, 1, 3).reshape(dim, dim, -1)
            lp = lp.transpose(0, 2, 1, 3).reshape(dim, dim, -1)
            rk = tbk[i][tbk]                               # (D, D, S, S)
            rp = pm.lookup(tbp[:, :, :, None], tbp[i][tbk])
            rk = rk.reshape(dim, dim, -1)
            rp = pool.neg_table()[rp.reshape(dim, dim, -1)]
            kidx = np.concatenate([lk, rk], axis=2)
            pidx = np.concatenate([lp, rp], axis=2)
            if not _segments_zero(kidx, pidx, pool):
                return False
        return True
    except _Overflow:
        return None


def comult_mult_fast(alg) -> bool | None:
    """Exact D(ab) = D(a)D(b) over all pairs; None if the kernel can't run."""
    if alg.dim ** 2 >= (1 << 38):
        return None
    try:
        pool = _Pool(alg.conductor)
        tbk, tbp = _mult_tables(alg, pool)
        dim = alg.dim
        cwidth = max((len(terms) for terms in alg.comult), default=0)
        cwidth = max(cwidth, 1)
        dla = np.zeros((dim, cwidth), dtype=np.int64)
        dlb = np.zeros((dim, cwidth), dtype=np.int64)
        dlp = np.zeros((dim, cwidth), dtype=np.int64)
        for i in range(dim):
            for t, ((a, b), c) in enumerate(alg.comult[i]):
                dla[i, t] = a
                dlb[i, t] = b
                dlp[i, t] = pool.idx(c)
        dpair = dla * dim + dlb
        pm = _PairMap(pool)
        neg = pool.neg_table
        for i in range(dim):
            ks = tbk[i]                                    # (D, S)
            parts_k = [dpair[ks].reshape(dim, -1)]         # (D, S*T)
            parts_p = [pm.lookup(tbp[i][:, :, None], dlp[ks]).reshape(dim, -1)]
            for t1 in range(cwidth):
                c1 = int(dlp[i, t1])
                if c1 == pool.zero:
                    continue
                a1, b1 = int(dla[i, t1]), int(dlb[i, t1])
                k1 = tbk[a1][dla]                          # (D, T, S)
                v1 = tbp[a1][dla]
                k2 = tbk[b1][dlb]
                v2 = tbp[b1][dlb]
                cc = pm.lookup(c1, dlp)                    # (D, T)
                v12 = pm.lookup(v1[..., :, None], v2[..., None, :])
                vals = pm.lookup(cc[..., None, None], v12)  # (D, T, S, S)
                pairs = k1[..., :, None] * dim + k2[..., None, :]
                parts_k.append(pairs.reshape(dim, -1))
                parts_p.append(neg()[vals.reshape(dim, -1)])
            kidx = np.concatenate(parts_k, axis=1)
            pidx = np.concatenate(parts_p, axis=1)
            if not _segments_zero(kidx, pidx, pool):
                return False
        return True
    except _Overflow:
        return None
