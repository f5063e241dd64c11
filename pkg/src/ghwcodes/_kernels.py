"""Hot loops over the subspace lattice.

Each kernel has a numba implementation and a vectorised numpy implementation
with identical outputs.  ``GHWCODES_DISABLE_NUMBA=1`` (or a missing numba)
routes the public entry points to numpy.

Both kernels address subspaces through a :class:`~ghwcodes.linalg.SubspaceLayout`
and a half-open global index range ``[lo, hi)``.

support_hist
    For each r-subspace V of the message space, OR the codeword support masks of
    its RREF basis rows and popcount.  Returns a histogram over ``0..n``.
span_sums
    For each r-subspace V, sum ``weights[l, enc(v)]`` over all q^r vectors v of
    V.  Returns one row per subspace.
"""

from __future__ import annotations

import numpy as np

from ._config import numba_disabled

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_JIT_OPTS = dict(nogil=True, cache=True)


# -- numpy path -------------------------------------------------------------------

def _counters(layout, p, c0, c1):
    """Free-entry digits for counters c0..c1-1 of pattern p, shape (B, F)."""
    q = layout.q
    f = int(layout.nfree[p])
    c = np.arange(c0, c1, dtype=np.int64)
    if f == 0:
        return np.zeros((c.size, 0), dtype=np.int64)
    weights = q ** np.arange(f - 1, -1, -1, dtype=np.int64)
    return (c[:, None] // weights[None, :]) % q


def _pattern_slices(layout, lo, hi):
    """Split [lo, hi) into (pattern, counter_start, counter_stop) pieces."""
    offsets = layout.offsets
    p = int(np.searchsorted(offsets, lo, side="right")) - 1
    s = lo
    while s < hi:
        end = min(hi, int(offsets[p + 1]))
        yield p, s - int(offsets[p]), end - int(offsets[p])
        s = end
        p += 1


def _row_codes(layout, p, digits):
    """Encodings of the r basis rows for each counter, shape (B, r)."""
    q, r = layout.q, layout.r
    qpow = q ** np.arange(layout.k + 1, dtype=np.int64)
    codes = np.broadcast_to(qpow[layout.pivots[p]], (digits.shape[0], r)).copy()
    for t in range(digits.shape[1]):
        codes[:, layout.free_row[p, t]] += digits[:, t] * qpow[layout.free_col[p, t]]
    return codes


def support_hist_numpy(masks, layout, lo, hi, n, batch=1 << 14):
    hist = np.zeros(n + 1, dtype=np.int64)
    for p, c0, c1 in _pattern_slices(layout, lo, hi):
        for b0 in range(c0, c1, batch):
            b1 = min(c1, b0 + batch)
            codes = _row_codes(layout, p, _counters(layout, p, b0, b1))
            union = np.bitwise_or.reduce(masks[codes], axis=1)  # (B, W)
            w = np.bitwise_count(union).sum(axis=1, dtype=np.int64)
            hist += np.bincount(w, minlength=n + 1)
    return hist


def span_sums_numpy(weights, add, mul, layout, lo, hi, batch_elems=1 << 22):
    q, k, r = layout.q, layout.k, layout.r
    L = weights.shape[0]
    out = np.zeros((hi - lo, L), dtype=np.int64)
    qpow = q ** np.arange(k, dtype=np.int64)
    scal = np.arange(q, dtype=np.int64)
    batch = max(1, batch_elems // max(1, q**r * k))
    pos = 0
    for p, c0, c1 in _pattern_slices(layout, lo, hi):
        for b0 in range(c0, c1, batch):
            b1 = min(c1, b0 + batch)
            digits = _counters(layout, p, b0, b1)
            B = b1 - b0
            rows = np.zeros((B, r, k), dtype=np.int64)
            rows[:, np.arange(r), layout.pivots[p]] = 1
            for t in range(digits.shape[1]):
                rows[:, layout.free_row[p, t], layout.free_col[p, t]] = digits[:, t]
            elems = np.zeros((B, 1, k), dtype=np.int64)
            for i in range(r):
                scaled = mul[scal[None, :, None], rows[:, i, None, :]]  # (B, q, k)
                elems = add[scaled[:, :, None, :], elems[:, None, :, :]].reshape(B, -1, k)
            codes = elems @ qpow  # (B, q^r)
            for l in range(L):
                out[pos:pos + B, l] = weights[l][codes].sum(axis=1)
            pos += B
    return out


# -- numba path -------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(**_JIT_OPTS)
    def _popcount64(x):
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)

    @njit(**_JIT_OPTS)
    def _support_hist_nb(masks, q, k, r, pivots, free_row, free_col, nfree, offsets, lo, hi, n):
        hist = np.zeros(n + 1, dtype=np.int64)
        W = masks.shape[1]
        qpow = np.empty(k + 1, dtype=np.int64)
        qpow[0] = 1
        for i in range(1, k + 1):
            qpow[i] = qpow[i - 1] * q
        codes = np.empty(r, dtype=np.int64)
        p = np.searchsorted(offsets, lo, side="right") - 1
        for s in range(lo, hi):
            while s >= offsets[p + 1]:
                p += 1
            c = s - offsets[p]
            for i in range(r):
                codes[i] = qpow[pivots[p, i]]
            for t in range(nfree[p] - 1, -1, -1):
                d = c % q
                c //= q
                codes[free_row[p, t]] += d * qpow[free_col[p, t]]
            w = 0
            for j in range(W):
                acc = np.uint64(0)
                for i in range(r):
                    acc |= masks[codes[i], j]
                w += np.int64(_popcount64(acc))
            hist[w] += 1
        return hist

    @njit(**_JIT_OPTS)
    def _span_sums_nb(weights, add, mul, q, k, r, pivots, free_row, free_col, nfree, offsets, lo, hi):
        L = weights.shape[0]
        out = np.zeros((hi - lo, L), dtype=np.int64)
        qpow = np.empty(k + 1, dtype=np.int64)
        qpow[0] = 1
        for i in range(1, k + 1):
            qpow[i] = qpow[i - 1] * q
        size_all = qpow[0]
        for i in range(r):
            size_all *= q
        rows = np.zeros((r, k), dtype=np.int64)
        elems = np.zeros((size_all, k), dtype=np.int64)
        p = np.searchsorted(offsets, lo, side="right") - 1
        for s in range(lo, hi):
            while s >= offsets[p + 1]:
                p += 1
            c = s - offsets[p]
            rows[:, :] = 0
            for i in range(r):
                rows[i, pivots[p, i]] = 1
            for t in range(nfree[p] - 1, -1, -1):
                rows[free_row[p, t], free_col[p, t]] = c % q
                c //= q
            size = 1
            for i in range(r):
                for a in range(1, q):
                    base = a * size
                    for e in range(size):
                        for col in range(k):
                            elems[base + e, col] = add[elems[e, col], mul[a, rows[i, col]]]
                size *= q
            for e in range(size):
                code = 0
                for col in range(k):
                    code += elems[e, col] * qpow[col]
                for l in range(L):
                    out[s - lo, l] += weights[l, code]
        return out

    def support_hist_numba(masks, layout, lo, hi, n):
        return _support_hist_nb(
            masks, layout.q, layout.k, layout.r, layout.pivots, layout.free_row,
            layout.free_col, layout.nfree, layout.offsets, lo, hi, n,
        )

    def span_sums_numba(weights, add, mul, layout, lo, hi):
        return _span_sums_nb(
            np.ascontiguousarray(weights), add, mul, layout.q, layout.k, layout.r,
            layout.pivots, layout.free_row, layout.free_col, layout.nfree,
            layout.offsets, lo, hi,
        )


def backend() -> str:
    """Name of the kernel implementation the public entry points use."""
    if HAVE_NUMBA and not numba_disabled():
        return "numba"
    return "numpy"


def support_hist(masks, layout, lo, hi, n):
    if backend() == "numba":
        return support_hist_numba(masks, layout, lo, hi, n)
    return support_hist_numpy(masks, layout, lo, hi, n)


def span_sums(weights, add, mul, layout, lo, hi):
    if backend() == "numba":
        return span_sums_numba(weights, add, mul, layout, lo, hi)
    return span_sums_numpy(weights, add, mul, layout, lo, hi)


# -- shared helpers ---------------------------------------------------------------

def codeword_table(gen: np.ndarray, add, mul, q: int) -> np.ndarray:
    """Every codeword ``yG`` indexed by the encoding of ``y``, shape (q^k, n).

    Built by linearity: the block of messages whose top nonzero coordinate i
    equals a is the block below it shifted by ``a * G[i]``.
    """
    k, n = gen.shape
    dtype = np.int16 if q <= np.iinfo(np.int16).max else np.int32
    cw = np.zeros((q**k, n), dtype=dtype)
    size = 1
    for i in range(k):
        for a in range(1, q):
            cw[a * size:(a + 1) * size] = add[cw[:size], mul[a, gen[i]][None, :]]
        size *= q
    return cw


def support_masks(codewords: np.ndarray) -> np.ndarray:
    """Pack the nonzero pattern of each codeword into uint64 words."""
    bits = np.packbits(codewords != 0, axis=1, bitorder="little")
    nbytes = bits.shape[1]
    target = max(8, -(-nbytes // 8) * 8)
    bits = np.pad(bits, ((0, 0), (0, target - nbytes)))
    return np.ascontiguousarray(bits).view(np.uint64)


def warmup() -> None:
    """Compile the numba kernels on a toy instance."""
    if backend() != "numba":
        return
    from .field import field_create
    from .linalg import subspace_layout

    f = field_create(2)
    t = f.tables()
    gen = np.eye(2, dtype=np.int64)
    masks = support_masks(codeword_table(gen, t["add"], t["mul"], 2))
    lay = subspace_layout(2, 2, 1)
    support_hist(masks, lay, 0, lay.count, 2)
    span_sums(np.ones((1, 4), dtype=np.int64), t["add"], t["mul"], lay, 0, lay.count)
