"""Dense linear algebra over GF(q) and canonical subspace enumeration.

Matrices store element indices (see :mod:`ghwcodes.field`) in an int64 array.
Row vectors of length k are also packed into a single integer, the *encoding*
``sum(v[i] * q**i)``, which the enumeration kernels use as a table index.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .field import FieldElement, FiniteField

# beyond this many free entries the per-pattern counters no longer fit in int64
_MAX_LAYOUT_COUNT = 2**62


class MatrixGF:
    """Immutable dense matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: FiniteField, entries) -> None:
        if isinstance(entries, MatrixGF):
            entries = entries.data
        if isinstance(entries, np.ndarray):
            arr = entries.astype(np.int64, copy=True)
        else:
            try:
                arr = np.array([[int(x) for x in row] for row in entries], dtype=np.int64)
            except TypeError:
                raise ValueError("matrix entries must be a list of rows") from None
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries must be element indices of {field!r}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> MatrixGF:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FiniteField, k: int) -> MatrixGF:
        return cls(field, np.eye(k, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def entries(self) -> list[list[FieldElement]]:
        return [[FieldElement(self.field, int(x)) for x in row] for row in self.data]

    def __getitem__(self, key):
        out = self.data[key]
        if np.ndim(out) == 0:
            return FieldElement(self.field, int(out))
        if np.ndim(out) == 1:
            return MatrixGF(self.field, out.reshape(1, -1))
        return MatrixGF(self.field, out)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.data[:, j])

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in col) for col in self.data.T]

    @property
    def T(self) -> MatrixGF:
        return MatrixGF(self.field, self.data.T.copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field!r}, {self.data.tolist()})"

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        _same_field(self, other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return MatrixGF(self.field, matmul(self.field, self.data, other.data))

    def hstack(self, *others: MatrixGF) -> MatrixGF:
        for o in others:
            _same_field(self, o)
        return MatrixGF(self.field, np.hstack([self.data] + [o.data for o in others]))

    def select_columns(self, idx: Sequence[int]) -> MatrixGF:
        return MatrixGF(self.field, self.data[:, list(idx)].reshape(self.rows, len(idx)))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.data.tolist(),
        }

    @staticmethod
    def from_json(obj: dict) -> MatrixGF:
        field = FiniteField.from_json(obj["field"])
        rows, cols = int(obj["rows"]), int(obj["cols"])
        data = np.array(obj["entries"], dtype=np.int64).reshape(rows, cols)
        return MatrixGF(field, data)


def _same_field(a: MatrixGF, b: MatrixGF) -> None:
    if a.field != b.field:
        raise ValueError(f"mixed fields: {a.field!r} and {b.field!r}")


def matmul(field: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of index arrays over ``field`` (shapes (m, k) and (k, n))."""
    t = field.tables()
    add, mul = t["add"], t["mul"]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = add[out, mul[a[:, i, None], b[None, i, :]]]
    return out


def rref(m: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns of ``m``."""
    t = m.field.tables()
    add, mul, neg, inv = t["add"], t["mul"], t["neg"], t["inv"]
    a = m.data.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = add[a[i], mul[neg[a[i, c]], a[r]]]
        pivots.append(c)
        r += 1
    return MatrixGF(m.field, a), r, pivots


def rank(m: MatrixGF) -> int:
    return rref(m)[1]


def kernel_basis(m: MatrixGF) -> MatrixGF:
    """RREF basis (as rows) of the right null space ``{x : m x^T = 0}``."""
    red, rk, pivots = rref(m)
    n = m.cols
    t = m.field.tables()
    neg = t["neg"]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(pivots):
            basis[row, pc] = neg[red.data[i, f]]
    if not len(free):
        return MatrixGF.zeros(m.field, 0, n)
    return rref(MatrixGF(m.field, basis))[0]


# -- vector encodings -----------------------------------------------------------

def encode_vectors(vectors: np.ndarray, q: int) -> np.ndarray:
    """Pack each row ``v`` of an index array as ``sum(v[i] * q**i)``."""
    vectors = np.asarray(vectors, dtype=np.int64)
    k = vectors.shape[-1]
    return vectors @ (q ** np.arange(k, dtype=np.int64))


def decode_vectors(codes: np.ndarray, q: int, k: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    return (codes[..., None] // (q ** np.arange(k, dtype=np.int64))) % q


# -- subspaces ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """An r-dimensional subspace of GF(q)^k held by its unique RREF basis."""

    field: FiniteField
    ambient_dim: int
    dim: int
    basis: MatrixGF

    def __post_init__(self) -> None:
        if self.basis.shape != (self.dim, self.ambient_dim):
            raise ValueError("basis shape does not match (dim, ambient_dim)")
        red, rk, _ = rref(self.basis)
        if rk != self.dim or red != self.basis:
            raise ValueError("basis must be a full-rank RREF matrix")

    @classmethod
    def span(cls, field: FiniteField, k: int, vectors) -> SubspaceBasis:
        m = MatrixGF(field, np.asarray(vectors, dtype=np.int64).reshape(-1, k))
        red, rk, _ = rref(m)
        return cls(field, k, rk, MatrixGF(field, red.data[:rk]))

    @classmethod
    def full(cls, field: FiniteField, k: int) -> SubspaceBasis:
        return cls(field, k, k, MatrixGF.identity(field, k))

    @classmethod
    def zero(cls, field: FiniteField, k: int) -> SubspaceBasis:
        return cls(field, k, 0, MatrixGF.zeros(field, 0, k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def orthogonal(self) -> SubspaceBasis:
        """The complement ``{x : x . v = 0 for all v}`` under the dot product."""
        if self.dim == 0:
            return SubspaceBasis.full(self.field, self.ambient_dim)
        kb = kernel_basis(self.basis)
        return SubspaceBasis(self.field, self.ambient_dim, kb.rows, kb)

    def elements(self) -> np.ndarray:
        """All q^dim vectors of the subspace as a (q^dim, k) index array."""
        return span_elements(self.field, self.basis.data)

    def contains(self, vector: Sequence[int]) -> bool:
        v = np.asarray(vector, dtype=np.int64)
        if self.dim == 0:
            return not v.any()
        t = self.field.tables()
        add, mul, neg = t["add"], t["mul"], t["neg"]
        # subtract the pivot-coordinate combination; RREF makes it unique
        _, _, pivots = rref(self.basis)
        rest = v.copy()
        for i, pc in enumerate(pivots):
            c = rest[pc]
            if c:
                rest = add[rest, mul[neg[c], self.basis.data[i]]]
        return not rest.any()

    def intersection_dim(self, other: SubspaceBasis) -> int:
        stacked = MatrixGF(self.field, np.vstack([self.basis.data, other.basis.data]))
        return self.dim + other.dim - rank(stacked)


def span_elements(field: FiniteField, basis: np.ndarray) -> np.ndarray:
    t = field.tables()
    add, mul = t["add"], t["mul"]
    k = basis.shape[1]
    elems = np.zeros((1, k), dtype=np.int64)
    for row in basis:
        scaled = mul[np.arange(field.q)[:, None], row[None, :]]  # (q, k)
        elems = add[scaled[:, None, :], elems[None, :, :]].reshape(-1, k)
    return elems


@dataclass(frozen=True)
class SubspaceLayout:
    """Pivot-pattern tables addressing every r-subspace of GF(q)^k by index.

    Subspaces are ordered by pivot pattern (lexicographic column tuples), then by
    the free RREF entries read row-major as a base-q numeral whose first free
    entry is most significant.
    """

    q: int
    k: int
    r: int
    pivots: np.ndarray  # (P, r)
    free_row: np.ndarray  # (P, F)
    free_col: np.ndarray  # (P, F)
    nfree: np.ndarray  # (P,)
    offsets: np.ndarray  # (P + 1,)

    @property
    def count(self) -> int:
        return int(self.offsets[-1])

    def locate(self, index: int) -> tuple[int, int]:
        """(pattern number, counter within the pattern) for a global index."""
        if not 0 <= index < self.count:
            raise IndexError(f"subspace index {index} out of range [0, {self.count})")
        p = bisect.bisect_right(self.offsets.tolist(), index) - 1
        return p, index - int(self.offsets[p])


_LAYOUTS: dict[tuple[int, int, int], SubspaceLayout] = {}


def subspace_layout(q: int, k: int, r: int) -> SubspaceLayout:
    if not 0 <= r <= k:
        raise ValueError(f"subspace dimension {r} outside [0, {k}]")
    key = (q, k, r)
    if key in _LAYOUTS:
        return _LAYOUTS[key]
    patterns = list(itertools.combinations(range(k), r))
    fmax = r * (k - r)
    P = len(patterns)
    pivots = np.zeros((P, r), dtype=np.int64)
    free_row = np.zeros((P, max(fmax, 1)), dtype=np.int64)
    free_col = np.zeros((P, max(fmax, 1)), dtype=np.int64)
    nfree = np.zeros(P, dtype=np.int64)
    offsets = [0]
    for p, piv in enumerate(patterns):
        pivots[p] = piv
        pset = set(piv)
        t = 0
        for i, pc in enumerate(piv):
            for c in range(pc + 1, k):
                if c not in pset:
                    free_row[p, t] = i
                    free_col[p, t] = c
                    t += 1
        nfree[p] = t
        offsets.append(offsets[-1] + q**t)
    if offsets[-1] >= _MAX_LAYOUT_COUNT:
        raise ValueError("too many subspaces to address with 64-bit indices")
    layout = SubspaceLayout(
        q, k, r, pivots, free_row, free_col, nfree, np.array(offsets, dtype=np.int64)
    )
    for arr in (pivots, free_row, free_col, nfree, layout.offsets):
        arr.setflags(write=False)
    _LAYOUTS[key] = layout
    return layout


def _basis_from_counter(layout: SubspaceLayout, p: int, counter: int) -> np.ndarray:
    q, k, r = layout.q, layout.k, layout.r
    basis = np.zeros((r, k), dtype=np.int64)
    for i, pc in enumerate(layout.pivots[p]):
        basis[i, pc] = 1
    f = int(layout.nfree[p])
    for t in range(f - 1, -1, -1):
        counter, digit = divmod(counter, q)
        basis[layout.free_row[p, t], layout.free_col[p, t]] = digit
    return basis


def subspace_at(field: FiniteField, k: int, r: int, index: int) -> SubspaceBasis:
    layout = subspace_layout(field.q, k, r)
    p, c = layout.locate(index)
    return SubspaceBasis(field, k, r, MatrixGF(field, _basis_from_counter(layout, p, c)))


def enumerate_subspaces(
    field: FiniteField, k: int, r: int, start: int = 0, stop: int | None = None
) -> Iterator[SubspaceBasis]:
    """Yield every r-dimensional subspace of GF(q)^k once, in canonical order.

    ``start``/``stop`` select a half-open slice of the global index range so that
    disjoint slices can be processed independently.
    """
    layout = subspace_layout(field.q, k, r)
    stop = layout.count if stop is None else min(stop, layout.count)
    if start >= stop:
        return
    p, c = layout.locate(start)
    for _ in range(start, stop):
        while c >= field.q ** int(layout.nfree[p]):
            p, c = p + 1, 0
        yield _trusted_subspace(field, k, r, _basis_from_counter(layout, p, c))
        c += 1


def _trusted_subspace(field: FiniteField, k: int, r: int, basis: np.ndarray) -> SubspaceBasis:
    # layout bases are RREF by construction; skip the validating __post_init__
    sb = object.__new__(SubspaceBasis)
    object.__setattr__(sb, "field", field)
    object.__setattr__(sb, "ambient_dim", k)
    object.__setattr__(sb, "dim", r)
    object.__setattr__(sb, "basis", MatrixGF(field, basis))
    return sb


def projective_points(field: FiniteField, k: int) -> list[tuple[int, ...]]:
    """One representative per 1-dimensional subspace of GF(q)^k.

    Representatives have last nonzero coordinate 1. Points are grouped by the
    position of that coordinate (ascending); inside a group the earlier
    coordinates count in base q with coordinate 0 varying fastest.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    q = field.q
    points = []
    for last in range(k):
        for code in range(q**last):
            v = [0] * k
            c = code
            for i in range(last):
                c, v[i] = divmod(c, q)
            v[last] = 1
            points.append(tuple(v))
    return points


def membership_count(g: MatrixGF, v: SubspaceBasis, strategy: str = "auto") -> int:
    """Number of columns of ``g`` lying in the subspace ``v``.

    ``strategy`` is ``"eliminate"`` (reduce each column against the RREF basis),
    ``"hash"`` (materialise the q^dim subspace vectors and look columns up) or
    ``"auto"``, which hashes when the subspace has at most 4096 vectors and there
    are more columns than vectors.
    """
    if g.rows != v.ambient_dim:
        raise ValueError(f"generator has {g.rows} rows, subspace lives in dimension {v.ambient_dim}")
    if g.field != v.field:
        raise ValueError("mixed fields")
    q = g.field.q
    if strategy == "auto":
        size = q**v.dim
        strategy = "hash" if size <= 4096 and g.cols > size else "eliminate"
    if strategy == "hash":
        members = set(encode_vectors(v.elements(), q).tolist())
        return int(sum(1 for c in encode_vectors(g.data.T, q).tolist() if c in members))
    if strategy != "eliminate":
        raise ValueError(f"unknown strategy {strategy!r}")
    cols = g.data.T.copy()  # (n, k)
    if v.dim == 0:
        return int((~cols.any(axis=1)).sum())
    t = g.field.tables()
    add, mul, neg = t["add"], t["mul"], t["neg"]
    _, _, pivots = rref(v.basis)
    for i, pc in enumerate(pivots):
        coef = cols[:, pc]
        cols = add[cols, mul[neg[coef][:, None], v.basis.data[i][None, :]]]
    return int((~cols.any(axis=1)).sum())
