"""Linear codes and the exhaustive oracles over them.

Every quantity here is computed by enumeration: codewords for the weight
distribution, r-dimensional message subspaces for support weights.  Two
independent routes exist for the subspace statistics:

* support route: OR the supports of the r basis codewords of each V in SUB^r;
* column route: count generator columns inside each W in SUB^(k-r), since the
  subcode from V has support weight n - m_G(V^perp).

Large enumerations are split into disjoint index chunks and merged by
addition, so the result does not depend on the number of workers.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._config import check_budget
from .field import FiniteField
from .linalg import (
    MatrixGF,
    SubspaceBasis,
    encode_vectors,
    membership_count,
    rank,
    subspace_layout,
)
from .qcombinat import gaussian_binomial

PROVEN_OPTIMAL = "proven_optimal"
NOT_DETERMINED = "not_determined"


class LinearCode:
    """A linear [n, k]_q code given by a full-rank k x n generator matrix."""

    def __init__(self, gen: MatrixGF) -> None:
        if gen.rows < 1 or gen.cols < 1:
            raise ValueError("generator must have at least one row and one column")
        if rank(gen) != gen.rows:
            raise ValueError(f"generator has rank {rank(gen)} < {gen.rows} rows")
        self.gen = gen
        self.field: FiniteField = gen.field
        self.n = gen.cols
        self.k = gen.rows
        self.q = gen.field.q
        self.full_support = bool(gen.data.any(axis=0).all())

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n, self.k, self.q

    def _tables(self):
        t = self.field.tables()
        return t["add"], t["mul"]

    @cached_property
    def codewords(self) -> np.ndarray:
        """All q^k codewords, row ``enc(y)`` holding ``yG``."""
        add, mul = self._tables()
        return _kernels.codeword_table(self.gen.data, add, mul, self.q)

    @cached_property
    def support_masks(self) -> np.ndarray:
        return _kernels.support_masks(self.codewords)

    @cached_property
    def column_counts(self) -> np.ndarray:
        """Multiplicity of every vector of GF(q)^k among the generator columns."""
        codes = encode_vectors(self.gen.data.T, self.q)
        return np.bincount(codes, minlength=self.q**self.k).astype(np.int64)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "k": self.k,
            "generator": self.gen.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> LinearCode:
        code = LinearCode(MatrixGF.from_json(obj["generator"]))
        if (code.n, code.k) != (obj.get("n", code.n), obj.get("k", code.k)):
            raise ValueError("n/k do not match the generator shape")
        return code


def code_from_generator(m: MatrixGF) -> LinearCode:
    return LinearCode(m)


@dataclass(frozen=True)
class WeightTable:
    """Exact weight -> multiplicity map; zero multiplicities are not stored.

    ``role`` is ``"full_distribution"`` (every codeword, weight 0 included) or
    ``"sswd"`` (r-dimensional subcodes by support weight).
    """

    role: str
    r: int | None
    n: int
    counts: dict[int, int] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.role not in ("full_distribution", "sswd"):
            raise ValueError(f"unknown role {self.role!r}")
        if self.role == "sswd" and (self.r is None or self.r < 0):
            raise ValueError("sswd tables need r >= 0")
        clean = {}
        for w, m in sorted(self.counts.items()):
            w, m = int(w), int(m)
            if m < 0:
                raise ValueError("negative multiplicity")
            if not 0 <= w <= self.n:
                raise ValueError(f"weight {w} outside [0, {self.n}]")
            if m:
                clean[w] = m
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_histogram(cls, role: str, r: int | None, hist: Sequence[int]) -> WeightTable:
        return cls(role, r, len(hist) - 1, {w: int(m) for w, m in enumerate(hist) if m})

    def total(self) -> int:
        return sum(self.counts.values())

    def weights(self) -> list[int]:
        return list(self.counts)

    def min_weight(self, exclude_zero: bool = True) -> int:
        ws = [w for w in self.counts if w or not exclude_zero]
        if not ws:
            raise ValueError("empty table")
        return min(ws)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def __len__(self) -> int:
        return len(self.counts)

    def items(self):
        return self.counts.items()

    def dense(self) -> list[int]:
        return [self.counts.get(w, 0) for w in range(self.n + 1)]

    def to_json(self) -> dict:
        out = {"role": self.role}
        if self.role == "sswd":
            out["r"] = self.r
        out["n"] = self.n
        out["entries"] = [[w, str(m)] for w, m in self.counts.items()]
        return out

    @staticmethod
    def from_json(obj: dict) -> WeightTable:
        entries = {int(w): int(m) for w, m in obj["entries"]}
        n = obj.get("n", max(entries, default=0))
        return WeightTable(obj["role"], obj.get("r"), n, entries)


# -- enumeration drivers --------------------------------------------------------

def _chunks(count: int, parallel: int) -> list[tuple[int, int]]:
    # a few chunks per worker evens out the uneven pivot patterns
    parts = 1 if parallel <= 1 else min(count, 4 * parallel)
    step = max(1, -(-count // max(1, parts)))
    return [(lo, min(count, lo + step)) for lo in range(0, count, step)] or [(0, 0)]


def _run_chunks(fn, count: int, parallel: int):
    """Apply ``fn(lo, hi)`` over a partition of ``[0, count)``; results in index order."""
    pieces = _chunks(count, parallel)
    if parallel <= 1 or len(pieces) == 1:
        return [fn(lo, hi) for lo, hi in pieces]
    with ThreadPoolExecutor(max_workers=parallel) as pool:
        return list(pool.map(lambda lh: fn(*lh), pieces))


def _check_dims(c: LinearCode, r: int) -> None:
    if not 1 <= r <= c.k:
        raise ValueError(f"r must lie in [1, {c.k}], got {r}")


def _subspace_hist_support(c: LinearCode, r: int, parallel: int) -> np.ndarray:
    layout = subspace_layout(c.q, c.k, r)
    masks = c.support_masks
    parts = _run_chunks(
        lambda lo, hi: _kernels.support_hist(masks, layout, lo, hi, c.n), layout.count, parallel
    )
    return np.sum(parts, axis=0)


def _column_sums(c: LinearCode, dim: int, parallel: int) -> np.ndarray:
    """m_G(W) for every W in SUB^dim, in canonical order."""
    layout = subspace_layout(c.q, c.k, dim)
    add, mul = c._tables()
    weights = c.column_counts[None, :]
    parts = _run_chunks(
        lambda lo, hi: _kernels.span_sums(weights, add, mul, layout, lo, hi)[:, 0],
        layout.count,
        parallel,
    )
    return np.concatenate(parts)


# -- public oracles -------------------------------------------------------------

def subcode_support_weight(c: LinearCode, v: SubspaceBasis) -> int:
    """Support size of the subcode {yG : y in v}, via n - m_G(v^perp)."""
    if v.ambient_dim != c.k:
        raise ValueError(f"subspace lives in dimension {v.ambient_dim}, code has k = {c.k}")
    if v.field != c.field:
        raise ValueError("mixed fields")
    return c.n - membership_count(c.gen, v.orthogonal())


def weight_distribution(
    c: LinearCode, method: str = "codewords", budget: int | None = None, parallel: int = 1
) -> WeightTable:
    """Hamming weight distribution of all q^k codewords.

    ``method="sswd"`` derives it from the 1-dimensional subcodes instead, each of
    which contributes q - 1 codewords of its weight.
    """
    if method == "codewords":
        check_budget(c.q**c.k, budget, "codewords")
        w = np.count_nonzero(c.codewords, axis=1)
        return WeightTable.from_histogram("full_distribution", None, np.bincount(w, minlength=c.n + 1))
    if method == "sswd":
        one = sswd_bruteforce(c, 1, budget=budget, parallel=parallel)
        counts = {w: (c.q - 1) * m for w, m in one.items()}
        counts[0] = 1
        return WeightTable("full_distribution", None, c.n, counts)
    raise ValueError(f"unknown method {method!r}")


def sswd_bruteforce(
    c: LinearCode, r: int, budget: int | None = None, parallel: int = 1
) -> WeightTable:
    """r-SSWD by visiting every r-dimensional subcode and measuring its support."""
    _check_dims(c, r)
    check_budget(gaussian_binomial(c.k, r, c.q), budget, "subspaces")
    check_budget(c.q**c.k, budget, "codewords")
    return WeightTable.from_histogram("sswd", r, _subspace_hist_support(c, r, parallel))


def sswd_dual(c: LinearCode, r: int, budget: int | None = None, parallel: int = 1) -> WeightTable:
    """r-SSWD through the column route over SUB^(k-r)."""
    _check_dims(c, r)
    check_budget(gaussian_binomial(c.k, r, c.q), budget, "subspaces")
    check_budget(c.q**c.k, budget, "vectors")
    m = _column_sums(c, c.k - r, parallel)
    return WeightTable.from_histogram("sswd", r, np.bincount(c.n - m, minlength=c.n + 1))


def ghw(c: LinearCode, r: int, budget: int | None = None, parallel: int = 1) -> int:
    """d_r(C) = n - max{m_G(W) : W in SUB^(k-r)}."""
    _check_dims(c, r)
    check_budget(gaussian_binomial(c.k, c.k - r, c.q), budget, "subspaces")
    check_budget(c.q**c.k, budget, "vectors")
    return c.n - int(_column_sums(c, c.k - r, parallel).max())


def weight_hierarchy(c: LinearCode, budget: int | None = None, parallel: int = 1) -> list[int]:
    return [ghw(c, r, budget, parallel) for r in range(1, c.k + 1)]


# -- Griesmer bound ---------------------------------------------------------------

def griesmer_sum(q: int, k: int, r: int, d_r: int) -> int:
    """d_r + sum_{i=1}^{k-r} ceil((q-1) d_r / (q^i (q^r - 1)))."""
    num = (q - 1) * d_r
    return d_r + sum(-(-num // (q**i * (q**r - 1))) for i in range(1, k - r + 1))


def griesmer_defect(q: int, n: int, k: int, r: int, d_r: int) -> int:
    return n - griesmer_sum(q, k, r, d_r)


def classic_griesmer_length(q: int, k: int, d: int) -> int:
    """Smallest length the Griesmer bound allows for an [n, k, d]_q code."""
    return sum(-(-d // q**i) for i in range(k))


@dataclass(frozen=True)
class GriesmerReport:
    q: int
    n: int
    k: int
    hierarchy: tuple[int, ...]
    griesmer_sums: tuple[int, ...]
    defects: tuple[int, ...]
    r_griesmer_index: int | None
    distance_optimal: str
    full_support: bool = True

    def defect(self, r: int) -> int:
        return self.defects[r - 1]

    @property
    def griesmer(self) -> bool:
        return self.defects[0] == 0

    @property
    def almost_griesmer(self) -> bool:
        return self.defects[0] == 1

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "rows": [
                {"r": r, "d_r": d, "griesmer_sum": g, "defect": dl}
                for r, (d, g, dl) in enumerate(
                    zip(self.hierarchy, self.griesmer_sums, self.defects), start=1
                )
            ],
            "r_griesmer_index": self.r_griesmer_index,
            "distance_optimal": self.distance_optimal,
            "full_support": self.full_support,
        }


def griesmer_from_hierarchy(
    q: int, n: int, k: int, hierarchy: Sequence[int], full_support: bool = True
) -> GriesmerReport:
    """Defects and optimality certificate from a known weight hierarchy."""
    hierarchy = tuple(int(d) for d in hierarchy)
    if len(hierarchy) != k:
        raise ValueError(f"need {k} generalized weights, got {len(hierarchy)}")
    sums = tuple(griesmer_sum(q, k, r, d) for r, d in enumerate(hierarchy, start=1))
    defects = tuple(n - s for s in sums)
    index = next((r for r, dl in enumerate(defects, start=1) if dl == 0), None)
    optimal = PROVEN_OPTIMAL if classic_griesmer_length(q, k, hierarchy[0] + 1) > n else NOT_DETERMINED
    return GriesmerReport(q, n, k, hierarchy, sums, defects, index, optimal, full_support)


def griesmer_report(
    c: LinearCode, budget: int | None = None, parallel: int = 1
) -> GriesmerReport:
    if not c.full_support:
        warnings.warn("code has a zero coordinate; defects assume full support", stacklevel=2)
    return griesmer_from_hierarchy(
        c.q, c.n, c.k, weight_hierarchy(c, budget, parallel), c.full_support
    )


def sswd_all(
    c: LinearCode, rs: Iterable[int] | None = None, budget: int | None = None, parallel: int = 1
) -> dict[int, WeightTable]:
    rs = range(1, c.k + 1) if rs is None else rs
    return {r: sswd_bruteforce(c, r, budget, parallel) for r in sorted(set(rs))}


def nonzero_weight_count(t: WeightTable) -> int:
    return sum(1 for w in t.counts if w)


__all__ = [
    "LinearCode",
    "WeightTable",
    "GriesmerReport",
    "PROVEN_OPTIMAL",
    "NOT_DETERMINED",
    "code_from_generator",
    "subcode_support_weight",
    "weight_distribution",
    "sswd_bruteforce",
    "sswd_dual",
    "sswd_all",
    "ghw",
    "weight_hierarchy",
    "griesmer_sum",
    "griesmer_defect",
    "classic_griesmer_length",
    "griesmer_from_hierarchy",
    "griesmer_report",
    "nonzero_weight_count",
]
