"""Four families of few-weight codes built from simplex columns.

=====  ==========================================================================
T33    simplex copies with the points of a flag U_1 < ... < U_s removed
T35    as T33, but U_1 is a single point that is kept (added back once)
T42    one simplex copy minus the points of U_2 and U_3, which meet in a point
T51    one simplex copy minus the m Vandermonde columns of a GRS code
=====  ==========================================================================

Each family has a closed-form description of its weight distribution, weight
hierarchy and subcode support weight distributions; :func:`closed_form`
evaluates it and :func:`verify` checks it against the exhaustive oracles of
:mod:`ghwcodes.codes`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field, replace
from math import comb
from typing import Iterable, Iterator

import numpy as np

from ._config import BudgetExceededError
from .codes import (
    NOT_DETERMINED,
    PROVEN_OPTIMAL,
    GriesmerReport,
    LinearCode,
    WeightTable,
    classic_griesmer_length,
    ghw,
    griesmer_from_hierarchy,
    nonzero_weight_count,
    sswd_bruteforce,
    weight_distribution,
)
from .field import FiniteField, field_for_order
from .linalg import MatrixGF, projective_points
from .qcombinat import chain_count, gaussian_binomial, intersection_count_M, theta

FAMILIES = ("T33", "T35", "T42", "T51")


@dataclass(frozen=True)
class ConstructionSpec:
    """Family name, field order, dimension and the family parameters.

    ``u`` holds the flag dimensions: (u_1, ..., u_s) for T33, (1, u_2, ..., u_s)
    for T35 and (1, u_2, u_3) for T42.
    """

    family: str
    q: int
    k: int
    t: int | None = None
    u: tuple[int, ...] = ()
    m: int | None = None

    def __post_init__(self) -> None:
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "u", tuple(int(x) for x in self.u))
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        field_for_order(self.q)  # rejects non prime powers
        k, u = self.k, self.u
        if k < 2:
            raise ValueError("k must be >= 2")
        increasing = all(a < b for a, b in zip(u, u[1:]))
        if fam == "T33":
            if not u or u[0] < 1 or u[-1] >= k or not increasing:
                raise ValueError(f"need 1 <= u_1 < ... < u_s < k, got u={u}, k={k}")
            if self.t is None or self.t < len(u):
                raise ValueError(f"need t >= s = {len(u)}, got t={self.t}")
        elif fam == "T35":
            if len(u) < 2 or u[0] != 1 or u[-1] >= k or not increasing:
                raise ValueError(f"need 1 = u_1 < u_2 < ... < u_s < k, got u={u}, k={k}")
            if self.t is None or not 2 <= len(u) <= self.t + 1:
                raise ValueError(f"need 2 <= s <= t + 1, got s={len(u)}, t={self.t}")
        elif fam == "T42":
            if len(u) != 3 or u[0] != 1 or not 1 < u[1] < u[2] < k:
                raise ValueError(f"need 1 < u2 < u3 < k, got u={u}, k={k}")
            if u[1] + u[2] > k + 1:
                raise ValueError(f"need u2 + u3 <= k + 1, got {u[1]} + {u[2]} > {k + 1}")
        else:
            if self.m is None or not 3 <= k <= self.m <= self.q:
                raise ValueError(f"need 3 <= k <= m <= q, got k={k}, m={self.m}, q={self.q}")

    @classmethod
    def t33(cls, q: int, k: int, t: int, u: Iterable[int]) -> ConstructionSpec:
        return cls("T33", q, k, t=t, u=tuple(u))

    @classmethod
    def t35(cls, q: int, k: int, t: int, u: Iterable[int]) -> ConstructionSpec:
        return cls("T35", q, k, t=t, u=tuple(u))

    @classmethod
    def t42(cls, q: int, k: int, u2: int, u3: int) -> ConstructionSpec:
        return cls("T42", q, k, u=(1, u2, u3))

    @classmethod
    def t51(cls, q: int, k: int, m: int) -> ConstructionSpec:
        return cls("T51", q, k, m=m)

    @property
    def s(self) -> int:
        return len(self.u)

    @property
    def field(self) -> FiniteField:
        return field_for_order(self.q)

    def label(self) -> str:
        if self.family in ("T33", "T35"):
            return f"{self.family}(q={self.q},k={self.k},t={self.t},u={','.join(map(str, self.u))})"
        if self.family == "T42":
            return f"T42(q={self.q},k={self.k},u2={self.u[1]},u3={self.u[2]})"
        return f"T51(q={self.q},k={self.k},m={self.m})"

    def to_json(self) -> dict:
        out: dict = {"family": self.family, "q": self.q, "k": self.k}
        if self.family in ("T33", "T35"):
            out["t"] = self.t
            out["u"] = list(self.u)
        elif self.family == "T42":
            out["u2"], out["u3"] = self.u[1], self.u[2]
        else:
            out["m"] = self.m
        return out

    @staticmethod
    def from_json(obj: dict) -> ConstructionSpec:
        fam = str(obj["family"]).upper()
        q, k = int(obj["q"]), int(obj["k"])
        if fam == "T42":
            return ConstructionSpec.t42(q, k, int(obj["u2"]), int(obj["u3"]))
        if fam == "T51":
            return ConstructionSpec.t51(q, k, int(obj["m"]))
        return ConstructionSpec(fam, q, k, t=int(obj["t"]), u=tuple(obj["u"]))


# -- generator matrices -----------------------------------------------------------

def simplex_matrix(q: int, k: int) -> MatrixGF:
    f = field_for_order(q)
    return MatrixGF(f, np.array(projective_points(f, k), dtype=np.int64).T)


def vandermonde_nodes(f: FiniteField, m: int) -> list[int]:
    """The first m field elements in enumeration order."""
    if m > f.q:
        raise ValueError(f"only {f.q} distinct nodes exist, asked for {m}")
    return list(range(m))


def grs_matrix(q: int, k: int, m: int) -> MatrixGF:
    """k x m matrix with columns (g^(k-1), ..., g, 1) at the first m field elements."""
    if not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got k={k}, m={m}")
    f = field_for_order(q)
    nodes = vandermonde_nodes(f, m)
    data = np.array([[f.power(g, k - 1 - i) for g in nodes] for i in range(k)], dtype=np.int64)
    return MatrixGF(f, data)


def _in_prefix(point: tuple[int, ...], u: int) -> bool:
    return not any(point[u:])


def _in_t42_u3(point: tuple[int, ...], k: int, u3: int) -> bool:
    # U_3 = <e_1> + <e_{k-u3+2}, ..., e_k>
    return not any(point[1:k - u3 + 1])


def _columns(points: list[tuple[int, ...]], keep) -> list[tuple[int, ...]]:
    return [p for p in points if keep(p)]


def generator_columns(spec: ConstructionSpec) -> list[tuple[int, ...]]:
    f = spec.field
    k, u = spec.k, spec.u
    pts = projective_points(f, k)
    if spec.family == "T33":
        cols = []
        for ui in u:
            cols += _columns(pts, lambda p, ui=ui: not _in_prefix(p, ui))
        return cols + pts * (spec.t - spec.s)
    if spec.family == "T35":
        cols = _columns(pts, lambda p: _in_prefix(p, 1))
        for ui in u[1:]:
            cols += _columns(pts, lambda p, ui=ui: not _in_prefix(p, ui))
        return cols + pts * (spec.t - spec.s + 1)
    if spec.family == "T42":
        u2, u3 = u[1], u[2]
        return _columns(pts, lambda p: not _in_prefix(p, u2) and not _in_t42_u3(p, k, u3))
    grs = grs_matrix(spec.q, k, spec.m).columns()
    present = set(pts)
    for a in grs:
        # last coordinate of every Vandermonde column is 1, so it is a canonical point
        assert a in present, "Vandermonde column missing from the simplex columns"
    removed = set(grs)
    return [p for p in pts if p not in removed]


def construct(spec: ConstructionSpec) -> LinearCode:
    cols = generator_columns(spec)
    gen = MatrixGF(spec.field, np.array(cols, dtype=np.int64).T)
    code = LinearCode(gen)
    expected = closed_form_length(spec)
    assert code.n == expected, f"constructed length {code.n} != {expected}"
    return code


# -- closed forms -------------------------------------------------------------------

def _simplex_dr(q: int, k: int, r: int) -> int:
    return (q**k - q**(k - r)) // (q - 1)


def closed_form_length(spec: ConstructionSpec) -> int:
    q, k, u = spec.q, spec.k, spec.u
    if spec.family == "T33":
        return spec.t * theta(k, q) - sum(theta(x, q) for x in u)
    if spec.family == "T35":
        return spec.t * theta(k, q) - sum(theta(x, q) for x in u[1:]) + 1
    if spec.family == "T42":
        return theta(k, q) - theta(u[1], q) - theta(u[2], q) + 1
    return theta(k, q) - spec.m


def closed_form_distance(spec: ConstructionSpec) -> int:
    q, k, u = spec.q, spec.k, spec.u
    if spec.family == "T33":
        return spec.t * q**(k - 1) - sum(q**(x - 1) for x in u)
    if spec.family == "T35":
        return spec.t * q**(k - 1) - sum(q**(x - 1) for x in u[1:])
    if spec.family == "T42":
        return q**(k - 1) - q**(u[1] - 1) - q**(u[2] - 1)
    return q**(k - 1) - spec.m


def closed_form_weight_distribution(spec: ConstructionSpec) -> WeightTable:
    q, k, u = spec.q, spec.k, spec.u
    n, d = closed_form_length(spec), closed_form_distance(spec)
    counts: Counter[int] = Counter({0: 1})
    if spec.family == "T33":
        counts[d] += q**k - q**(k - u[0])
        shift = 0
        for j in range(spec.s):
            shift += q**(u[j] - 1)
            nxt = q**(k - u[j + 1]) if j + 1 < spec.s else 1
            counts[d + shift] += q**(k - u[j]) - nxt
    elif spec.family == "T35":
        counts[d] += q**(k - 1) - q**(k - u[1])
        counts[d + 1] += q**k - q**(k - 1)
        shift = 0
        for j in range(1, spec.s):
            shift += q**(u[j] - 1)
            nxt = q**(k - u[j + 1]) if j + 1 < spec.s else 1
            counts[d + shift] += q**(k - u[j]) - nxt
    elif spec.family == "T42":
        u2, u3 = u[1], u[2]
        meet = q**(k - u2 - u3 + 1)
        counts[d] += q**(k - 1) - q**(k - u2) - q**(k - u3) + meet
        counts[d + 1] += q**k - q**(k - 1)
        counts[d + q**(u2 - 1)] += q**(k - u2) - meet
        counts[d + q**(u3 - 1)] += q**(k - u3) - meet
        if u2 + u3 < k + 1:
            counts[d + q**(u2 - 1) + q**(u3 - 1)] += meet - 1
    else:
        m = spec.m
        top = q**(k - 1)
        for j in range(top - m, top + k - m):
            s = sum(
                (-1)**t * comb(top - j, t) * (q**(top + k - j - m - t) - 1)
                for t in range(top + k - j - m)
            )
            counts[j] += comb(m, top - j) * s
    return WeightTable("full_distribution", None, n, dict(counts))


def closed_form_ghw(spec: ConstructionSpec, r: int) -> int:
    q, k, u = spec.q, spec.k, spec.u
    if not 1 <= r <= k:
        raise ValueError(f"r must lie in [1, {k}]")
    base = _simplex_dr(q, k, r)
    if spec.family == "T33":
        jr = max([0] + [i + 1 for i, x in enumerate(u) if x <= r])
        return (
            spec.t * base
            - sum(theta(x, q) for x in u)
            + sum(theta(x - r, q) for x in u[jr:])
        )
    if spec.family == "T35":
        rest = u[1:]
        if r < u[1]:
            return spec.t * base - sum((q**x - q**(x - r)) // (q - 1) for x in rest)
        jr = max(i for i, x in enumerate(u) if i >= 1 and x <= r)
        return (
            spec.t * base
            - sum(theta(x, q) for x in rest)
            + sum(theta(x - r, q) for x in u[jr + 1:])
            + 1
        )
    if spec.family == "T42":
        u2, u3 = u[1], u[2]
        if r < u2:
            return (q**k - q**(k - r) - (q**u2 - q**(u2 - r)) - (q**u3 - q**(u3 - r))) // (q - 1)
        if r < u3:
            return (q**k - q**(k - r) - (q**u2 - 1) - (q**u3 - q**(u3 - r))) // (q - 1) + 1
        return (q**k - q**(k - r) - (q**u2 - 1) - (q**u3 - 1)) // (q - 1) + 1
    return base - spec.m


def z_box(spec: ConstructionSpec, r: int) -> Iterator[tuple[int, ...]]:
    """Integer intersection profiles (v_1, ..., v_s) allowed for a (k-r)-space.

    The box constraints are those of the summation index sets; the profile
    condition on m is applied separately by :func:`z_set`.
    """
    k, u = spec.k, spec.u
    if spec.family not in ("T33", "T35", "T42"):
        raise ValueError("profile sets exist for T33, T35 and T42 only")
    ranges = [range(max(0, x - r), min(x, k - r) + 1) for x in u]
    for v in itertools.product(*ranges):
        if spec.family == "T42":
            v1, v2, v3 = v
            if 0 <= v2 - v1 <= u[1] - 1 and 0 <= v3 - v1 <= u[2] - 1 and v2 + v3 <= k - r + v1:
                yield v
            continue
        prev_u = prev_v = 0
        ok = True
        for x, y in zip(u, v):
            if not 0 <= y - prev_v <= x - prev_u:
                ok = False
                break
            prev_u, prev_v = x, y
        if ok:
            yield v


def profile_value(spec: ConstructionSpec, v: tuple[int, ...]) -> int:
    """The m-value a profile contributes to: a signed sum of theta(v_i)."""
    q = spec.q
    if spec.family == "T33":
        return sum(theta(x, q) for x in v)
    return sum(theta(x, q) for x in v[1:]) - theta(v[0], q)


def profile_offset(spec: ConstructionSpec, r: int) -> int:
    """j - m_{r,j}: the support weight of a subcode with profile value zero."""
    q, k, u = spec.q, spec.k, spec.u
    if spec.family == "T33":
        return spec.t * _simplex_dr(q, k, r) - sum(theta(x, q) for x in u)
    if spec.family == "T35":
        return spec.t * _simplex_dr(q, k, r) - sum(theta(x, q) for x in u[1:]) + 1
    if spec.family == "T42":
        return _simplex_dr(q, k, r) - theta(u[1], q) - theta(u[2], q) + 1
    raise ValueError("profile sets exist for T33, T35 and T42 only")


def z_set(spec: ConstructionSpec, r: int, j: int) -> list[tuple[int, ...]]:
    m = j - profile_offset(spec, r)
    return [v for v in z_box(spec, r) if profile_value(spec, v) == m]


def profile_count(spec: ConstructionSpec, r: int, v: tuple[int, ...]) -> int:
    """Number of (k-r)-subspaces meeting the family's flag in profile v."""
    q, k, u = spec.q, spec.k, spec.u
    if spec.family == "T42":
        return intersection_count_M(u[0], u[1], u[2], k, v[0], v[1], v[2], k - r, q)
    return chain_count(u + (k,), v + (k - r,), q)


def closed_form_sswd_profiles(spec: ConstructionSpec, r: int) -> WeightTable:
    """r-SSWD as a sum of subspace counts over intersection profiles."""
    n = closed_form_length(spec)
    offset = profile_offset(spec, r)
    counts: Counter[int] = Counter()
    for v in z_box(spec, r):
        c = profile_count(spec, r, v)
        if c:
            counts[offset + profile_value(spec, v)] += c
    return WeightTable("sswd", r, n, dict(counts))


def grs_code(spec: ConstructionSpec) -> LinearCode:
    return LinearCode(grs_matrix(spec.q, spec.k, spec.m))


def _reflect(table: WeightTable, r: int, pivot: int, n: int) -> WeightTable:
    counts: Counter[int] = Counter()
    for w, c in table.items():
        j = pivot - w
        if not 0 <= j <= n:
            # this reading puts subcodes at impossible weights
            return WeightTable("sswd", r, n, {})
        counts[j] += c
    return WeightTable("sswd", r, n, dict(counts))


def t51_sswd(spec: ConstructionSpec, r: int, reading: str = "proof",
             budget: int | None = None) -> WeightTable:
    """r-SSWD of the GRS-complement code from the GRS code's own r-SSWD.

    ``reading="proof"`` reflects about (q^k - q^(k-r))/(q-1), the support
    weight of every r-subcode of the simplex code.  ``reading="statement"``
    reflects about (q^k - q^r)/(q-1) instead; it is kept so that the two can
    be compared against the oracle.
    """
    q, k = spec.q, spec.k
    n = closed_form_length(spec)
    small = sswd_bruteforce(grs_code(spec), r, budget=budget)
    if reading == "proof":
        pivot = _simplex_dr(q, k, r)
    elif reading == "statement":
        pivot = (q**k - q**r) // (q - 1)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return _reflect(small, r, pivot, n)


def t51_codim_checks(spec: ConstructionSpec) -> dict[int, WeightTable]:
    """Independent closed forms of the (k-1)- and (k-2)-SSWD for T51."""
    q, k, m = spec.q, spec.k, spec.m
    n = closed_form_length(spec)
    out = {k - 1: WeightTable("sswd", k - 1, n, {n: m, n - 1: theta(k, q) - m})}
    w0 = _simplex_dr(q, k, k - 2) - m
    out[k - 2] = WeightTable("sswd", k - 2, n, {
        w0: gaussian_binomial(k, 2, q) - m * theta(k - 1, q) + comb(m, 2),
        w0 + 1: m * (theta(k - 1, q) - m + 1),
        w0 + 2: comb(m, 2),
    })
    return out


def closed_form_sswd(spec: ConstructionSpec, r: int, budget: int | None = None) -> WeightTable:
    if spec.family == "T51":
        return t51_sswd(spec, r, "proof", budget)
    return closed_form_sswd_profiles(spec, r)


def fewness_bounds(spec: ConstructionSpec, r: int) -> int:
    """Upper bound on the number of distinct nonzero weights in the r-SSWD."""
    k, u = spec.k, spec.u
    if not 1 <= r <= k:
        raise ValueError(f"r must lie in [1, {k}]")
    if spec.family == "T33" and spec.s == 1:
        return min(u[0] + 1, r + 1, k - r + 1, k - u[0] + 1)
    if spec.family == "T35" and spec.s == 2:
        return min(2 * u[1], 2 * (r + 1), 2 * (k - r + 1), 2 * (k - u[1] + 1))
    if spec.family == "T42":
        return 2 * min(u[1] * u[2], (r + 1) ** 2, (k - r + 1) ** 2)
    raise ValueError(f"no weight-count bound for {spec.label()}")


def has_fewness_bound(spec: ConstructionSpec) -> bool:
    return (
        (spec.family == "T33" and spec.s == 1)
        or (spec.family == "T35" and spec.s == 2)
        or spec.family == "T42"
    )


@dataclass(frozen=True)
class ClosedFormBundle:
    spec: ConstructionSpec
    n: int
    k: int
    q: int
    d: int
    weight_distribution: WeightTable
    ghw: dict[int, int]
    sswd: dict[int, WeightTable]
    griesmer: GriesmerReport
    claims: dict[str, object]
    cross_checks: dict[int, WeightTable] = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "d": self.d,
            "weight_distribution": self.weight_distribution.to_json(),
            "ghw": {str(r): d for r, d in sorted(self.ghw.items())},
            "sswd": [self.sswd[r].to_json() for r in sorted(self.sswd)],
            "claims": dict(self.claims),
        }


def _claims(spec: ConstructionSpec, n: int, d: int) -> dict[str, object]:
    q = spec.q
    if spec.family == "T33":
        index, almost = 1, False
    elif spec.family in ("T35", "T42"):
        index, almost = spec.u[1], True
    else:
        index, almost = (1, False) if spec.m < spec.q else (2, True)
    optimal = classic_griesmer_length(q, spec.k, d + 1) > n
    if spec.family in ("T35", "T42"):
        # the optimality argument for these two families also needs q | d
        optimal = optimal and d % q == 0
    return {
        "griesmer_index_claim": index,
        "almost_griesmer": almost,
        "distance_optimal": PROVEN_OPTIMAL if optimal else NOT_DETERMINED,
    }


def closed_form(
    spec: ConstructionSpec, rs: Iterable[int] | None = None, budget: int | None = None
) -> ClosedFormBundle:
    k = spec.k
    rs = list(range(1, k + 1)) if rs is None else sorted(set(rs))
    n, d = closed_form_length(spec), closed_form_distance(spec)
    hierarchy = {r: closed_form_ghw(spec, r) for r in range(1, k + 1)}
    sswd = {r: closed_form_sswd(spec, r, budget) for r in rs}
    return ClosedFormBundle(
        spec=spec,
        n=n,
        k=k,
        q=spec.q,
        d=d,
        weight_distribution=closed_form_weight_distribution(spec),
        ghw=hierarchy,
        sswd=sswd,
        griesmer=griesmer_from_hierarchy(spec.q, n, k, [hierarchy[r] for r in range(1, k + 1)]),
        claims=_claims(spec, n, d),
        cross_checks=t51_codim_checks(spec) if spec.family == "T51" else {},
    )


def corrupt_bundle(bundle: ClosedFormBundle, r: int, weight: int | None = None,
                   delta: int = 1) -> ClosedFormBundle:
    """Copy of ``bundle`` with one r-SSWD multiplicity shifted by ``delta``."""
    table = bundle.sswd[r]
    w = table.min_weight() if weight is None else weight
    counts = dict(table.counts)
    counts[w] = counts.get(w, 0) + delta
    sswd = dict(bundle.sswd)
    sswd[r] = WeightTable("sswd", r, table.n, counts)
    return replace(bundle, sswd=sswd)


# -- verification -------------------------------------------------------------------

@dataclass
class VerificationReport:
    spec: ConstructionSpec
    rs: list[int]
    mismatches: list[dict] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)
    budget_errors: list[dict] = dc_field(default_factory=list)
    checks: int = 0
    oracle_sswd: dict[int, WeightTable] = dc_field(default_factory=dict)
    oracle_ghw: dict[int, int] = dc_field(default_factory=dict)

    @property
    def status(self) -> str:
        return "mismatch" if self.mismatches else "ok"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def _compare(self, check: str, expected, actual, **where) -> None:
        self.checks += 1
        if expected != actual:
            self.mismatches.append({"check": check, **where,
                                    "closed_form": expected, "oracle": actual})

    def _compare_tables(self, check: str, expected: WeightTable, actual: WeightTable, **where) -> None:
        for w in sorted(set(expected.counts) | set(actual.counts)):
            self._compare(check, expected[w], actual[w], weight=w, **where)

    def to_json(self) -> dict:
        def plain(x):
            return str(x) if isinstance(x, int) and not isinstance(x, bool) and abs(x) >= 2**53 else x

        return {
            "spec": self.spec.to_json(),
            "r": self.rs,
            "status": self.status,
            "checks": self.checks,
            "mismatches": [{k: plain(v) for k, v in m.items()} for m in self.mismatches],
            "budget_errors": self.budget_errors,
            "notes": self.notes,
        }


def verify(
    spec: ConstructionSpec,
    rs: Iterable[int] | None = None,
    budget: int | None = None,
    parallel: int = 1,
    bundle: ClosedFormBundle | None = None,
    code: LinearCode | None = None,
) -> VerificationReport:
    """Compare every closed-form quantity with the exhaustive oracle.

    A budget failure for one r is recorded and the other checks still run.
    """
    k = spec.k
    rs = list(range(1, k + 1)) if rs is None else sorted(set(rs))
    bad = [r for r in rs if not 1 <= r <= k]
    if bad:
        raise ValueError(f"r values {bad} outside [1, {k}]")
    report = VerificationReport(spec, rs)
    code = construct(spec) if code is None else code
    if bundle is None:
        bundle = closed_form(spec, rs=[], budget=budget)
        sswd = {}
        for r in rs:
            try:
                sswd[r] = closed_form_sswd(spec, r, budget)
            except BudgetExceededError as exc:
                report.budget_errors.append({"r": r, "what": "closed_form", "error": str(exc)})
        bundle = replace(bundle, sswd=sswd)

    report._compare("n", bundle.n, code.n)
    report._compare("k", bundle.k, code.k)
    try:
        wd = weight_distribution(code, budget=budget)
        report._compare_tables("weight_distribution", bundle.weight_distribution, wd)
        report._compare("d", bundle.d, wd.min_weight())
    except BudgetExceededError as exc:
        report.budget_errors.append({"r": None, "what": "weight_distribution", "error": str(exc)})

    hierarchy_complete = True
    for r in range(1, k + 1):
        try:
            report.oracle_ghw[r] = ghw(code, r, budget=budget, parallel=parallel)
        except BudgetExceededError as exc:
            hierarchy_complete = False
            report.budget_errors.append({"r": r, "what": "ghw", "error": str(exc)})
            continue
        report._compare("d_r", bundle.ghw[r], report.oracle_ghw[r], r=r)

    if hierarchy_complete:
        oracle_g = griesmer_from_hierarchy(code.q, code.n, k, [report.oracle_ghw[r] for r in range(1, k + 1)])
        for r in range(1, k + 1):
            report._compare("defect", bundle.griesmer.defect(r), oracle_g.defect(r), r=r)
        report._compare("griesmer_index", bundle.claims["griesmer_index_claim"], oracle_g.r_griesmer_index)
        report._compare("almost_griesmer", bundle.claims["almost_griesmer"], oracle_g.almost_griesmer)
        report._compare("distance_optimal", bundle.claims["distance_optimal"], oracle_g.distance_optimal)

    for r in rs:
        if r not in bundle.sswd:
            continue
        try:
            table = sswd_bruteforce(code, r, budget=budget, parallel=parallel)
        except BudgetExceededError as exc:
            report.budget_errors.append({"r": r, "what": "sswd", "error": str(exc)})
            continue
        report.oracle_sswd[r] = table
        report._compare_tables("sswd", bundle.sswd[r], table, r=r)
        if r in report.oracle_ghw:
            report._compare("sswd_min_weight", report.oracle_ghw[r], table.min_weight(), r=r)
        if has_fewness_bound(spec):
            bound = fewness_bounds(spec, r)
            report.checks += 1
            if nonzero_weight_count(table) > bound:
                report.mismatches.append({"check": "weight_count_bound", "r": r,
                                          "closed_form": bound, "oracle": nonzero_weight_count(table)})
        if r in bundle.cross_checks:
            report._compare_tables("sswd_codim_formula", bundle.cross_checks[r], table, r=r)
        if spec.family == "T51":
            verdict = {
                reading: "matches" if t51_sswd(spec, r, reading, budget) == table else "does not match"
                for reading in ("proof", "statement")
            }
            report.notes.append(
                f"r={r}: reflection about (q^k-q^(k-r))/(q-1) {verdict['proof']} the oracle; "
                f"reflection about (q^k-q^r)/(q-1) {verdict['statement']}"
            )
    return report


__all__ = [
    "FAMILIES",
    "ConstructionSpec",
    "ClosedFormBundle",
    "VerificationReport",
    "simplex_matrix",
    "grs_matrix",
    "construct",
    "generator_columns",
    "closed_form",
    "closed_form_length",
    "closed_form_distance",
    "closed_form_weight_distribution",
    "closed_form_ghw",
    "closed_form_sswd",
    "closed_form_sswd_profiles",
    "t51_sswd",
    "t51_codim_checks",
    "z_box",
    "z_set",
    "profile_value",
    "profile_offset",
    "profile_count",
    "fewness_bounds",
    "has_fewness_bound",
    "corrupt_bundle",
    "verify",
    "iter_specs",
]


def iter_specs(qs: Iterable[int] = (2, 3, 4), k_max: int = 6, t_max: int = 2,
               s_max: int = 3) -> Iterator[ConstructionSpec]:
    """Every valid parameter set with q in ``qs``, k <= k_max and t <= t_max."""
    for q in qs:
        for k in range(2, k_max + 1):
            for s in range(1, min(s_max, k - 1) + 1):
                for u in itertools.combinations(range(1, k), s):
                    for t in range(s, t_max + 1):
                        yield ConstructionSpec.t33(q, k, t, u)
            for s in range(2, min(s_max, k - 1) + 1):
                for rest in itertools.combinations(range(2, k), s - 1):
                    for t in range(max(1, s - 1), t_max + 1):
                        yield ConstructionSpec.t35(q, k, t, (1,) + rest)
            for u2 in range(2, k):
                for u3 in range(u2 + 1, k):
                    if u2 + u3 <= k + 1:
                        yield ConstructionSpec.t42(q, k, u2, u3)
            for m in range(max(3, k), q + 1):
                if k >= 3:
                    yield ConstructionSpec.t51(q, k, m)
