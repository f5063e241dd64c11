"""Exact q-analogue counting: Gaussian binomials and intersection-profile counts.

All counts are Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^k; zero when r < 0 or r > k."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if r < 0 or k < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q**k - q**i
        den *= q**r - q**i
    return num // den


def theta(j: int, q: int) -> int:
    """(q^j - 1) / (q - 1): the number of points of PG(j-1, q)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return (q**j - 1) // (q - 1)


@dataclass(frozen=True)
class ChainProfile:
    """Dimensions ``u`` of a flag U_1 < ... < U_s and target intersections ``v``."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        u, v = tuple(self.u), tuple(self.v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        if len(u) != len(v) or not u:
            raise ValueError("u and v must be non-empty and of equal length")
        if u[0] <= 0 or any(b <= a for a, b in zip(u, u[1:])):
            raise ValueError(f"u must be strictly increasing positive integers, got {u}")
        if v[0] < 0 or any(b < a for a, b in zip(v, v[1:])):
            raise ValueError(f"v must be nondecreasing nonnegative integers, got {v}")
        if any(vi > ui for ui, vi in zip(u, v)):
            raise ValueError(f"v_i must not exceed u_i, got u={u}, v={v}")
        if self.q < 2:
            raise ValueError("q must be >= 2")


def chain_subspace_count(profile: ChainProfile) -> int:
    """Subspaces V of U_s, dim V = v_s, with dim(U_i & V) = v_i for every i."""
    q = profile.q
    total = 1
    pu = pv = 0
    for ui, vi in zip(profile.u, profile.v):
        g = gaussian_binomial(ui - pu, vi - pv, q)
        if g == 0:
            return 0
        total *= q ** ((pu - pv) * (vi - pv)) * g
        pu, pv = ui, vi
    return total


def chain_count(u: Sequence[int], v: Sequence[int], q: int) -> int:
    return chain_subspace_count(ChainProfile(tuple(u), tuple(v), q))


def _m_direct_sum(u2: int, u3: int, v2: int, v3: int, t: int, q: int) -> int:
    # ambient space is U_2 (+) U_3 and dim V = v2 + v3 + t
    if t < 0:
        return 0
    base = gaussian_binomial(u2, v2, q) * gaussian_binomial(u3, v3, q)
    if t == 0 or base == 0:
        return base
    extra = gaussian_binomial(u2 - v2, t, q) * gaussian_binomial(u3 - v3, t, q)
    for i in range(t):
        extra *= q**t - q**i
    return base * extra


def _m_trivial_meet(u2: int, u3: int, k: int, v2: int, v3: int, r: int, q: int) -> int:
    # U_2 & U_3 = 0 inside GF(q)^k
    if min(v2, v3, r) < 0 or r > k:
        return 0
    top = min(u2 - v2, u3 - v3, r - v2 - v3)
    total = 0
    for t in range(top + 1):
        g = gaussian_binomial(k - u2 - u3, r - v2 - v3 - t, q)
        if g == 0:
            continue
        total += (
            q ** ((u2 + u3 - v2 - v3 - t) * (r - v2 - v3 - t))
            * _m_direct_sum(u2, u3, v2, v3, t, q)
            * g
        )
    return total


def intersection_count_M(
    u1: int, u2: int, u3: int, k: int, v1: int, v2: int, v3: int, r: int, q: int
) -> int:
    """r-subspaces V of GF(q)^k with dim(U_i & V) = v_i, where U_1 = U_2 & U_3.

    ``u1`` is 0 or 1. Infeasible targets count zero; a flag that cannot exist
    (wrong ordering, or U_2 + U_3 larger than the ambient space) raises.
    """
    if u1 not in (0, 1):
        raise ValueError("u1 must be 0 or 1")
    if not (u1 < u2 < u3 < k):
        raise ValueError(f"need u1 < u2 < u3 < k, got {(u1, u2, u3, k)}")
    if u2 + u3 - u1 > k:
        raise ValueError("U_2 + U_3 does not fit in the ambient space")
    if q < 2:
        raise ValueError("q must be >= 2")
    if not 0 <= r <= k or min(v1, v2, v3) < 0 or v1 > u1:
        return 0
    if r == k:
        return int((v1, v2, v3) == (u1, u2, u3))
    if u1 == 0:
        return _m_trivial_meet(u2, u3, k, v2, v3, r, q)
    # quotient by U_1
    if v1 == 1:
        return _m_trivial_meet(u2 - 1, u3 - 1, k - 1, v2 - 1, v3 - 1, r - 1, q)
    return q**r * _m_trivial_meet(u2 - 1, u3 - 1, k - 1, v2, v3, r, q)
