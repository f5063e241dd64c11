"""Exact arithmetic in GF(p^e).

Elements are identified with integers in ``[0, q)``: the base-p digits of the
index are the polynomial-basis coefficients, constant term least significant.
Index 0 is zero and index 1 is one in every field.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator, Sequence

import numpy as np

from ._config import MAX_FIELD_ORDER, MAX_TABLE_ORDER


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**e``; raise ValueError if it is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p), coefficient lists constant-first ------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            s = i - dm
            for j in range(dm + 1):
                r[s + j] = (r[s + j] - c * m[j]) % p
    return _trim(r[:dm])


def _monic_polys(d: int, p: int) -> Iterator[list[int]]:
    for low in itertools.product(range(p), repeat=d):
        yield list(low) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = list(poly)
    e = len(poly) - 1
    if e < 1 or poly[-1] % p != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if e == 1:
        return True
    if poly[0] % p == 0:
        return False
    for d in range(1, e // 2 + 1):
        for div in _monic_polys(d, p):
            if not _poly_rem(poly, div, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e (constant term first)."""
    if e == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=e):
        if low[0] == 0:
            continue
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """GF(p^e) with polynomial-basis elements indexed by ``[0, q)``.

    Use :func:`field_create` rather than the constructor; it caches instances so
    that equal fields are usually the same object.
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int]) -> None:
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if e > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._powers = tuple(p**i for i in range(e))
        self._tables: dict[str, np.ndarray] | None = None

    # identity -------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e})"

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    # index <-> coefficients ----------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            raise ValueError("too many coefficients")
        return sum((c % self.p) * w for c, w in zip(coeffs, self._powers))

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element index of {self!r}")
        return a

    # scalar arithmetic on indices -----------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs([x + y for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coeffs(_poly_rem(prod, self.modulus, self.p))

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.e == 1:
            return pow(a, -1, self.p)
        return self.power(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # enumeration ----------------------------------------------------------
    def element(self, index: int) -> FieldElement:
        return FieldElement(self, self._check(int(index)))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    # lookup tables for the vectorised layers --------------------------------
    def tables(self) -> dict[str, np.ndarray]:
        """``add``, ``mul`` (q x q) and ``neg``, ``inv`` (q,) as int64 arrays.

        ``inv[0]`` is 0 by convention; callers must not divide by zero.
        """
        if self._tables is None:
            if self.q > MAX_TABLE_ORDER:
                raise ValueError(
                    f"matrix arithmetic needs lookup tables; q={self.q} exceeds {MAX_TABLE_ORDER}"
                )
            self._tables = _build_tables(self)
        return self._tables

    # serialisation --------------------------------------------------------
    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> FiniteField:
        f = field_create(int(obj["p"]), int(obj["e"]))
        if "modulus" in obj and tuple(obj["modulus"]) != f.modulus:
            return FiniteField(int(obj["p"]), int(obj["e"]), obj["modulus"])
        return f


def _build_tables(f: FiniteField) -> dict[str, np.ndarray]:
    q, p = f.q, f.p
    idx = np.arange(q, dtype=np.int64)
    if f.e == 1:
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
    else:
        digits = np.stack([(idx // p**i) % p for i in range(f.e)], axis=1)
        weights = np.array(f._powers, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        # log/exp through a primitive element
        exp = _primitive_powers(f)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        s = (log[:, None] + log[None, :]) % (q - 1)
        mul = exp[s]
        mul[0, :] = 0
        mul[:, 0] = 0
    neg = np.array([f.neg(int(a)) for a in idx], dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = (mul[1:] == 1).argmax(axis=1)
    out = {"add": add.astype(np.int64), "mul": mul.astype(np.int64), "neg": neg, "inv": inv}
    for arr in out.values():
        arr.setflags(write=False)
    return out


def _primitive_powers(f: FiniteField) -> np.ndarray:
    target = f.q - 1
    for g in range(2, f.q):
        powers = [1]
        x = g
        while x != 1:
            powers.append(x)
            x = f.mul(x, g)
        if len(powers) == target:
            return np.array(powers, dtype=np.int64)
    raise AssertionError("no primitive element")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def field_create(p: int, e: int = 1, max_order: int = MAX_FIELD_ORDER) -> FiniteField:
    """Return GF(p^e) with the smallest monic irreducible modulus.

    >>> field_create(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p**e > max_order:
        raise ValueError(f"field order {p}^{e} exceeds the configured maximum {max_order}")
    return FiniteField(p, e, smallest_irreducible(p, e))


def field_for_order(q: int) -> FiniteField:
    p, e = prime_power(q)
    return field_create(p, e)


def element_enumerate(f: FiniteField) -> list[FieldElement]:
    return f.elements()


class FieldElement:
    __slots__ = ("field", "index")

    def __init__(self, field: FiniteField, index: int) -> None:
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field!r} and {other.field!r}")
            return other.index
        if isinstance(other, int):
            # integers embed through the prime subfield
            return other % self.field.p
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other: object) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.index, self._other(other)))

    def __rsub__(self, other: object) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self._other(other), self.index))

    def __mul__(self, other: object) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        return FieldElement(self.field, self.field.div(self.index, self._other(other)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, n: int) -> FieldElement:
        return FieldElement(self.field, self.field.power(self.index, n))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.index))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.index))

    def __bool__(self) -> bool:
        return self.index != 0

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        if self.field.e == 1:
            return str(self.index)
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(reversed(terms)) if terms else "0"
