import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ghwcodes.field import (
    FieldElement,
    FiniteField,
    element_enumerate,
    field_create,
    field_for_order,
    is_irreducible,
    is_prime,
    prime_power,
    smallest_irreducible,
)


def _prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except ValueError:
            continue
        out.append(q)
    return out


PRIME_POWERS = _prime_powers(64)


def test_prime_power_list():
    assert PRIME_POWERS[:12] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]
    assert 64 in PRIME_POWERS and 6 not in PRIME_POWERS and 12 not in PRIME_POWERS


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_gf2_modulus_is_x():
    f = field_create(2, 1)
    assert f.q == 2 and f.modulus == (0, 1)


def test_gf4_modulus():
    assert field_create(2, 2).modulus == (1, 1, 1)


def test_gf8_smallest_modulus_constant_first():
    # x^3 + x^2 + 1 beats x^3 + x + 1 when the constant term is compared first
    assert field_create(2, 3).modulus == (1, 0, 1, 1)


def test_gf9_modulus_irreducible():
    f = field_create(3, 2)
    assert is_irreducible(f.modulus, 3)
    assert f.modulus == smallest_irreducible(3, 2)


def test_irreducible_is_lexicographically_first():
    for p, e in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        first = smallest_irreducible(p, e)
        assert is_irreducible(first, p)
        for body in itertools.product(range(p), repeat=e):
            if body < first[:e]:
                assert not is_irreducible(body + (1,), p)


@pytest.mark.parametrize("p,e", [(4, 1), (1, 1), (2, 0), (6, 1)])
def test_create_rejects_bad_input(p, e):
    with pytest.raises(ValueError):
        field_create(p, e)


def test_create_rejects_order_above_cap():
    with pytest.raises(ValueError):
        field_create(2, 21)
    with pytest.raises(ValueError):
        field_create(3, 4, max_order=50)


def test_gf3_product():
    f = field_create(3)
    assert f.element(2) * f.element(2) == f.element(1)


def test_gf4_x_squared():
    f = field_create(2, 2)
    x = f.element(2)
    assert x * x == f.element(3)
    assert repr(x * x) == "x+1"


def test_gf5_division():
    f = field_create(5)
    assert f.element(3) / f.element(4) == f.element(2)


def test_division_by_zero():
    f = field_create(7)
    with pytest.raises(ZeroDivisionError):
        f.element(3) / f.element(0)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        field_create(3).element(1) + field_create(5).element(1)


def test_enumeration_order():
    assert [e.index for e in element_enumerate(field_create(3))] == [0, 1, 2]
    assert [repr(e) for e in element_enumerate(field_create(2, 2))] == ["0", "1", "x", "x+1"]
    assert [e.index for e in element_enumerate(field_create(5))][:5] == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27, 25])
def test_enumeration_is_digit_expansion(q):
    f = field_for_order(q)
    els = element_enumerate(f)
    assert len(els) == q and len(set(els)) == q
    assert els[0].coeffs == (0,) * f.e and els[1].coeffs == (1,) + (0,) * (f.e - 1)
    for i, el in enumerate(els):
        assert sum(c * f.p**j for j, c in enumerate(el.coeffs)) == i


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 32, 49, 64])
def test_tables_match_polynomial_arithmetic(q):
    # tables come from log/exp; the scalar methods do schoolbook multiplication
    f = field_for_order(q)
    t = f.tables()
    for a in range(q):
        for b in range(q):
            assert t["mul"][a, b] == f.mul(a, b)
            assert t["add"][a, b] == f.add(a, b)
        assert t["neg"][a] == f.neg(a)
        if a:
            assert t["inv"][a] == f.inv(a)


def test_json_roundtrip():
    for q in (2, 4, 9, 125):
        f = field_for_order(q)
        assert FiniteField.from_json(f.to_json()) == f


def test_non_default_modulus_via_json():
    g = FiniteField.from_json({"p": 2, "e": 3, "modulus": [1, 1, 0, 1]})
    assert g.modulus == (1, 1, 0, 1) and g != field_create(2, 3)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 2, (1, 0, 1))


@given(st.sampled_from([4, 8, 9, 16, 27, 125, 256]), st.data())
def test_element_operators_agree_with_index_methods(q, data):
    f = field_for_order(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(1, q - 1))
    ea, eb = f.element(a), f.element(b)
    assert (ea + eb).index == f.add(a, b)
    assert (ea - eb) + eb == ea
    assert (ea / eb) * eb == ea
    assert (eb ** (q - 1)) == f.one
    assert -(-ea) == ea


def test_large_field_scalar_arithmetic_without_tables():
    f = field_create(2, 20)
    a = f.element(123457)
    assert a * a.inverse() == f.one
    with pytest.raises(ValueError):
        f.tables()


def test_element_hash_and_bool():
    f = field_create(3)
    assert len({f.element(1), FieldElement(f, 1)}) == 1
    assert not f.zero and f.one


def test_exhaustive_axioms_small():
    for q in (2, 3, 4, 8, 9):
        f = field_for_order(q)
        add, mul = f.tables()["add"], f.tables()["mul"]
        a = np.arange(q)
        assert (add[add[a[:, None, None], a[None, :, None]], a[None, None, :]]
                == add[a[:, None, None], add[a[None, :, None], a[None, None, :]]]).all()
        assert (mul == mul.T).all()
