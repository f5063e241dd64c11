import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ghwcodes._config import BudgetExceededError
from ghwcodes.codes import (
    NOT_DETERMINED,
    PROVEN_OPTIMAL,
    LinearCode,
    WeightTable,
    classic_griesmer_length,
    ghw,
    griesmer_defect,
    griesmer_from_hierarchy,
    griesmer_report,
    griesmer_sum,
    sswd_all,
    sswd_bruteforce,
    sswd_dual,
    subcode_support_weight,
    weight_distribution,
    weight_hierarchy,
)
from ghwcodes.constructions import ConstructionSpec, construct, simplex_matrix
from ghwcodes.field import field_for_order
from ghwcodes.linalg import MatrixGF, SubspaceBasis, enumerate_subspaces
from ghwcodes.qcombinat import gaussian_binomial
from ghwcodes.reference_tables import GOLAY_24_HIERARCHY

from oracles import naive_support_weight


def _golay():
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # x^11+x^10+x^6+x^5+x^4+x^2+1, low degree first
    rows = []
    for i in range(12):
        row = [0] * 23
        for j, c in enumerate(g):
            row[i + j] = c
        rows.append(row + [sum(row) % 2])
    return LinearCode(MatrixGF(field_for_order(2), rows))


def _random_code(q, k, n, seed):
    rng = np.random.default_rng(seed)
    f = field_for_order(q)
    while True:
        gen = MatrixGF(f, rng.integers(0, q, size=(k, n)))
        try:
            return LinearCode(gen)
        except ValueError:
            continue


def test_simplex_code_parameters():
    c = LinearCode(simplex_matrix(2, 4))
    assert c.params == (15, 4, 2) and c.full_support
    assert weight_distribution(c).counts == {0: 1, 8: 15}


def test_rank_deficient_generator_rejected():
    f = field_for_order(3)
    with pytest.raises(ValueError):
        LinearCode(MatrixGF(f, [[1, 2, 0], [2, 1, 0]]))


def test_zero_column_flags_missing_support():
    c = LinearCode(MatrixGF(field_for_order(2), [[1, 0, 1], [0, 0, 1]]))
    assert not c.full_support
    with pytest.warns(UserWarning):
        griesmer_report(c)


def test_hamming_dual_weight_distribution():
    c = LinearCode(simplex_matrix(2, 3))
    assert weight_distribution(c).counts == {0: 1, 4: 7}
    assert weight_distribution(c, method="sswd").counts == {0: 1, 4: 7}
    assert weight_hierarchy(c) == [4, 6, 7]


def test_t35_code_min_weight_count():
    c = construct(ConstructionSpec.t35(3, 4, 1, (1, 2)))
    wd = weight_distribution(c)
    assert c.params == (37, 4, 3)
    assert wd.min_weight() == 24 and wd[24] == 18


def test_t51_second_weight():
    c = construct(ConstructionSpec.t51(5, 4, 5))
    assert ghw(c, 2) == 145


def test_golay_hierarchy_and_defects():
    c = _golay()
    wd = weight_distribution(c)
    assert wd.counts == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    for r in (10, 11, 12):
        assert ghw(c, r) == GOLAY_24_HIERARCHY[r - 1]
    rep = griesmer_from_hierarchy(2, 24, 12, GOLAY_24_HIERARCHY)
    assert rep.defects[0] == 24 - classic_griesmer_length(2, 12, 8)
    assert all(d >= 0 for d in rep.defects)
    assert rep.r_griesmer_index == next(r for r, d in enumerate(rep.defects, 1) if d == 0)


def test_griesmer_sum_r1_is_classic_bound():
    for q in (2, 3, 4, 5):
        for k in (2, 3, 4):
            for d in range(1, 30):
                assert griesmer_sum(q, k, 1, d) == classic_griesmer_length(q, k, d)


def test_simplex_is_griesmer_everywhere():
    c = LinearCode(simplex_matrix(3, 3))
    rep = griesmer_report(c)
    assert rep.defects == (0, 0, 0) and rep.griesmer and not rep.almost_griesmer
    assert rep.r_griesmer_index == 1 and rep.distance_optimal == PROVEN_OPTIMAL
    assert griesmer_defect(3, 13, 3, 2, 12) == 0


def test_non_optimal_certificate():
    rep = griesmer_from_hierarchy(2, 10, 2, [2, 10])
    assert rep.distance_optimal == NOT_DETERMINED
    with pytest.raises(ValueError):
        griesmer_from_hierarchy(2, 10, 3, [2, 10])


@pytest.mark.parametrize("spec", [
    ConstructionSpec.t33(2, 4, 2, (2, 3)),
    ConstructionSpec.t35(3, 4, 1, (1, 3)),
    ConstructionSpec.t42(2, 5, 2, 4),
    ConstructionSpec.t51(3, 3, 3),
])
def test_two_sswd_routes_agree(spec):
    c = construct(spec)
    for r in range(1, c.k + 1):
        a = sswd_bruteforce(c, r)
        assert a == sswd_dual(c, r)
        assert a.total() == gaussian_binomial(c.k, r, c.q)
        assert a.min_weight() == ghw(c, r)


@given(st.sampled_from([2, 3, 4]), st.integers(2, 4), st.integers(2, 12), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_random_code_invariants(q, k, n, seed):
    if n < k:
        n = k
    c = _random_code(q, k, n, seed)
    one = sswd_bruteforce(c, 1)
    wd = weight_distribution(c)
    for w, m in wd.items():
        if w:
            assert m == (q - 1) * one[w]
    hier = weight_hierarchy(c)
    assert all(a < b for a, b in zip(hier, hier[1:]))
    for r in range(1, k + 1):
        assert sswd_bruteforce(c, r) == sswd_dual(c, r)


@given(st.integers(0, 10**6))
@settings(max_examples=10, deadline=None)
def test_subcode_support_weight_matches_listing(seed):
    q, k = 3, 3
    c = _random_code(q, k, 6, seed)
    rng = np.random.default_rng(seed)
    for r in (1, 2, 3):
        subs = list(enumerate_subspaces(c.field, k, r))
        v = subs[int(rng.integers(len(subs)))]
        assert subcode_support_weight(c, v) == naive_support_weight(c, v.basis.data.tolist())


def test_subcode_support_weight_dimension_check():
    c = LinearCode(simplex_matrix(2, 3))
    with pytest.raises(ValueError):
        subcode_support_weight(c, SubspaceBasis.full(c.field, 4))


def test_r_out_of_range():
    c = LinearCode(simplex_matrix(2, 3))
    for r in (0, 4):
        with pytest.raises(ValueError):
            sswd_bruteforce(c, r)
        with pytest.raises(ValueError):
            ghw(c, r)


def test_budget_exceeded():
    c = construct(ConstructionSpec.t51(5, 4, 5))
    with pytest.raises(BudgetExceededError) as err:
        sswd_bruteforce(c, 2, budget=100)
    assert err.value.needed > 100
    with pytest.raises(BudgetExceededError):
        weight_distribution(c, budget=10)


def test_parallel_runs_match_serial():
    c = construct(ConstructionSpec.t42(2, 5, 2, 3))
    for r in range(1, 6):
        serial = sswd_bruteforce(c, r, parallel=1)
        assert sswd_bruteforce(c, r, parallel=4) == serial
        assert sswd_dual(c, r, parallel=3) == serial
    assert weight_hierarchy(c, parallel=4) == weight_hierarchy(c)


def test_weight_table_json_roundtrip_and_dense():
    t = WeightTable("sswd", 2, 10, {9: 10, 10: 3, 4: 0})
    assert 4 not in t.counts and len(t) == 2
    back = WeightTable.from_json(json.loads(json.dumps(t.to_json())))
    assert back == t
    assert t.dense()[9:] == [10, 3] and sum(t.dense()) == 13
    big = WeightTable("sswd", 1, 5, {5: 2**70})
    assert WeightTable.from_json(big.to_json())[5] == 2**70


@pytest.mark.parametrize("role,r,counts", [
    ("bogus", None, {}),
    ("sswd", None, {1: 1}),
    ("sswd", 1, {1: -1}),
    ("sswd", 1, {7: 1}),
])
def test_weight_table_validation(role, r, counts):
    with pytest.raises(ValueError):
        WeightTable(role, r, 5, counts)


def test_code_json_roundtrip():
    c = construct(ConstructionSpec.t51(3, 3, 3))
    assert LinearCode.from_json(json.loads(json.dumps(c.to_json()))) == c
    obj = c.to_json()
    obj["n"] = 99
    with pytest.raises(ValueError):
        LinearCode.from_json(obj)


def test_monomial_equivalence_preserves_sswd():
    c = construct(ConstructionSpec.t35(3, 4, 1, (1, 2)))
    rng = np.random.default_rng(5)
    base = sswd_all(c)
    for _ in range(3):
        perm = rng.permutation(c.n)
        scale = rng.integers(1, 3, size=c.n)
        g = (c.gen.data[:, perm] * scale) % 3
        d = LinearCode(MatrixGF(c.field, g))
        assert sswd_all(d) == base
