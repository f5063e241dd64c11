import json

import pytest
from hypothesis import given, settings, strategies as st

from ghwcodes.codes import LinearCode, sswd_bruteforce, weight_distribution
from ghwcodes.constructions import (
    ConstructionSpec,
    closed_form,
    closed_form_distance,
    closed_form_ghw,
    closed_form_length,
    closed_form_sswd,
    closed_form_weight_distribution,
    construct,
    corrupt_bundle,
    fewness_bounds,
    generator_columns,
    grs_matrix,
    has_fewness_bound,
    iter_specs,
    profile_count,
    t51_codim_checks,
    t51_sswd,
    verify,
    z_box,
    z_set,
)
from ghwcodes.qcombinat import gaussian_binomial


@pytest.mark.parametrize("make", [
    lambda: ConstructionSpec("T99", 2, 4),
    lambda: ConstructionSpec.t33(6, 4, 2, (2, 3)),
    lambda: ConstructionSpec.t33(2, 4, 1, (2, 3)),
    lambda: ConstructionSpec.t33(2, 4, 2, (3, 2)),
    lambda: ConstructionSpec.t33(2, 4, 2, (2, 4)),
    lambda: ConstructionSpec.t35(3, 4, 1, (2, 3)),
    lambda: ConstructionSpec.t35(3, 4, 1, (1, 2, 3)),
    lambda: ConstructionSpec.t42(2, 5, 3, 4),
    lambda: ConstructionSpec.t42(2, 5, 2, 5),
    lambda: ConstructionSpec.t51(3, 4, 3),
    lambda: ConstructionSpec.t51(5, 2, 5),
    lambda: ConstructionSpec.t51(3, 3, 4),
])
def test_invalid_specs_rejected(make):
    with pytest.raises(ValueError):
        make()


def test_family_is_case_insensitive():
    assert ConstructionSpec("t42", 2, 5, u=(1, 2, 3)) == ConstructionSpec.t42(2, 5, 2, 3)


@pytest.mark.parametrize("spec", list(iter_specs((2, 3), 5, 2, 2))[::7])
def test_spec_json_roundtrip(spec):
    assert ConstructionSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


def test_spec_json_field_names():
    assert ConstructionSpec.t42(2, 5, 2, 4).to_json() == {"family": "T42", "q": 2, "k": 5, "u2": 2, "u3": 4}
    assert ConstructionSpec.t51(5, 4, 5).to_json() == {"family": "T51", "q": 5, "k": 4, "m": 5}
    assert ConstructionSpec.t35(3, 4, 1, (1, 3)).to_json()["u"] == [1, 3]


def test_t51_printed_generator():
    printed = [
        [1, 0, 1, 2, 1, 2, 0, 2, 0, 2],
        [0, 1, 1, 1, 0, 0, 1, 1, 2, 2],
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    ]
    cols = generator_columns(ConstructionSpec.t51(3, 3, 3))
    assert [list(c) for c in zip(*printed)] == [list(c) for c in cols]


def test_t33_printed_generator():
    cols = generator_columns(ConstructionSpec.t33(2, 4, 2, (2, 3)))
    # S_{2,4} without its first 3 columns, then S_{2,4} without its first 7
    assert len(cols) == 20
    assert cols[0] == (0, 0, 1, 0) and cols[12] == (0, 0, 0, 1)


def test_grs_is_mds():
    g = grs_matrix(5, 4, 5)
    c = LinearCode(g)
    assert weight_distribution(c).min_weight() == 2
    assert all(x == 1 for x in g.data[-1])
    with pytest.raises(ValueError):
        grs_matrix(5, 4, 3)


@pytest.mark.parametrize("spec,n,d", [
    (ConstructionSpec.t33(2, 4, 2, (2, 3)), 20, 10),
    (ConstructionSpec.t33(2, 4, 3, (2, 3)), 35, 18),
    (ConstructionSpec.t35(3, 4, 1, (1, 2)), 37, 24),
    (ConstructionSpec.t35(3, 4, 1, (1, 3)), 28, 18),
    (ConstructionSpec.t42(2, 5, 2, 3), 22, 10),
    (ConstructionSpec.t42(2, 5, 2, 4), 14, 6),
    (ConstructionSpec.t51(3, 3, 3), 10, 6),
    (ConstructionSpec.t51(5, 4, 5), 151, 120),
])
def test_printed_parameters(spec, n, d):
    assert (closed_form_length(spec), closed_form_distance(spec)) == (n, d)
    assert closed_form_weight_distribution(spec).total() == spec.q**spec.k


def test_closed_form_hierarchy_example():
    spec = ConstructionSpec.t51(5, 4, 5)
    assert [closed_form_ghw(spec, r) for r in range(1, 5)] == [120, 145, 150, 151]
    with pytest.raises(ValueError):
        closed_form_ghw(spec, 0)


def test_fewness_examples():
    assert fewness_bounds(ConstructionSpec.t33(2, 4, 2, (2,)), 2) == 3
    assert fewness_bounds(ConstructionSpec.t35(3, 4, 1, (1, 2)), 1) == 4
    assert fewness_bounds(ConstructionSpec.t42(2, 5, 2, 3), 1) == 8
    assert not has_fewness_bound(ConstructionSpec.t33(2, 4, 2, (2, 3)))
    with pytest.raises(ValueError):
        fewness_bounds(ConstructionSpec.t51(3, 3, 3), 1)


def test_z_set_partitions_the_box():
    spec = ConstructionSpec.t42(2, 5, 2, 3)
    for r in range(1, 6):
        box = list(z_box(spec, r))
        seen = []
        for j in range(closed_form_length(spec) + 1):
            seen += z_set(spec, r, j)
        assert sorted(seen) == sorted(box)
        assert sum(profile_count(spec, r, v) for v in box) == gaussian_binomial(5, r, 2)


def test_z_box_rejects_t51():
    with pytest.raises(ValueError):
        list(z_box(ConstructionSpec.t51(3, 3, 3), 1))


def test_t51_readings_and_codim_checks():
    spec = ConstructionSpec.t51(5, 4, 5)
    c = construct(spec)
    oracle = {r: sswd_bruteforce(c, r) for r in (1, 3)}
    assert t51_sswd(spec, 1) == oracle[1]
    assert t51_sswd(spec, 1, "statement") != oracle[1]
    with pytest.raises(ValueError):
        t51_sswd(spec, 1, "other")
    checks = t51_codim_checks(spec)
    assert checks[3] == oracle[3]
    assert checks[2] == closed_form_sswd(spec, 2)


@pytest.mark.parametrize("spec", [
    ConstructionSpec.t33(3, 4, 2, (1, 3)),
    ConstructionSpec.t35(2, 5, 2, (1, 2, 4)),
    ConstructionSpec.t42(3, 4, 2, 3),
    ConstructionSpec.t51(4, 3, 4),
])
def test_verify_ok(spec):
    rep = verify(spec)
    assert rep.ok and rep.status == "ok" and rep.checks > 0
    assert not rep.budget_errors
    assert json.loads(json.dumps(rep.to_json()))["status"] == "ok"


def test_corruption_is_detected_exactly_once():
    spec = ConstructionSpec.t42(2, 5, 2, 3)
    bundle = closed_form(spec)
    bad = corrupt_bundle(bundle, 2)
    rep = verify(spec, bundle=bad)
    assert rep.status == "mismatch"
    assert len(rep.mismatches) == 1
    m = rep.mismatches[0]
    assert (m["check"], m["r"], m["weight"]) == ("sswd", 2, 16)
    assert m["closed_form"] == m["oracle"] + 1


def test_verify_records_budget_errors():
    spec = ConstructionSpec.t33(3, 5, 1, (2,))
    rep = verify(spec, rs=[2], budget=200)
    assert rep.budget_errors and rep.ok
    with pytest.raises(ValueError):
        verify(spec, rs=[9])


def test_iter_specs_counts():
    specs = list(iter_specs((2, 3, 4), 6, 2, 3))
    assert len(specs) == len(set(specs)) == 265
    fams = {f: sum(s.family == f for s in specs) for f in ("T33", "T35", "T42", "T51")}
    assert fams == {"T33": 150, "T35": 90, "T42": 21, "T51": 4}


@given(st.sampled_from(list(iter_specs((2, 3), 4, 2, 2))), st.data())
@settings(max_examples=30, deadline=None)
def test_closed_form_sswd_totals(spec, data):
    r = data.draw(st.integers(1, spec.k))
    t = closed_form_sswd(spec, r)
    assert t.total() == gaussian_binomial(spec.k, r, spec.q)
    assert t.min_weight() == closed_form_ghw(spec, r)


def test_reference_table_totals():
    from ghwcodes.reference_tables import TABLES

    short = []
    for number, refs in TABLES.items():
        for ref in refs:
            for r, printed in ref.sswd.items():
                if sum(printed.values()) != gaussian_binomial(ref.spec.k, r, ref.spec.q):
                    short.append((number, ref.code_id, r, sum(printed.values())))
    # one transcribed row counts 30 subcodes where the code has 31
    assert short == [(3, "C2", 1, 30)]
