"""Region classification, prediction tables, named-family rules, sweeps."""

import json
import math
import random

import pytest

from oscilla import (ParameterError, classify_beta_params, kuttner_predict,
                     lommel_predict, lommel_realization, make_density,
                     predict, predict_from_shape, region_memberships,
                     steinerberger_predict, steinerberger_signs, sweep,
                     verify_cell, verify_pattern)
from oscilla.atlas import REGION_TAGS, AtlasRecord, atlas_records_to_csv

_PI = math.pi

_STAR = {
    "Pc": "Pc_star", "Pc_star": "Pc",
    "Ps_minus_Pc": "Ps_star_minus_Pc_star",
    "Ps_star_minus_Pc_star": "Ps_minus_Pc",
    "mono_C": "mono_C_star", "mono_C_star": "mono_C",
    "mono_D": "mono_D_star", "mono_D_star": "mono_D",
}


@pytest.mark.parametrize("ab,tag", [
    ((3.0, 0.5), "Pc"),
    ((2.0, 2.0 / 3.0), "Pc"),
    ((1.2, 0.5), "Pc"),
    ((5.0 / 3.0, 2.0 / 3.0), "Pc"),
    ((0.5, 2.0), "Pc_star"),
    ((0.3, 3.0), "Pc_star"),
    ((1.0, 3.0), "Pc_star"),
    ((1.0, 1.0), "excluded_point"),
    ((2.0, 1.0), "excluded_point"),
    ((1.0, 2.0), "excluded_point"),
    ((1.5, 1.0), "concave_strip"),
    ((4.0, 1.5), "Ps_minus_Pc"),
    ((1.5, 4.0), "Ps_star_minus_Pc_star"),
    ((3.0, 3.0), "diagonal"),
    ((2.0, 2.0), "diagonal"),
    ((1.5, 1.7), "sign_change_zone"),
    ((3.0, 2.5), "unknown"),
])
def test_classify_examples(ab, tag):
    label = classify_beta_params(*ab)
    assert label.tag == tag
    assert label.alpha == ab[0] and label.beta == ab[1]


def test_classify_label_carries_memberships():
    label = classify_beta_params(3.0, 0.5)
    m = label.memberships
    assert m["Pc"] and m["Ps"]
    assert not m["Pc_star"]


def test_membership_reflection_coherence():
    rng = random.Random(20240819)
    pairs = [("Pc", "Pc_star"), ("Ps", "Ps_star"),
             ("mono_C", "mono_C_star"), ("mono_D", "mono_D_star")]
    for _ in range(2000):
        a = rng.uniform(0.05, 5.0)
        b = rng.uniform(0.05, 5.0)
        ma = region_memberships(a, b)
        mb = region_memberships(b, a)
        for r, rs in pairs:
            assert ma[r] == mb[rs], (a, b, r)


def test_containments_on_grid():
    for i in range(1, 80):
        for j in range(1, 80):
            a, b = i * 0.06, j * 0.06
            m = region_memberships(a, b)
            if m["Pc"]:
                assert m["Ps"], (a, b)
            if m["Pc_star"]:
                assert m["Ps_star"], (a, b)
            if m["mono_D"]:
                assert m["Ps"], (a, b)
            if m["mono_C"]:
                assert m["mono_D"], (a, b)


def test_mono_star_matches_shape():
    # the starred monotone regions are exactly where the density increases
    for i in range(1, 40):
        for j in range(1, 40):
            a, b = i * 0.1, j * 0.1
            if region_memberships(a, b)["mono_D_star"]:
                assert make_density("beta", (a, b)).shape.is_increasing()


def test_predict_contract():
    for a, b, tag in [(3.0, 0.5, "Pc"), (0.5, 2.0, "Pc_star"),
                      (1.5, 1.0, "concave_strip"), (4.0, 1.5, "Ps_minus_Pc"),
                      (3.0, 3.0, "diagonal"), (1.5, 1.7, "sign_change_zone")]:
        label = classify_beta_params(a, b)
        assert label.tag == tag
        phi, psi = predict(label, k_max=7)
        for p in (phi, psi):
            if p is not None:
                assert p.k_max == 7
    # Ps_minus_Pc says nothing about the cosine transform
    phi, psi = predict(classify_beta_params(4.0, 1.5), k_max=7)
    assert phi is None and psi is not None
    with pytest.raises(ParameterError):
        predict(classify_beta_params(3.0, 2.5))


def test_predict_pc_star_verified():
    label = classify_beta_params(0.5, 2.0)
    phi, psi = predict(label, k_max=6)
    d = make_density("beta", (0.5, 2.0))
    assert verify_pattern(d, "cosine", phi).status == "pass"
    assert verify_pattern(d, "sine", psi).status == "pass"
    assert phi.no_common_zeros and psi.no_common_zeros


def test_predict_excluded_points_verified():
    for a, b in ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0)):
        d = make_density("beta", (a, b))
        phi, psi = predict(classify_beta_params(a, b), k_max=5)
        for kind, p in (("cosine", phi), ("sine", psi)):
            if p is None:
                continue
            rep = verify_pattern(d, kind, p)
            assert rep.status == "pass", (a, b, kind, rep.violations)


def test_predict_from_shape_quadratic_sharp_case():
    # decreasing with increasing convex derivative and 2L <= 3 pi M:
    # the sine zeros stay in (k pi, (k+1/2) pi)
    d = make_density("quadratic", (1.0, 0.5))
    sh = d.shape
    preds = predict_from_shape(sh, k_max=4)
    p = preds.u
    assert p is not None
    item = p.items[0]
    assert (item.lo.mul, item.lo.add) == (1, 0)
    assert (item.hi.mul, item.hi.add) == (1, 0.5)
    assert verify_pattern(d, "cosine", p).status == "pass"


def test_predict_from_shape_increasing_convex():
    d = make_density("beta", (1.0, 3.0))
    preds = predict_from_shape(d.shape, k_max=5)
    u, v = preds
    assert u is not None and v is not None
    assert verify_pattern(d, "cosine", u).status == "pass"
    assert verify_pattern(d, "sine", v).status == "pass"
    assert preds.du is not None
    assert verify_pattern(d, "d_cosine", preds.du).status == "pass"


def test_predict_from_shape_decreasing_positive():
    d = make_density("beta", (3.0, 0.5))
    preds = predict_from_shape(d.shape, k_max=5)
    assert preds.u.positivity.sign == "+"
    assert preds.v.positivity.sign == "+"
    assert preds.du is None and preds.dv is None


@pytest.mark.parametrize("delta,lam,kind", [
    (0.5, 1.0, "positive"),
    (1.0, 2.0, "positive"),
    (4.0, 1.0, "sigma_bands"),
    (2.5, 1.0, "half_bands"),
    (3.0, 0.5, "unit_bands"),
    (1.5, 1.0, "unit_bands"),
])
def test_kuttner_predict_cases(delta, lam, kind):
    p = kuttner_predict(delta, lam, k_max=6)
    assert p is not None
    if kind == "positive":
        assert not p.items
        assert p.positivity.sign in ("+", "+0")
    else:
        item = p.items[0]
        assert (item.lo.mul, item.lo.add) == (1, 0)
        if kind == "sigma_bands":
            assert item.hi.use_sigma
        elif kind == "half_bands":
            assert (item.hi.mul, item.hi.add) == (1, 0.5)
        else:
            assert (item.hi.mul, item.hi.add) == (1, 1)


def test_kuttner_predict_outside_table():
    assert kuttner_predict(2.0, 2.0, k_max=5) is None


def test_kuttner_predictions_verify():
    for delta, lam in ((3.0, 0.5), (1.5, 1.0), (2.5, 1.0), (4.0, 1.0)):
        p = kuttner_predict(delta, lam, k_max=5)
        d = make_density("kuttner", (delta, lam))
        rep = verify_pattern(d, "cosine", p)
        assert rep.status == "pass", (delta, lam, rep.violations)


@pytest.mark.parametrize("mu,placement", [
    (-1.0, ("half_below", "lattice")),
    (-0.7, ("half_below", "half_above")),
    (0.0, ("lattice", "half_above")),
    (0.3, ("lattice", "next")),
    (1.0, None),
])
def test_lommel_predict_cases(mu, placement):
    p = lommel_predict(mu, k_max=6)
    if placement is None:
        assert not p.items
        assert p.positivity.sign == "+"
        return
    item = p.items[0]
    want = {"half_below": (1, -0.5), "lattice": (1, 0),
            "half_above": (1, 0.5), "next": (1, 1)}
    assert (item.lo.mul, item.lo.add) == want[placement[0]]
    assert (item.hi.mul, item.hi.add) == want[placement[1]]


def test_lommel_predict_validation():
    for mu in (-0.5, 0.5, -1.5):
        with pytest.raises(ParameterError):
            lommel_predict(mu)


def test_lommel_realization_and_verify():
    d, kind = lommel_realization(0.3)
    assert kind == "sine"
    assert d.family == "beta" and d.params == pytest.approx((0.8, 1.0))
    rep = verify_pattern(d, kind, lommel_predict(0.3, k_max=8))
    assert rep.status == "pass", rep.violations

    d, kind = lommel_realization(-1.0)
    assert kind == "cosine"
    assert d.params == pytest.approx((0.5, 1.0))
    rep = verify_pattern(d, kind, lommel_predict(-1.0, k_max=8))
    assert rep.status == "pass", rep.violations


def test_steinerberger_signs_frozen():
    assert steinerberger_signs(1.0, 6) == (1,) * 6
    assert steinerberger_signs(5.0 / 3.0, 6) == (1,) * 6
    assert steinerberger_signs(2.0, 6) == (1, -1, 1, -1, 1, -1)
    assert steinerberger_signs(3.0, 6) == (1, -1, 1, -1, 1, -1)


def test_steinerberger_predict_regimes():
    assert steinerberger_predict(1.0) == "all_positive"
    assert steinerberger_predict(5.0 / 3.0) == "all_positive"
    assert steinerberger_predict(1.8) == "indeterminate"
    assert steinerberger_predict(2.0) == "alternating"
    assert steinerberger_predict(3.0) == "alternating"
    with pytest.raises(ParameterError):
        steinerberger_signs(-1.0, 3)


def test_verify_cell_definite_and_unclassified():
    rec = verify_cell(0.5, 2.0, k_max=5)
    assert rec.label == "Pc_star"
    assert rec.passed is True and rec.status == "pass"
    rec = verify_cell(3.0, 2.5, k_max=5)
    assert rec.label == "unknown"
    assert rec.passed is None and rec.status == "unclassified"


def test_atlas_record_json_key_order():
    rec = verify_cell(1.5, 1.0, k_max=4)
    doc = json.loads(rec.to_json())
    keys = list(doc)
    assert keys[:7] == ["alpha", "beta", "label", "k_max", "pass",
                        "violations", "horizon"]
    assert doc["label"] == "concave_strip"
    assert doc["pass"] is True


def test_atlas_records_to_csv_header():
    recs = [verify_cell(1.5, 1.0, k_max=3), verify_cell(3.0, 2.5, k_max=3)]
    text = atlas_records_to_csv(recs)
    lines = text.strip().splitlines()
    assert lines[0].startswith("alpha,beta,label,k_max,pass")
    assert len(lines) == 3


def test_sweep_deterministic_across_jobs():
    alphas = [0.5, 1.0, 1.5]
    betas = [0.5, 1.0]
    seq = sweep(alphas, betas, k_max=3, jobs=1)
    par = sweep(alphas, betas, k_max=3, jobs=2)
    assert [r.to_json() for r in seq] == [r.to_json() for r in par]
    assert len(seq) == 6
    assert all(r.status != "error" for r in seq)


def test_region_tags_registry():
    assert "Pc" in REGION_TAGS and "unknown" in REGION_TAGS
    for t in _STAR:
        assert t in REGION_TAGS
