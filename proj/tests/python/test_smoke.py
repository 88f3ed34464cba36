import pytest

import crysred


def test_classify_reducible_point():
    res = crysred.classify(3, 9, e=2, digits=["4", "3"], shift=1)
    assert res["variant"] == "reducible"
    assert res["trace"] == 2


def test_classify_irreducible_point():
    res = crysred.classify(3, 9, e=2, digits=["1"], shift=1)
    assert res["variant"] == "irreducible"
    assert res["t"] == 2


def test_classify_huge_weight():
    k = 6 * 7**30 + 3
    res = crysred.classify(7, k, e=2, digits=["1"], shift=1)
    assert res["variant"] == "irreducible"
    assert res["v_k3"] == 30


def test_classify_rejects_integral_slope():
    with pytest.raises(ValueError):
        crysred.classify(3, 9, e=1, digits=["1"], shift=1)


def test_sweep_matches_pointwise():
    rows = crysred.sweep(5, 11, [(2, [str(u)], 1) for u in range(1, 5)])
    variants = [r["result"]["variant"] for r in rows]
    assert variants == ["irreducible", "reducible", "reducible", "irreducible"]
    assert rows[2]["result"]["trace"] == 0


def test_exceptional_discs():
    disc = crysred.exceptional_discs(5, 11)
    assert disc["radius_exponent"] == 1
    assert disc["centres_in_O2"]
    assert crysred.exceptional_discs(5, 7) is None


def test_section2_suite_passes():
    reports = crysred.section2_suite(3, 7)
    assert len(reports) == 5
    assert all(r["pass"] for r in reports)


def test_section4_suite_passes():
    reports = crysred.section4_suite(3, 7, e=2, digits=["1"], shift=1)
    assert all(r["pass"] for r in reports)


def test_theta_branch_tuned_point():
    rep = crysred.theta_branch(3, 7, e=2, digits=["4", "3"], shift=1)
    assert rep["pass"]
    assert rep["branch"] == 2
    assert rep["params"]["taubar"] == "2"


def test_hecke_T_coset_count():
    terms = crysred.hecke_T(3, 1, coeffs=[1, 0])
    assert len(terms) == 3
    assert all(t["m"] == 1 for t in terms)
    terms2 = crysred.hecke_T(3, 1, coeffs=[1, 0], repeat=2)
    assert len(terms2) == 9


def test_t_exponent():
    assert crysred.t_exponent(5, 4) == 3
