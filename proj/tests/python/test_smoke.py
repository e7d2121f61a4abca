"""Smoke tests for the python extension: exact values across the boundary."""

import json
from fractions import Fraction

import pytest

import okbody


def two_chamber():
    return okbody.parse_instance(okbody.generate_instance("twochamber"))


def test_parse_and_dims():
    b = two_chamber()
    assert b.name == "twochamber"
    assert b.valuation_dim == 1
    assert b.class_dim == 2
    assert json.loads(b.instance_json())["rays"][0] == [0, 1, 0]


def test_fiber_is_exact():
    b = two_chamber()
    # fiber over (a, b) is the segment [0, min(a+b, 2a)]
    assert b.fiber([3, 1]) == [[Fraction(0)], [Fraction(4)]]
    assert b.fiber([Fraction(1, 2), 3]) == [[Fraction(0)], [Fraction(1)]]
    assert b.fiber(["1/3", "1/7"]) == [[Fraction(0)], [Fraction(10, 21)]]
    assert b.fiber([0, 5]) == [[Fraction(0)]]
    assert b.fiber_dimension([3, 1]) == 1
    assert b.fiber_dimension([0, 5]) == 0


def test_basis_and_chambers():
    b = two_chamber()
    basis = {tuple(e["ray"]): e["vertices"] for e in b.basis()}
    assert basis == {
        (1, 0): [[Fraction(0)], [Fraction(1)]],
        (1, 1): [[Fraction(0)], [Fraction(2)]],
        (0, 1): [[Fraction(0)]],
    }
    dims = sorted(c["dim"] for c in b.chambers())
    assert dims == [0, 1, 1, 1, 2, 2]


def test_decompose_reconstructs_the_class():
    b = two_chamber()
    parts = b.decompose([5, 3])
    total = [Fraction(0), Fraction(0)]
    for ray, weight in parts:
        assert weight > 0
        total = [t + weight * r for t, r in zip(total, ray)]
    assert total == [Fraction(5), Fraction(3)]
    rep = b.verify_decomposition([5, 3])
    assert rep["ok"] is True
    assert rep["body_vertices"] == rep["sum_vertices"]


def test_pair_additivity_fails_across_the_wall():
    b = two_chamber()
    rep = b.pair_additivity([1, 0], [0, 1], 1, 1)
    assert rep["hypothesis_met"] is False
    assert rep["ok"] is False
    assert rep["body_vertices"] == [[Fraction(0)], [Fraction(2)]]
    assert rep["sum_vertices"] == [[Fraction(0)], [Fraction(1)]]


def test_dimension_and_volume_polynomial():
    b = two_chamber()
    assert b.pick_ample() == [Fraction(1), Fraction(1)]
    assert b.numerical_dimension([0, 1]) == 0
    assert b.numerical_dimension([2, 1]) == 1
    vp = b.volume_polynomial([0, 1])
    assert vp["coeffs"] == [Fraction(0), Fraction(2)]
    sw = b.sandwich([1, 1], k_max=3)
    assert sw["ok"] is True
    assert len(sw["samples"]) == 3
    rho = b.rho_bound([0, 1], count=50, seed=3)
    assert rho["samples"] == 50
    assert rho["scale_invariant"] is True


def test_errors_are_typed():
    b = two_chamber()
    with pytest.raises(okbody.NotPseudoEffective):
        b.fiber([-1, 0])
    with pytest.raises(okbody.InputError):
        b.fiber([1.5, 2])  # floats never cross the boundary
    with pytest.raises(okbody.InputError):
        b.fiber([1])
    with pytest.raises(okbody.ValidationError):
        okbody.parse_instance("{}")
    with pytest.raises(okbody.InputError):
        okbody.generate_instance("mystery")


def test_generation_is_deterministic():
    a = okbody.generate_instance("random", seed=9, n=2, rho=2, ray_count=5)
    b = okbody.generate_instance("random", seed=9, n=2, rho=2, ray_count=5)
    assert a == b
    body = okbody.parse_instance(a)
    assert body.valuation_dim == 2 and body.class_dim == 2


def test_suite_report_is_canonical():
    texts = [okbody.generate_instance("interval"), okbody.generate_instance("twochamber")]
    r1 = okbody.run_suite(texts, samples=6, pairs=3, seed=1, jobs=1)
    r8 = okbody.run_suite(texts, samples=6, pairs=3, seed=1, jobs=8)
    assert r1 == r8
    rep = json.loads(r1)
    assert rep["verdict"] == "pass"
    assert [i["name"] for i in rep["instances"]] == ["interval", "twochamber"]
