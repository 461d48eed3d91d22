"""Smoke tests for the python bindings against the CMake-built extension."""

import json
import os

import pytest

import leonardpairs

DATA = os.environ["LEONARD_TEST_DATA_DIR"]


def data_path(name):
    return os.path.join(DATA, name)


@pytest.fixture(scope="module")
def d2_system():
    return leonardpairs.load(data_path("q_d2_c.json"))


def test_load_and_shape(d2_system):
    assert d2_system.d == 2
    assert d2_system.field == "Q"
    a = d2_system.a()
    assert len(a) == 3 and len(a[0]) == 3
    assert a[1][0] == "1"  # split form: unit subdiagonal


def test_load_from_dict():
    doc = {
        "d": 1,
        "field": "rational",
        "theta": ["0", "1"],
        "theta_star": ["0", "1"],
        "varphi": ["1"],
    }
    system = leonardpairs.load(doc)
    assert system.d == 1
    completed = json.loads(system.array_json())
    assert completed["phi"] == ["2"]


def test_validation_verdicts(d2_system):
    verdicts = d2_system.validate()
    assert verdicts and all(passed for _, passed, _ in verdicts)


def test_invalid_instances_raise():
    with pytest.raises(leonardpairs.ParseError):
        leonardpairs.load('{"d": 1}')
    with pytest.raises(leonardpairs.MathError):
        leonardpairs.load(
            {
                "d": 1,
                "field": "rational",
                "theta": ["1", "1"],
                "theta_star": ["0", "1"],
                "varphi": ["1"],
            }
        )


def test_identity_transition(d2_system):
    result = d2_system.transition("E.fwd.xis0", "E.fwd.xis0")
    assert result["verified"] is True
    assert result["equation"] == "eq:Eivs0toXivs0"
    assert result["matrix"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_cross_transition_verified(d2_system):
    result = d2_system.transition("E.fwd.xis0", "tauA.rev.xisd")
    assert result["verified"] is True
    assert "sum_r" in result["formula"]


def test_basis_tags():
    tags = leonardpairs.basis_tags()
    assert len(tags) == 24
    assert "E.fwd.xis0" in tags and "etaAs.rev.xid" in tags


def test_verify_report(d2_system):
    report = leonardpairs.verify(d2_system, suites=["axioms", "bases", "split", "d4"])
    assert report["schema_version"] == 1
    assert report["all_pass"] is True
    assert [s["name"] for s in report["suites"]] == ["axioms", "bases", "split", "d4"]


def test_full_verification_small():
    report = leonardpairs.verify(data_path("q_d1_a.json"))
    assert report["all_pass"] is True
    transitions = [s for s in report["suites"] if s["name"] == "transitions"]
    assert transitions and transitions[0]["failures"] == 0


def test_orbit_has_eight_members(d2_system):
    rows = d2_system.orbit_arrays()
    assert len(rows) == 8
    labels = [label for label, _ in rows]
    assert labels == ["1", "d", "D", "dD", "s", "ds", "Ds", "dDs"]
    identity_row = json.loads(rows[0][1])
    assert identity_row["theta"] == ["0", "1", "2"]
