import pytest

import coarsek

TRIANGLE = {
    "kind": "finite",
    "vertices": ["a", "b", "c"],
    "edges": [
        {"id": "ab", "source": "a", "target": "b"},
        {"id": "bc", "source": "b", "target": "c"},
        {"id": "ca", "source": "c", "target": "a"},
    ],
}
Z_LINE = {"kind": "banded_z", "edges_per_cell": 1}


def test_homology_of_triangle():
    r = coarsek.homology(TRIANGLE)
    assert r["status"] == "pass"
    assert r["certificates"]["H0"] == "Z"
    assert r["certificates"]["H1_rank"] == 1


def test_homology_of_line():
    r = coarsek.homology(Z_LINE)
    assert r["certificates"]["H1_BM"] == "Z"


def test_phi0_signature():
    r = coarsek.phi0(TRIANGLE, {"degree": 0, "coeffs": {"a": 2, "b": -1}})
    assert r["status"] == "pass"
    assert r["certificates"]["k0_signature"] == 1


def test_phi0_boundary_witness():
    r = coarsek.phi0(TRIANGLE, {"degree": 1, "coeffs": {"ab": 1}})
    assert r["status"] == "pass"
    assert r["certificates"]["is_boundary"] is True
    assert r["certificates"]["k0_signature"] == 0


def test_phi1_cycle():
    r = coarsek.phi1(TRIANGLE, {"degree": 1, "coeffs": {"ab": 1, "bc": 1, "ca": 1}})
    assert r["status"] == "pass"


def test_phi1_rejects_non_cycles():
    with pytest.raises(coarsek.NotACycleError, match="vertex 0"):
        coarsek.phi1(TRIANGLE, {"degree": 1, "coeffs": {"ab": 1}})
    assert issubclass(coarsek.NotACycleError, coarsek.PreconditionError)


def test_bad_input():
    with pytest.raises(coarsek.InputError, match="graph/kind"):
        coarsek.homology({"kind": "torus"})
    with pytest.raises(ValueError):
        coarsek.homology("{not json")


@pytest.mark.parametrize("k", range(-3, 4))
def test_index_on_line(k):
    assert coarsek.phi1_on_z(k) == -k
    assert coarsek.phi1_on_z(k, window=32) == -k


def test_shift_index():
    assert coarsek.shift_index() == -1


def test_scenarios():
    assert set(coarsek.scenario_names()) == {"example_5_1", "example_5_2", "random"}
    for name in coarsek.scenario_names():
        assert coarsek.scenario(name)["status"] == "pass"


def test_acceptance_lines():
    results = coarsek.run_acceptance(1)
    assert [r["number"] for r in results] == list(range(1, 11))
    for r in results:
        assert r["line"].startswith(f"criterion {r['number']} [PRIMARY] ")
