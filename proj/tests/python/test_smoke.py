"""Smoke tests for the python bindings; golden values match the C++ suites."""

import pytest

detblow = pytest.importorskip("detblow")


def test_analyze_twisted_cubic():
    m = detblow.sample("linear", 2, n=3, seed=1)
    rep = detblow.analyze(m)
    assert rep["deg"] == 3
    assert rep["sigma"] == 2
    assert rep["genus"] == 0


def test_analyze_example1():
    m = detblow.sample("bminimal", 7, seed=1)
    rep = detblow.analyze(m)
    assert (rep["deg"], rep["genus"], rep["sigma"]) == (7, 5, 4)


def test_sampling_is_deterministic():
    a = detblow.sample("bminimal", 7, seed=5)
    b = detblow.sample("bminimal", 7, seed=5)
    assert a == b


def test_secant_loci_sigma4():
    m = detblow.sample("linear", 4, n=3, seed=1)
    loci = detblow.secant_loci(m)
    assert loci["lines"]["empty"] is True
    assert loci["secants"]["empty"] is False
    assert loci["secants"]["dim"] == 0
    assert loci["secants"]["degree"] == 20


def test_secant_witness_has_full_length():
    m = detblow.sample("linear", 4, n=3, seed=1)
    w = detblow.secant_witness(m, seed=1)
    assert w is not None
    assert w["length"] == 4


def test_blowup_example1():
    m = detblow.sample("bminimal", 7, seed=1)
    pres = detblow.blowup(m, mode="sigma")
    assert pres["n_embed"] == 10
    assert pres["counts"] == {"x_minors": 18, "bx_entries": 3, "b_minors": 0, "linear": 1}
    assert pres["analysis"]["degree"] == 16
    assert pres["analysis"]["sectional_genus"] == 9


def test_line_length_c87():
    m = detblow.sample("bminimal", 8, seed=1)
    # The 4-secant cut by the first-column entries is found via the witnessed
    # kernel in C++; here check a generic line misses the curve instead.
    out = detblow.line_length(m, [1, 0, 0, 0], [0, 1, 0, 0])
    assert out["contained"] is False
    assert out["length"] >= 0


def test_profile_and_residual():
    p = detblow.bminimal_profile(7)
    assert (p["d"], p["k"], p["genus"]) == (3, 1, 5)
    link = detblow.residual(4, 4, 7, 5)
    assert (link["deg_c_prime"], link["g_c_prime"]) == (9, 9)
    assert detblow.genus_minimal(10) == 11


def test_en_betti_table():
    assert detblow.en_betti_table(3, 5) == [[1, 4, 5], [2, 5, 4]]


def test_errors_are_typed():
    with pytest.raises(detblow.DetblowError):
        detblow.residual(2, 2, 4, 0)
