"""Smoke tests for the Python surface of the twistknot extension."""

import pytest

import twistknot as tk


def test_color_one_invariants():
    fig8 = tk.colored_homfly_twist(1, -1)
    assert str(fig8) == "a^2 - q^2 + 1 - q^-2 + a^-2"
    trefoil = tk.colored_homfly_twist(1, 1)
    assert str(trefoil) == "-a^4 + a^2*q^2 + a^2*q^-2"
    assert tk.colored_homfly_twist(4, 0).is_zero() is False
    assert str(tk.colored_homfly_twist(4, 0)) == "1"


def test_terms_are_decimal_strings():
    poly = tk.colored_homfly_twist(2, 2)
    terms = poly.terms()
    assert len(terms) == len(poly)
    for ea, eq, c in terms:
        assert isinstance(ea, int) and isinstance(eq, int)
        int(c)  # decimal string


def test_single_sum_corollaries_match():
    for n in range(0, 4):
        assert tk.colored_homfly_trefoil(n) == tk.colored_homfly_twist(n, 1)
        assert tk.colored_homfly_fig8(n) == tk.colored_homfly_twist(n, -1)


def test_mirror_symmetry_of_figure_eight():
    for n in range(0, 4):
        v = tk.colored_homfly_twist(n, -1)
        assert v.mirrored() == v


def test_colored_jones():
    assert str(tk.colored_jones(1, 1, 2)) == "-q^8 + q^6 + q^2"
    assert str(tk.colored_jones(1, -1, 2)) == "q^4 - q^2 + 1 - q^-2 + q^-4"


def test_parse_round_trip():
    p = tk.colored_homfly_twist(2, -1)
    assert tk.Poly2.parse(str(p)) == p


def test_run_suite():
    rep = tk.run_suite("twist-eigenvalue-identity", max_n=6)
    assert rep["passed"] is True
    assert rep["checked"] == 7
    assert "twist-eigenvalue-identity" in tk.suite_names()
    with pytest.raises(tk.UnknownSuiteError):
        tk.run_suite("no-such-suite")


def test_jones_convention():
    rep = tk.resolve_jones_convention()
    assert rep["resolved"] is True
    assert rep["convention"] == "t=q^2"
    assert tk.kauffman_jones("figure_eight") == "t^2 - t + 1 - t^-1 + t^-2"


def test_qsymbol_view():
    assert str(tk.qbinomial(2, 1)) == "q + q^-1"
    assert tk.theta(2, 5).is_zero()
    assert not tk.sigma(1, 1).is_zero()
    assert tk.t_p(2, 1) == tk.t_p(2, 1)
