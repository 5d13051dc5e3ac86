from fractions import Fraction

import pytest

from pzero.lingrp import FamilyId
from pzero.spectrum import (
    SpectrumError,
    bound_checks,
    crosscheck_gqfpf,
    d_p,
    enumerate_spectrum,
    greedy_filtration,
    hurwitz_profile,
    lift_central,
    orbit_formula_genus,
    quotient_consistency,
)


def orbit_genus(s, sp, sp1, sq):
    """2g - 2 = |S|(|S_P| - |S_P^(1)||S_Q|) / (|S_Q|(|S| - |S_P|)), written out again."""
    return 1 + Fraction(s * (sp - sp1 * sq), 2 * sq * (s - sp))


@pytest.mark.parametrize("name,n,want", [
    ("PSL2", 4, [6]),
    ("PSL2", 8, [7, 28]),
    ("SZ", 8, [14, 196, 196]),
    ("PSU3", 4, [6, 66, 456, 456]),
])
def test_known_spectra(name, n, want):
    assert enumerate_spectrum(FamilyId(name, n)).genera() == want


def test_small_genera_are_filtered():
    sp = enumerate_spectrum(FamilyId("PSL2", 8))
    assert [e.genus for e in sp.filtered] == [0]


def test_spectrum_entries_agree_with_orbit_formula():
    # PSL(2,8): |S| = 504, |S_P| = 56, |S_P^(1)| = 8
    for e in enumerate_spectrum(FamilyId("PSL2", 8)).entries:
        assert orbit_genus(504, 56, 8, e.sq_order) == e.genus
    # Sz(8): |S_P| = 448, |S_P^(1)| = 64
    for e in enumerate_spectrum(FamilyId("SZ", 8)).entries:
        assert orbit_genus(29120, 448, 64, e.sq_order) == e.genus
    assert orbit_formula_genus(504, 56, 8, 3) == 7


@pytest.mark.parametrize("name,n", [("PSL2", 16), ("PSL2", 32), ("SZ", 32), ("PSU3", 8), ("PSU3", 16), ("SU3", 8)])
def test_every_entry_crosschecks(name, n):
    for e in enumerate_spectrum(FamilyId(name, n)).entries:
        assert crosscheck_gqfpf(e)


def test_witness_tags():
    sz = enumerate_spectrum(FamilyId("SZ", 8)).entries
    assert [(e.case_tag, e.t, e.genus) for e in sz if e.witness == "DLS(III)"] == [("SZ-B", 1, 14)]
    psu = enumerate_spectrum(FamilyId("PSU3", 4)).entries
    assert [(e.t, e.genus) for e in psu if e.witness == "Hermitian(II)"] == [(1, 6)]


@pytest.mark.parametrize("n", [8, 32])
def test_su3_second_case_is_curve_iv(n):
    e = [x for x in enumerate_spectrum(FamilyId("SU3", n)).entries if x.case_tag == "SU3-second" and x.t == n + 1]
    assert len(e) == 1
    assert 2 * e[0].genus == (n**3 + 1) * (n * n - 2) + 2
    assert e[0].witness == "curve(IV)"


def test_su3_needs_nontrivial_centre():
    with pytest.raises(SpectrumError):
        enumerate_spectrum(FamilyId("SU3", 4))


def test_central_lift():
    # C3 over the PSU3(8) quotient, fixing the 513 points
    assert lift_central(0, 8) == 1 + (3 * -2 + 2 * 513) // 2


def test_d_p_identity_and_filtration():
    e = next(x for x in enumerate_spectrum(FamilyId("PSU3", 4)).entries if x.genus == 6)
    assert d_p(e) == 2 * 6 - 2 + 64 + 960
    prof = hurwitz_profile(e)
    wild = prof.orbits[0]
    assert wild.size == 65
    assert wild.different == d_p(e)
    assert greedy_filtration(6, 2, 5 + 1) == (6, 2, 1)
    assert greedy_filtration(6, 2, 3) == ()


def test_csv_row_shape():
    row = enumerate_spectrum(FamilyId("SZ", 8)).entries[0].to_row()
    assert list(row) == ["family", "n", "case", "t", "genus", "s_order", "sq_order", "witness", "flags"]


def test_bounds_trigger_and_routes():
    r = bound_checks(62400, 6)
    assert r.checks["trigger_gt_24g2"] and r.route == "classification"
    assert bound_checks(29120, 14).checks["trigger_gt_24g2"]
    r = bound_checks(1152, 4, fixes_point=True)
    assert r.checks["trigger_gt_24g2"] and r.route == "fixed_point"
    assert bound_checks(100, 6).route == "below_threshold"
    assert bound_checks(2000, 6, solvable=True).route == "contradiction_solvable"
    r = bound_checks(62400, 6, h_order=27, s_order=62400)  # 27 > 4g + 2 = 26
    assert r.checks["stichtenoth_H_le_4g+2"] is False
    assert r.checks["S_gt_8g_gt_6(g-1)"]
    with pytest.raises(SpectrumError):
        bound_checks(10, 1)


def test_quotient_consistency_n4():
    rep = quotient_consistency(4)
    assert rep.matches
    rows = {r.h: r for r in rep.rows}
    assert rows[1].genus == 456 and rows[5].genus == 66 and rows[13].genus == 6
    assert not rows[65].admissible
