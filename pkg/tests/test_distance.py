import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specdist import (
    FamilySpec,
    check_additivity,
    closed_spectrum,
    crossover_index,
    distance_report,
    interlace_pattern,
    pattern_sigma,
    sigma,
    sigma_closed,
    sigma_closed_cz,
    sigma_closed_pz,
    sigma_closed_wz,
    sigma_direct,
)
from specdist.distance import EQUALITY_TOL
from specdist.errors import LengthMismatchError, OrderTooSmallError

SQRT3 = math.sqrt(3.0)

# frozen by hand arithmetic from the closed-form spectra
SIGMA_C4_Z4 = 4.0 - 2.0 * SQRT3
SIGMA_P4_Z4 = 4.0 * (math.cos(math.pi / 6) - math.cos(math.pi / 5) + math.cos(2 * math.pi / 5))
SIGMA_P5_Z5 = 4.0 * (
    (math.cos(math.pi / 8) - math.cos(math.pi / 6))
    + (math.cos(math.pi / 3) - math.cos(3 * math.pi / 8))
)


class TestSigma:
    def test_zero_on_identical(self):
        s = closed_spectrum(FamilySpec("w", 12))
        assert sigma(s, s) == 0.0

    def test_c4_z4(self):
        assert abs(sigma_direct("cz", 4) - SIGMA_C4_Z4) < 1e-12

    def test_p4_z4(self):
        assert abs(sigma_direct("pz", 4) - SIGMA_P4_Z4) < 1e-12

    def test_c6_z6(self):
        assert abs(sigma_direct("cz", 6) - 2.546914943989276) < 1e-12

    def test_sorts_inputs_itself(self):
        a = closed_spectrum(FamilySpec("p", 8))
        b = closed_spectrum(FamilySpec("z", 8))
        assert sigma(a[::-1], b) == pytest.approx(sigma(a, b), abs=1e-15)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            sigma([1.0, 0.0], [1.0])


class TestClosedSums:
    def test_pz_n4(self):
        assert abs(sigma_closed_pz(4) - SIGMA_P4_Z4) < 1e-12

    def test_pz_n5(self):
        assert abs(sigma_closed_pz(5) - SIGMA_P5_Z5) < 1e-12

    def test_pz_n7(self):
        assert abs(sigma_closed_pz(7) - sigma_direct("pz", 7)) < 1e-12

    def test_wz_n6(self):
        assert abs(sigma_closed_wz(6) - 0.5469149439892785) < 1e-12
        assert abs(sigma_closed_wz(6) - sigma_direct("wz", 6)) < 1e-12

    def test_wz_n8_n9(self):
        assert abs(sigma_closed_wz(8) - sigma_direct("wz", 8)) < 1e-12
        assert abs(sigma_closed_wz(9) - sigma_direct("wz", 9)) < 1e-12

    def test_cz_small(self):
        assert abs(sigma_closed_cz(2) - SIGMA_C4_Z4) < 1e-12
        expected = 4.0 - 4.0 * math.cos(math.pi / 10) + 4.0 * math.cos(3 * math.pi / 10)
        assert abs(sigma_closed_cz(3) - expected) < 1e-12

    def test_cz_n50(self):
        assert abs(sigma_closed_cz(50) - sigma_direct("cz", 100)) < 1e-10

    @pytest.mark.parametrize("pair,low", [("pz", 4), ("wz", 6), ("pw", 6)])
    def test_matches_direct_on_range(self, pair, low):
        for n in range(low, 400):
            assert abs(sigma_closed(pair, n) - sigma_direct(pair, n)) < 1e-9

    def test_cz_matches_direct_on_range(self):
        for n in range(4, 400, 2):
            assert abs(sigma_closed("cz", n) - sigma_direct("cz", n)) < 1e-9

    def test_compensated_agrees(self):
        for n in (101, 102, 103, 104):
            assert sigma_closed_pz(n, compensated=True) == pytest.approx(
                sigma_closed_pz(n), abs=1e-13
            )

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmallError):
            sigma_closed_pz(3)
        with pytest.raises(OrderTooSmallError):
            sigma_closed_wz(5)
        with pytest.raises(OrderTooSmallError):
            sigma_closed_cz(1)


class TestCrossover:
    def test_mod_0(self):
        assert crossover_index(8) == 2
        assert crossover_index(100) == 25

    def test_mod_2(self):
        assert crossover_index(6) == 1
        assert crossover_index(102) == 25

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            crossover_index(7)


class TestInterlacePattern:
    def test_pz_n5(self):
        report = interlace_pattern("pz", 5)
        # Z dominates index 1, P index 2, zeros meet in the middle; the
        # lower half mirrors with flipped dominance (bipartite symmetry)
        assert report.pattern == (
            "G2_above", "G1_above", "equal", "G2_above", "G1_above"
        )
        assert report.matches_proof

    def test_pz_n8(self):
        report = interlace_pattern("pz", 8)
        assert report.pattern[:4] == ("G2_above",) * 2 + ("G1_above",) * 2
        assert report.matches_proof

    def test_cz_order4(self):
        report = interlace_pattern("cz", 4)
        assert report.pattern == ("G1_above", "equal", "equal", "G2_above")
        assert report.matches_proof

    def test_cz_order6_alternates(self):
        report = interlace_pattern("cz", 6)
        assert report.pattern == ("G1_above", "G2_above") * 3
        assert report.matches_proof

    def test_wz_even_middle_equality(self):
        report = interlace_pattern("wz", 10)
        assert report.pattern[4] == "equal" and report.pattern[5] == "equal"
        assert report.matches_proof

    @pytest.mark.parametrize("pair,low", [("pz", 4), ("wz", 6)])
    def test_patterns_hold_up_to_500(self, pair, low):
        for n in range(low, 501):
            assert interlace_pattern(pair, n).matches_proof, (pair, n)

    def test_cz_patterns_hold(self):
        for n in range(4, 501, 2):
            assert interlace_pattern("cz", n).matches_proof, n

    def test_pw_has_no_asserted_pattern(self):
        with pytest.raises(ValueError):
            interlace_pattern("pw", 10)
        assert distance_report("pw", 10).matches_proof is None

    def test_equality_classification(self):
        report = interlace_pattern("pz", 5)
        for diff, label in zip(report.diffs, report.pattern):
            assert (label == "equal") == (abs(diff) < EQUALITY_TOL)

    def test_strict_inequalities_are_strict(self):
        for n in range(4, 200):
            report = interlace_pattern("pz", n)
            for diff, label in zip(report.diffs, report.pattern):
                if label != "equal":
                    assert abs(diff) > EQUALITY_TOL


class TestPatternSigma:
    @pytest.mark.parametrize("pair,low", [("pz", 4), ("wz", 6), ("cz", 4)])
    def test_halved_sum_reconstructs_sigma(self, pair, low):
        step = 2 if pair == "cz" else 1
        for n in range(low, 300, step):
            report = distance_report(pair, n)
            assert abs(pattern_sigma(report) - report.sigma) < 1e-9


class TestCzMultiplicity:
    def test_paired_cycle_eigenvalues(self):
        for n in range(4, 600, 2):
            c = closed_spectrum(FamilySpec("c", n))
            for k in range(2, n - 1, 2):
                assert abs(c[k - 1] - c[k]) < 1e-12


class TestAdditivity:
    def test_n6_decomposition(self):
        pw, pz, wz = sigma_direct("pw", 6), sigma_direct("pz", 6), sigma_direct("wz", 6)
        assert abs(pw - 1.7801674716505156) < 1e-12
        assert abs(pz - 1.233252527661237) < 1e-12
        assert abs(wz - 0.5469149439892785) < 1e-12
        assert check_additivity(6) < 1e-12

    def test_small_orders(self):
        assert check_additivity(7) < 1e-12

    def test_n100(self):
        assert check_additivity(100) < 1e-10

    def test_too_small(self):
        with pytest.raises(OrderTooSmallError):
            check_additivity(5)


class TestReportJson:
    def test_round_trip(self):
        report = distance_report("cz", 8)
        payload = json.loads(report.to_json())
        assert payload["pair"] == "cz" and payload["n"] == 8
        assert payload["sigma"] == report.sigma
        assert tuple(payload["diffs"]) == report.diffs
        assert tuple(payload["pattern"]) == report.pattern


VALID_FAMILIES = st.sampled_from(["p", "c", "z", "w"])


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(6, 80),
    fams=st.tuples(VALID_FAMILIES, VALID_FAMILIES, VALID_FAMILIES),
)
def test_metric_axioms(n, fams):
    a, b, c = (closed_spectrum(FamilySpec(f, n)) for f in fams)
    assert sigma(a, a) == 0.0
    assert sigma(a, b) == pytest.approx(sigma(b, a), abs=1e-12)
    assert sigma(a, c) <= sigma(a, b) + sigma(b, c) + 1e-12
