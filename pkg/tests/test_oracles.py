import math

import pytest

from mlradii.errors import InvalidQuery
from mlradii.oracles import CASES, closed_form_phi, oracle_cases, reference_root
from mlradii.special import FunctionId, MLParams
from mlradii.zeros import find_zeros


def test_closed_form_examples():
    assert closed_form_phi((1, 1, 1), 1.0) == pytest.approx(math.e, rel=1e-15)
    assert abs(closed_form_phi((2, 2, 1), -math.pi ** 2)) < 1e-15
    assert closed_form_phi((2, 3, 1), 0.0) == 0.5


def test_cases_normalized_at_origin():
    for case in oracle_cases():
        gb = math.gamma(case.case_id[1])
        assert case(0.0) * gb == pytest.approx(1.0, abs=1e-15)
    assert len(CASES) == 8


def test_small_z_stable_forms():
    for z in (1e-9, -1e-9, 1e-4):
        assert closed_form_phi((2, 4, 1), z) == pytest.approx(1 / 6 + z / 120 + z * z / 5040, rel=1e-12)
        assert closed_form_phi((2, 3, 1), z) == pytest.approx(0.5 + z / 24 + z * z / 720, rel=1e-12)


def test_unknown_case():
    with pytest.raises(InvalidQuery):
        closed_form_phi((3, 1, 1), 1.0)


def test_reference_root_examples():
    assert reference_root("sin_zero", 2) == 2 * math.pi
    assert reference_root("cos_zero", 1) == math.pi / 2
    assert reference_root("tan_eq_neg", 1) == pytest.approx(2.028757838, abs=1e-9)
    assert reference_root("rtanr_eq_1", 1) == pytest.approx(0.860333589, abs=1e-9)
    u = reference_root("h_convex", 1)
    assert abs((1 - u * u) * math.sin(u) + 3 * u * math.cos(u)) < 1e-12


def test_reference_root_errors():
    with pytest.raises(InvalidQuery):
        reference_root("bessel", 1)
    with pytest.raises(InvalidQuery):
        reference_root("sin_zero", 0)


def test_roots_are_ordered():
    for eq in ("tan_eq_neg", "rtanr_eq_1", "h_convex"):
        roots = [reference_root(eq, n) for n in range(1, 6)]
        assert all(a < b for a, b in zip(roots, roots[1:]))


def test_sin_zero_matches_series_zeros():
    zeros = find_zeros(FunctionId.Lambda, MLParams(2, 2, 1), 8)
    for n, z in enumerate(zeros, start=1):
        assert z == pytest.approx(reference_root("sin_zero", n), abs=1e-11)


def test_f_convex_root_near_117():
    assert reference_root("f_convex", 1) == pytest.approx(1.17, abs=0.01)
