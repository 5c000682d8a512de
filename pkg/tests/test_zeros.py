import math

import pytest

from mlradii.bounds import partial_reciprocal_sum, rayleigh_sums
from mlradii.errors import InvalidQuery, MaxScanExceeded, PrecisionLoss
from mlradii.oracles import reference_root
from mlradii.special import FunctionId, MLParams, reduced_value
from mlradii.zeros import check_interlacing, find_zeros, weierstrass_product

P221 = MLParams(2, 2, 1)
GRID = [MLParams(3, 0.75, 1), MLParams(3, 1.8, 0.5), MLParams(3, 2.25, 2), MLParams(6, 0.75, 1)]


def test_lambda_zeros_oracle():
    z = find_zeros(FunctionId.Lambda, P221, 3)
    assert list(z) == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], abs=1e-11)
    assert len(z) == 3 and z.id is FunctionId.Lambda


def test_omega_zeros_oracle():
    z = find_zeros("Omega", P221, 2)
    assert list(z) == pytest.approx([math.pi / 2, 1.5 * math.pi], abs=1e-11)


def test_psiprime_zeros_oracle():
    z = find_zeros(FunctionId.PsiPrime, P221, 3)
    assert list(z) == pytest.approx([2.028757838, 4.913180439, 7.978665712], abs=1e-9)
    for n, v in enumerate(z, start=1):
        assert v == pytest.approx(reference_root("tan_eq_neg", n), abs=1e-11)


def test_convex_series_zeros_oracle():
    for n, v in enumerate(find_zeros(FunctionId.VarPhi, P221, 3), start=1):
        assert v == pytest.approx(reference_root("rtanr_eq_1", n), abs=1e-11)
    for n, v in enumerate(find_zeros(FunctionId.VarPi, P221, 3), start=1):
        assert v == pytest.approx(reference_root("h_convex", n) ** 2, abs=1e-10)
    for n, v in enumerate(find_zeros(FunctionId.Sigma, P221, 3), start=1):
        assert v == pytest.approx(reference_root("tan_eq_neg", n) ** 2, abs=1e-10)


def test_zeros_strictly_increasing_and_bracketed():
    for p in GRID:
        for fid in FunctionId:
            if fid in (FunctionId.Phi, FunctionId.Psi, FunctionId.PsiSecond):
                continue
            seq = find_zeros(fid, p, 5)
            assert all(a < b for a, b in zip(seq, seq[1:]))
            for (lo, hi), z in zip(seq.brackets, seq):
                assert lo <= z <= hi and hi - lo <= max(1e-11, 8 * math.ulp(z))
                flo = reduced_value(fid, p, lo).value
                fhi = reduced_value(fid, p, hi).value
                assert flo == 0.0 or fhi == 0.0 or (flo < 0) != (fhi < 0)


@pytest.mark.parametrize("p", GRID)
def test_interlacing_on_grid(p):
    lam = find_zeros(FunctionId.Lambda, p, 10)
    xi = find_zeros(FunctionId.PsiPrime, p, 10)
    assert check_interlacing(lam, xi)


def test_interlacing_examples():
    assert check_interlacing([math.pi, 2 * math.pi], [2.02876, 4.91318])
    assert check_interlacing([1, 2], [0.5, 1.5])
    assert not check_interlacing([1, 2], [0.5, 2.5])


def test_tighter_tolerance_is_consistent():
    p = GRID[1]
    loose = find_zeros(FunctionId.Lambda, p, 5, tol=1e-8)
    tight = find_zeros(FunctionId.Lambda, p, 5, tol=1e-12)
    assert all(abs(a - b) < 1e-8 for a, b in zip(loose, tight))


def test_count_prefix_stable():
    p = GRID[0]
    a = find_zeros(FunctionId.Omega, p, 4)
    b = find_zeros(FunctionId.Omega, p, 7)
    assert list(a) == list(b[:4])


def test_basel_partial_sums():
    zeros = find_zeros(FunctionId.Lambda, P221, 12)
    sums = [partial_reciprocal_sum(zeros[:n], True) for n in range(1, 13)]
    assert all(a < b for a, b in zip(sums, sums[1:]))
    assert sums[-1] < 1 / 6 + 1e-8
    assert 1 / 6 - sums[-1] < 1 / (math.pi ** 2 * 12)


@pytest.mark.parametrize("p", GRID)
def test_partial_sums_below_s1(p):
    for fid in (FunctionId.Lambda, FunctionId.Sigma):
        # Sigma zeros grow like the squared Lambda zeros
        zeros = find_zeros(fid, p, 10 if fid is FunctionId.Lambda else 4)
        s1 = rayleigh_sums(fid, p, 1).S(1)
        even = fid is FunctionId.Lambda
        total = partial_reciprocal_sum(zeros, even)
        assert partial_reciprocal_sum(zeros[:2], even) < total < s1 + 1e-8


def test_errors():
    with pytest.raises(InvalidQuery):
        find_zeros(FunctionId.Phi, P221, 1)
    with pytest.raises(InvalidQuery):
        find_zeros(FunctionId.Lambda, P221, 0)
    with pytest.raises(MaxScanExceeded):
        find_zeros(FunctionId.Lambda, P221, 5, max_scan=10.0)
    # cancellation in exp-size terms eventually hides the sign changes
    with pytest.raises(PrecisionLoss):
        find_zeros(FunctionId.Lambda, P221, 40)


def test_weierstrass_product_small():
    zeros = [n * math.pi for n in range(1, 2001)]
    v = weierstrass_product(zeros, 1.0, 2.0)
    assert v == pytest.approx(math.sin(1.0), rel=1e-3)
    assert abs(weierstrass_product(zeros, math.pi, 2.0)) < 1e-12
