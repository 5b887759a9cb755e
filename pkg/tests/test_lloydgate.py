from __future__ import annotations

from fractions import Fraction

from crcodes import lloydgate as lg
from crcodes.spectra import IntersectionArray, PackingParameters


def test_intersection_matrix_shape():
    ia = IntersectionArray(23, 2, (23, 22, 21), (1, 2, 3))
    mat = lg.IntersectionMatrix(ia)
    mat.validate_row_sums()
    rows = mat.rows()
    assert rows[0] == [0, 23, 0, 0]
    assert rows[3] == [0, 0, 3, 20]


def test_eigenvalues_hamming():
    report = lg.eigenvalue_membership_test(IntersectionArray(7, 2, (7,), (1,)))
    assert report.passed
    assert [(j, lam) for j, lam, _ in report.eigenvalues] == [(0, 7), (4, -1)]


def test_eigenvalues_golay():
    report = lg.eigenvalue_membership_test(IntersectionArray(23, 2, (23, 22, 21), (1, 2, 3)))
    assert report.passed
    lambdas = {lam for _, lam, _ in report.eigenvalues}
    assert lambdas == {23, 7, -1, -9}


def test_eigenvalues_mutated_golay_fails():
    report = lg.eigenvalue_membership_test(IntersectionArray(23, 2, (23, 22, 21), (1, 2, 4)))
    assert not report.passed
    assert report.missing_degree > 0
    lax = lg.eigenvalue_membership_test(IntersectionArray(23, 2, (23, 22, 21), (1, 2, 4)),
                                        strict=False)
    assert not lax.passed  # even rho of rho+1 cannot be found


def test_lloyd_roots_bch():
    report = lg.lloyd_roots(31, 2, (1, 1, Fraction(1, 5), Fraction(1, 5)))
    assert report.passed and report.roots == (12, 16, 20)


def test_lloyd_roots_hamming_and_counterexample():
    assert lg.lloyd_roots(7, 2, (1, 1)).roots == (4,)
    assert not lg.lloyd_roots(6, 2, (1, 1)).passed  # no perfect code of length 6


def test_lloyd_roots_even_weight_boundary():
    # the even-weight code of even length has its only root at xi = n
    report = lg.lloyd_roots(4, 2, (1, Fraction(1, 4)))
    assert report.passed and report.roots == (4,)


def test_preparata_parameter_roots():
    for m in (2, 3):
        n = 2 ** (2 * m) - 1
        report = lg.lloyd_roots(n, 2, (1, 1, Fraction(3, n), Fraction(3, n)))
        root = 1 << m  # sqrt(n+1)
        assert report.passed
        assert report.roots == ((n + 1 - root) // 2, (n + 1) // 2, (n + 1 + root) // 2)


def test_cardinality_identity():
    assert lg.cardinality_identity(16, 7, 2, (1, 1))
    assert lg.cardinality_identity(2**21, 31, 2, (1, 1, Fraction(1, 5), Fraction(1, 5)))
    assert not lg.cardinality_identity(4096, 23, 2, (1, 1, 1, Fraction(1, 2)))


def test_rho1_bounds_paper_instances():
    assert lg.rho1_bounds(9, 7, 12).ok
    assert lg.rho1_bounds(3, 1, 3).ok
    assert lg.rho1_bounds(5, 3, 6).ok


def test_rho1_bounds_rejections():
    report = lg.rho1_bounds(9, 0, 12)
    assert not report.ok
    assert any(ch.name == "nonzero" and ch.passed is False for ch in report.checks)
    # (b+c)/gcd not a power of two
    assert not lg.rho1_bounds(4, 2, 7).ok


def test_rho1_correlation_immunity_tightness():
    # {5;3} at n=6 meets the bound with equality
    report = lg.rho1_bounds(5, 3, 6)
    ch = next(c for c in report.checks if c.name == "correlation_immunity")
    assert ch.passed


def test_design_existence_guard():
    good = IntersectionArray(23, 2, (23, 22, 21), (1, 2, 3))
    assert lg.design_existence_guard(good)
    too_big = IntersectionArray(23, 2, (24, 22, 21), (1, 2, 3))
    assert not lg.design_existence_guard(too_big)
    negative_a = IntersectionArray(5, 2, (5, 4), (3, 4))  # a_1 = 5-4-3 < 0
    assert not lg.design_existence_guard(negative_a)


def test_battery_runner():
    ia = IntersectionArray(7, 2, (7,), (1,))
    battery = lg.run_battery(ia, PackingParameters((Fraction(1), Fraction(1))), 16)
    assert battery.passed
    doc = battery.as_json_dict()
    assert doc["lloyd_roots"]["roots"] == [4]
    assert doc["cardinality_identity"] is True
