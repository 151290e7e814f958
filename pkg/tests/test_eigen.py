import math

import numpy as np
import pytest

from cozero import (
    ConvergenceError,
    build_full_graph,
    build_quotient,
    build_weighted_laplacian,
    characteristic_polynomial,
    connected_component_count,
    eigenvalues_symmetric,
    laplacian_matrix,
    merge_spectrum,
    polynomial_roots_real,
)
from cozero.eigen import poly_eval_int, spectrum_from_values


def bareiss_determinant(matrix):
    """Fraction-free exact determinant; independent oracle for charpolys."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for swap in range(k + 1, n):
                if a[swap][k] != 0:
                    a[k], a[swap] = a[swap], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def as_entry_pairs(multiset):
    return [(e.value, e.multiplicity) for e in multiset.entries]


class TestEigenvaluesSymmetric:
    def test_zero_matrix(self):
        s = eigenvalues_symmetric(np.zeros((2, 2)))
        assert as_entry_pairs(s) == [(0.0, 2)]

    def test_known_two_by_two(self):
        s = eigenvalues_symmetric([[1.0, -1.0], [-1.0, 1.0]])
        assert as_entry_pairs(s) == [(2.0, 1), (0.0, 1)]

    def test_quotient_form_of_fifteen(self):
        root8 = math.sqrt(8.0)
        s = eigenvalues_symmetric([[2.0, -root8], [-root8, 4.0]])
        values = s.values()
        assert abs(values[0] - 6.0) < 1e-8
        assert abs(values[1]) < 1e-8

    def test_single_entry(self):
        s = eigenvalues_symmetric([[5.0]])
        assert as_entry_pairs(s) == [(5.0, 1)]

    def test_diagonal_matrix(self):
        s = eigenvalues_symmetric(np.diag([3.0, 1.0, 1.0, -2.0]))
        assert as_entry_pairs(s) == [(3.0, 1), (1.0, 2), (-2.0, 1)]

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="asymmetric"):
            eigenvalues_symmetric([[0.0, 1.0], [0.5, 0.0]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            eigenvalues_symmetric(np.zeros((2, 3)))

    def test_rejects_non_positive_tol(self):
        with pytest.raises(ValueError):
            eigenvalues_symmetric(np.eye(2), tol=0.0)

    def test_sweep_cap_raises_with_residual(self):
        with pytest.raises(ConvergenceError) as err:
            eigenvalues_symmetric([[1.0, -1.0], [-1.0, 1.0]], max_sweeps=0)
        assert err.value.residual > 0

    def test_trace_identity_random(self):
        rng = np.random.default_rng(11)
        for m in (3, 10, 40):
            a = rng.standard_normal((m, m))
            a = a + a.T
            s = eigenvalues_symmetric(a)
            total = float(np.sum(s.values()))
            assert abs(total - np.trace(a)) <= 1e-8 * np.linalg.norm(a)

    def test_matches_lapack_on_random(self):
        rng = np.random.default_rng(23)
        for m in (4, 17, 60):
            a = rng.standard_normal((m, m))
            a = a + a.T
            ours = eigenvalues_symmetric(a).values()
            reference = np.linalg.eigvalsh(a)[::-1]
            assert float(np.max(np.abs(ours - reference))) < 1e-9 * max(
                1.0, float(np.linalg.norm(a))
            )

    def test_permutation_invariance(self):
        rng = np.random.default_rng(5)
        m = 25
        a = rng.standard_normal((m, m))
        a = a + a.T
        perm = rng.permutation(m)
        permuted = a[np.ix_(perm, perm)]
        base = eigenvalues_symmetric(a).values()
        shuffled = eigenvalues_symmetric(permuted).values()
        assert float(np.max(np.abs(base - shuffled))) < 1e-8

    def test_jacobi_and_tridiagonal_paths_agree(self):
        rng = np.random.default_rng(7)
        for m in (2, 5, 30, 120):
            a = rng.standard_normal((m, m))
            a = a + a.T
            jac = eigenvalues_symmetric(a, method="jacobi").values()
            tri = eigenvalues_symmetric(a, method="tridiagonal").values()
            assert float(np.max(np.abs(jac - tri))) < 1e-9 * max(
                1.0, float(np.linalg.norm(a))
            )

    def test_paths_agree_on_graph_laplacian(self):
        lap = laplacian_matrix(build_full_graph(60))
        jac = eigenvalues_symmetric(lap, method="jacobi").values()
        tri = eigenvalues_symmetric(lap, method="tridiagonal").values()
        assert float(np.max(np.abs(jac - tri))) < 1e-8

    def test_rejects_unknown_method(self):
        with pytest.raises(ValueError):
            eigenvalues_symmetric(np.eye(2), method="magic")

    def test_empty_matrix(self):
        s = eigenvalues_symmetric(np.zeros((0, 0)))
        assert s.entries == ()


class TestLaplacianHygiene:
    @pytest.mark.parametrize("n,components", [(8, 3), (12, 1), (30, 1), (9, 2)])
    def test_psd_and_zero_multiplicity(self, n, components):
        graph = build_full_graph(n)
        s = eigenvalues_symmetric(laplacian_matrix(graph))
        assert s.min_value() >= -1e-8
        assert s.zero_multiplicity() == components
        assert connected_component_count(graph) == components


class TestMergeSpectrum:
    def test_groups_nearby_values(self):
        s = spectrum_from_values([2.0, 2.0 + 1e-9, 1.0, 0.0])
        assert as_entry_pairs(s) == [(2.0, 2), (1.0, 1), (0.0, 1)]

    def test_exact_pin_wins(self):
        s = merge_spectrum([(4.0, 2, True), (4.0 - 3e-7, 1, False)])
        assert s.entries[0].value == 4.0
        assert s.entries[0].multiplicity == 3
        assert s.entries[0].exact

    def test_distinct_exact_values_never_merge(self):
        s = merge_spectrum([(1.0, 1, True), (1.0 - 1e-9, 1, True)], merge_tol=1e-6)
        assert len(s.entries) == 2

    def test_near_integer_snaps(self):
        s = spectrum_from_values([2.9999999])
        assert s.entries[0].value == 3.0
        assert s.entries[0].exact

    def test_far_from_integer_stays_numeric(self):
        s = spectrum_from_values([2.5])
        assert not s.entries[0].exact

    def test_zero_multiplicity_dropped(self):
        s = merge_spectrum([(1.0, 0, True), (2.0, 1, True)])
        assert as_entry_pairs(s) == [(2.0, 1)]


class TestCharacteristicPolynomial:
    def test_one_by_one(self):
        assert characteristic_polynomial([[7]]) == [1, -7]

    def test_quotient_of_twelve(self):
        wl = build_weighted_laplacian(build_quotient(12))
        assert characteristic_polynomial(wl.entries) == [1, -11, 34, -28, 0]

    def test_zero_matrix_gives_pure_power(self):
        assert characteristic_polynomial(np.zeros((4, 4), dtype=int)) == [1, 0, 0, 0, 0]

    def test_dimension_cap(self):
        with pytest.raises(ValueError, match="cap"):
            characteristic_polynomial(np.eye(65, dtype=int))

    def test_rejects_non_integer_entries(self):
        with pytest.raises(ValueError, match="non-integer"):
            characteristic_polynomial([[0.5, 0.0], [0.0, 0.5]])

    def test_matches_exact_determinant_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            m = int(rng.integers(1, 7))
            a = rng.integers(-9, 10, size=(m, m))
            coeffs = characteristic_polynomial(a)
            for x in (-2, -1, 0, 1, 2, 3):
                shifted = x * np.eye(m, dtype=int) - a
                assert poly_eval_int(coeffs, x) == bareiss_determinant(shifted)


class TestPolynomialRootsReal:
    def test_simple_quadratic(self):
        assert polynomial_roots_real([1, -3, 2]) == [2.0, 1.0]

    def test_quartic_from_the_twelve_quotient(self):
        roots = polynomial_roots_real([1, -11, 34, -28, 0])
        assert len(roots) == 4
        assert roots[-1] == 0.0
        assert all(r > 0 for r in roots[:-1])
        assert abs(sum(roots) - 11.0) < 1e-9
        # cross-check against the symmetric-form eigensolve
        wl = build_weighted_laplacian(build_quotient(12))
        jac = eigenvalues_symmetric(wl.symmetric_form).values()
        assert float(np.max(np.abs(np.array(roots) - jac))) < 1e-8

    def test_pure_power(self):
        assert polynomial_roots_real([1, 0, 0, 0, 0, 0]) == [0.0] * 5

    def test_repeated_roots(self):
        # (x - 1)^2 (x - 3)
        assert polynomial_roots_real([1, -5, 7, -3]) == [3.0, 1.0, 1.0]

    def test_high_multiplicity(self):
        # (x - 2)^3 x^2
        coeffs = [1, -6, 12, -8, 0, 0]
        assert polynomial_roots_real(coeffs) == [2.0, 2.0, 2.0, 0.0, 0.0]

    def test_rational_roots_are_exact(self):
        # (2x - 1)(x - 4) = 2x^2 - 9x + 4
        assert polynomial_roots_real([2, -9, 4]) == [4.0, 0.5]

    def test_rejects_complex_roots(self):
        with pytest.raises(ArithmeticError, match="non-real"):
            polynomial_roots_real([1, 0, 1])

    def test_rejects_non_positive_tol(self):
        with pytest.raises(ValueError):
            polynomial_roots_real([1, -1], tol=0.0)

    def test_constant_and_empty(self):
        assert polynomial_roots_real([5]) == []
        assert polynomial_roots_real([0, 0]) == []

    def test_scaling_invariance(self):
        a = polynomial_roots_real([1, -11, 34, -28, 0])
        b = polynomial_roots_real([3, -33, 102, -84, 0])
        assert a == b

    def test_matches_quotient_eigensolve_across_moduli(self):
        # exact charpoly route versus Jacobi route for every composite n <= 500
        from cozero import is_prime

        for n in range(4, 501):
            if is_prime(n):
                continue
            wl = build_weighted_laplacian(build_quotient(n))
            roots = np.array(polynomial_roots_real(characteristic_polynomial(wl.entries)))
            jac = eigenvalues_symmetric(wl.symmetric_form).values()
            assert float(np.max(np.abs(roots - jac))) < 1e-6, f"n={n}"
