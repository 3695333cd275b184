import numpy as np
import pytest

from absfef.errors import DensityValidationError, MatrixShapeError
from absfef.linalg import (DensityMatrix, eig_hermitian, hs_inner, kron,
                           partial_trace, validate_density)
from helpers import ginibre_density


def test_kron_matches_numpy():
    a = np.arange(4).reshape(2, 2)
    b = np.eye(2) * 1j
    assert np.array_equal(kron(a, b), np.kron(a, b))


def test_hs_inner_conjugate_symmetric_and_real_on_hermitian():
    rng = np.random.default_rng(0)
    a = ginibre_density(rng, 4)
    b = ginibre_density(rng, 4)
    assert hs_inner(a, b) == pytest.approx(np.conj(hs_inner(b, a)), abs=1e-14)
    assert abs(hs_inner(a, b).imag) < 1e-14


def test_hs_inner_shape_mismatch():
    with pytest.raises(MatrixShapeError):
        hs_inner(np.eye(2), np.eye(3))


def test_eig_hermitian_descending_and_reconstruction():
    rng = np.random.default_rng(1)
    for _ in range(20):
        h = ginibre_density(rng, 9)
        spec = eig_hermitian(h)
        assert np.all(np.diff(spec.eigenvalues) <= 1e-14)
        rec = (spec.eigenvectors * spec.eigenvalues) @ spec.eigenvectors.conj().T
        assert np.max(np.abs(rec - h)) < 1e-9
        assert spec.lambda_max == pytest.approx(spec.eigenvalues[0])
        assert spec.purity == pytest.approx(np.real(np.trace(h @ h)), abs=1e-12)


def test_eig_hermitian_rejects_non_hermitian():
    with pytest.raises(DensityValidationError) as exc:
        eig_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))
    assert exc.value.invariant == "hermiticity"


def test_partial_trace_traces_and_linearity():
    rng = np.random.default_rng(2)
    a = ginibre_density(rng, 8)
    b = ginibre_density(rng, 8)
    for drop in range(3):
        ra = partial_trace(a, [2, 2, 2], drop)
        assert np.trace(ra) == pytest.approx(1.0, abs=1e-12)
        mix = partial_trace(0.3 * a + 0.7 * b, [2, 2, 2], drop)
        sep = 0.3 * ra + 0.7 * partial_trace(b, [2, 2, 2], drop)
        assert np.max(np.abs(mix - sep)) < 1e-12


def test_partial_trace_product_state():
    rng = np.random.default_rng(3)
    a = ginibre_density(rng, 2)
    b = ginibre_density(rng, 3)
    assert np.max(np.abs(partial_trace(np.kron(a, b), [2, 3], 1) - a)) < 1e-12
    assert np.max(np.abs(partial_trace(np.kron(a, b), [2, 3], 0) - b)) < 1e-12


def test_partial_trace_shape_errors():
    with pytest.raises(MatrixShapeError):
        partial_trace(np.eye(6) / 6, [2, 2], 0)
    with pytest.raises(MatrixShapeError):
        partial_trace(np.eye(4) / 4, [2, 2], 2)


def test_validate_density_accepts_and_freezes():
    rho = validate_density(np.eye(4) / 4, 2, 2)
    assert isinstance(rho, DensityMatrix)
    assert rho.dim == 4 and rho.is_square_bipartition
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 9.0
    assert rho.purity() == pytest.approx(0.25)


@pytest.mark.parametrize("m, invariant", [
    (np.array([[0.5, 0.1], [0.3, 0.5]]), "hermiticity"),
    (np.eye(2), "trace"),
    (np.diag([1.5, -0.5]), "positivity"),
])
def test_validate_density_names_invariant(m, invariant):
    with pytest.raises(DensityValidationError) as exc:
        validate_density(m.astype(complex), 1, 2)
    assert exc.value.invariant == invariant
    assert exc.value.magnitude > 0


def test_validate_density_shape():
    with pytest.raises(MatrixShapeError):
        validate_density(np.eye(4) / 4, 2, 3)
