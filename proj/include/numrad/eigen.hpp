#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

/// Entrywise tolerance for accepting a matrix as Hermitian, relative to
/// (1 + max|entry|). Inputs are built by exact symmetrization, so this is
/// deliberately tight.
inline constexpr double hermiticity_tol = 1e-10;

/// Spectra at or below this floor are rejected by fractional_power.
inline constexpr double pd_floor = 1e-10;

struct EigenDecomposition {
    RealVector values;      // descending
    ComplexMatrix vectors;  // unitary; column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, sorted descending.
/// Cyclic Jacobi; converges when the off-diagonal Frobenius mass drops below
/// 1e-13 of the input Frobenius norm, capped at 30 sweeps (IterationLimit).
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m);

/// Singular values sorted descending, all >= 0. Computed as
/// sqrt(max(0, eig(Gram))) on the smaller of m*m^H and m^H*m.
RealVector singular_values(const ComplexMatrix& m);

/// a^t = U diag(lambda^t) U* for Hermitian a with min eigenvalue > pd_floor.
/// Any finite t is allowed, including negative exponents.
ComplexMatrix fractional_power(const ComplexMatrix& a, double t);

namespace detail {

/// In-place values-only Jacobi on an exactly Hermitian row-major buffer.
/// Unsorted output in w; no allocation. Callers own all validation.
void jacobi_hermitian(cplx* a, int n, double* w, cplx* vecs);

/// a^t from a precomputed decomposition (shared by fractional_power and the
/// power caches in the inequality checks).
ComplexMatrix power_from_eigen(const EigenDecomposition& eig, double t);

}  // namespace detail

}  // namespace numrad
