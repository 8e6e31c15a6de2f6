#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;
using RealVector = std::vector<double>;

/// Dense row-major complex matrix with value semantics. Library operations
/// are pure functions of their inputs; a matrix is never mutated once built,
/// so values may be shared freely across threads.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);
    /// Row-major construction helper for tests and fixtures.
    static ComplexMatrix from_rows(int rows, int cols, std::initializer_list<cplx> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& entries() const { return e_; }
    std::vector<cplx>& entries() { return e_; }

    cplx trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> e_;
};

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(cplx c, const ComplexMatrix& a);
/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);
/// Assembles [[a, b], [c, d]]; all four blocks must be n x n.
ComplexMatrix block_2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                        const ComplexMatrix& c, const ComplexMatrix& d);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return subtract(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }
inline ComplexMatrix operator*(cplx c, const ComplexMatrix& a) { return scale(c, a); }

/// Hermitian part (a + a*)/2 with exactly conjugate-symmetric storage:
/// h(i,j) == conj(h(j,i)) holds bitwise and the diagonal is exactly real.
ComplexMatrix hermitian_part(const ComplexMatrix& a);
/// K in the Cartesian decomposition a = H + iK; same exact-Hermitian storage.
ComplexMatrix skew_part(const ComplexMatrix& a);

/// max_{i,j} |a(i,j) - conj(a(j,i))|
double hermitian_deviation(const ComplexMatrix& a);

// Wire format: {"rows": n, "cols": m, "entries": [[re, im], ...]}, row-major.
std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const std::string& text);
ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const ComplexMatrix& a, const std::string& path);

}  // namespace numrad
