#include "numrad/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
    if (!m.is_square()) throw NotSquare(std::string(who) + ": matrix must be square");
}

void require_finite(const ComplexMatrix& m, const char* who) {
    if (!m.all_finite()) throw NonFinite(std::string(who) + ": non-finite entries");
}

void require_hermitian(const ComplexMatrix& m, const char* who) {
    if (hermitian_deviation(m) > hermiticity_tol * (1.0 + m.max_abs()))
        throw NotHermitian(std::string(who) + ": matrix is not Hermitian within tolerance");
}

double offdiag_norm(const cplx* a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a[static_cast<size_t>(i) * n + j]);
    return std::sqrt(s);
}

}  // namespace

namespace detail {

void jacobi_hermitian(cplx* a, int n, double* w, cplx* vecs) {
    auto at = [a, n](int i, int j) -> cplx& { return a[static_cast<size_t>(i) * n + j]; };
    if (vecs) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) vecs[static_cast<size_t>(i) * n + j] = (i == j) ? 1.0 : 0.0;
    }
    if (n == 1) {
        w[0] = at(0, 0).real();
        return;
    }
    double fro = 0.0;
    for (int i = 0; i < n * n; ++i) fro += std::norm(a[i]);
    fro = std::sqrt(fro);
    if (fro == 0.0) {
        for (int i = 0; i < n; ++i) w[i] = 0.0;
        return;
    }
    const double off_tol = 1e-13 * fro;
    // Pivots this small cannot push the off-diagonal mass above off_tol.
    const double skip_tol = off_tol / (8.0 * n);
    constexpr int max_sweeps = 30;

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a, n) <= off_tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx g = at(p, q);
                const double r = std::abs(g);
                if (r <= skip_tol) continue;
                const cplx u = g / r;
                const cplx ub = std::conj(u);
                const double alpha = at(p, p).real();
                const double beta = at(q, q).real();
                const double tau = (beta - alpha) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {  // columns p, q
                    const cplx tp = at(i, p), tq = at(i, q);
                    at(i, p) = c * tp - s * ub * tq;
                    at(i, q) = s * tp + c * ub * tq;
                }
                for (int j = 0; j < n; ++j) {  // rows p, q
                    const cplx tp = at(p, j), tq = at(q, j);
                    at(p, j) = c * tp - s * u * tq;
                    at(q, j) = s * tp + c * u * tq;
                }
                at(p, q) = at(q, p) = 0.0;
                at(p, p) = cplx(at(p, p).real(), 0.0);
                at(q, q) = cplx(at(q, q).real(), 0.0);
                if (vecs) {
                    for (int i = 0; i < n; ++i) {
                        cplx* vrow = vecs + static_cast<size_t>(i) * n;
                        const cplx tp = vrow[p], tq = vrow[q];
                        vrow[p] = c * tp - s * ub * tq;
                        vrow[q] = s * tp + c * ub * tq;
                    }
                }
            }
        }
    }
    if (!converged && offdiag_norm(a, n) > off_tol)
        throw IterationLimit("hermitian eigensolver: no convergence within 30 sweeps");
    for (int i = 0; i < n; ++i) w[i] = at(i, i).real();
}

ComplexMatrix power_from_eigen(const EigenDecomposition& eig, double t) {
    const int n = eig.vectors.rows();
    RealVector powered(n);
    for (int k = 0; k < n; ++k) powered[k] = std::pow(eig.values[k], t);
    ComplexMatrix b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < n; ++k)
                s += eig.vectors(i, k) * powered[k] * std::conj(eig.vectors(j, k));
            b(i, j) = s;
        }
    }
    return hermitian_part(b);
}

}  // namespace detail

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    require_square(m, "hermitian_eigenvalues");
    require_finite(m, "hermitian_eigenvalues");
    require_hermitian(m, "hermitian_eigenvalues");
    const int n = m.rows();
    std::vector<cplx> a(m.entries());
    RealVector w(n);
    detail::jacobi_hermitian(a.data(), n, w.data(), nullptr);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m) {
    require_square(m, "hermitian_eigendecomposition");
    require_finite(m, "hermitian_eigendecomposition");
    require_hermitian(m, "hermitian_eigendecomposition");
    const int n = m.rows();
    std::vector<cplx> a(m.entries());
    std::vector<cplx> v(static_cast<size_t>(n) * n);
    RealVector w(n);
    detail::jacobi_hermitian(a.data(), n, w.data(), v.data());

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&w](int x, int y) { return w[x] > w[y]; });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = w[order[k]];
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v[static_cast<size_t>(i) * n + order[k]];
    }
    return out;
}

RealVector singular_values(const ComplexMatrix& m) {
    require_finite(m, "singular_values");
    const ComplexMatrix gram = (m.rows() <= m.cols())
                                   ? hermitian_part(multiply(m, adjoint(m)))
                                   : hermitian_part(multiply(adjoint(m), m));
    RealVector w = hermitian_eigenvalues(gram);
    for (double& x : w) x = std::sqrt(std::max(0.0, x));
    return w;  // sqrt preserves the descending order
}

ComplexMatrix fractional_power(const ComplexMatrix& a, double t) {
    require_square(a, "fractional_power");
    require_finite(a, "fractional_power");
    require_hermitian(a, "fractional_power");
    if (!std::isfinite(t)) throw NonFinite("fractional_power: exponent must be finite");
    const EigenDecomposition eig = hermitian_eigendecomposition(a);
    if (eig.values.back() <= pd_floor)
        throw NotPositiveDefinite("fractional_power: min eigenvalue " +
                                  std::to_string(eig.values.back()) + " is at or below the floor");
    return detail::power_from_eigen(eig, t);
}

}  // namespace numrad
