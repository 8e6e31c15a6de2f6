#include "numrad/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {

double Rng::gaussian() {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::complex_gaussian() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::string to_string(Ensemble e) {
    switch (e) {
        case Ensemble::ginibre: return "ginibre";
        case Ensemble::hermitian: return "hermitian";
        case Ensemble::positive_definite: return "positive_definite";
        case Ensemble::unitary: return "unitary";
        case Ensemble::nilpotent_upper: return "nilpotent_upper";
    }
    return "?";
}

Ensemble ensemble_from_string(const std::string& s) {
    if (s == "ginibre") return Ensemble::ginibre;
    if (s == "hermitian") return Ensemble::hermitian;
    if (s == "positive_definite") return Ensemble::positive_definite;
    if (s == "unitary") return Ensemble::unitary;
    if (s == "nilpotent_upper") return Ensemble::nilpotent_upper;
    throw ConfigError("unknown ensemble: " + s);
}

namespace {

ComplexMatrix ginibre(Rng& rng, int n, double scale) {
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = scale * rng.complex_gaussian();
    return g;
}

/// Householder QR of a Ginibre sample; the phases of the R diagonal are
/// absorbed into Q so that R > 0 on the diagonal (Haar-distributed Q).
ComplexMatrix haar_unitary(ComplexMatrix a) {
    const int n = a.rows();
    ComplexMatrix acc = ComplexMatrix::identity(n);  // product of reflectors
    std::vector<cplx> v(n);
    for (int k = 0; k < n; ++k) {
        double nx2 = 0.0;
        for (int i = k; i < n; ++i) nx2 += std::norm(a(i, k));
        const double nx = std::sqrt(nx2);
        if (nx == 0.0) continue;
        const cplx akk = a(k, k);
        const cplx phase = (akk == cplx(0.0, 0.0)) ? cplx(1.0, 0.0) : akk / std::abs(akk);
        double v2 = 0.0;
        for (int i = k; i < n; ++i) v[i] = a(i, k);
        v[k] += phase * nx;
        for (int i = k; i < n; ++i) v2 += std::norm(v[i]);
        if (v2 == 0.0) continue;
        const double beta = 2.0 / v2;
        auto reflect = [&](ComplexMatrix& m) {
            for (int j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (int i = k; i < n; ++i) s += std::conj(v[i]) * m(i, j);
                s *= beta;
                for (int i = k; i < n; ++i) m(i, j) -= s * v[i];
            }
        };
        reflect(a);
        reflect(acc);
    }
    // acc is now H_{n-1}...H_0, so Q = acc*; fix the column phases from R = a.
    ComplexMatrix q = adjoint(acc);
    for (int j = 0; j < n; ++j) {
        const cplx rjj = a(j, j);
        const double m = std::abs(rjj);
        const cplx d = (m == 0.0) ? cplx(1.0, 0.0) : rjj / m;
        for (int i = 0; i < n; ++i) q(i, j) *= d;
    }
    return q;
}

}  // namespace

ComplexMatrix random_matrix(const RandomSpec& spec) {
    if (spec.dim < 1) throw ConfigError("random_matrix: dim must be >= 1");
    if (!(spec.scale > 0.0)) throw ConfigError("random_matrix: scale must be > 0");
    Rng rng(spec.seed);
    const int n = spec.dim;
    switch (spec.ensemble) {
        case Ensemble::ginibre:
            return ginibre(rng, n, spec.scale);
        case Ensemble::hermitian:
            return hermitian_part(ginibre(rng, n, spec.scale));
        case Ensemble::positive_definite: {
            const ComplexMatrix g = ginibre(rng, n, spec.scale);
            ComplexMatrix m = hermitian_part(multiply(g, adjoint(g)));
            for (int i = 0; i < n; ++i) m(i, i) += pd_shift;
            return m;
        }
        case Ensemble::unitary:
            return haar_unitary(ginibre(rng, n, spec.scale));
        case Ensemble::nilpotent_upper: {
            ComplexMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) m(i, j) = spec.scale * rng.complex_gaussian();
            return m;
        }
    }
    throw ConfigError("random_matrix: unknown ensemble");
}

}  // namespace numrad
