#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"
#include "numrad/random.hpp"

namespace numrad {

namespace {

constexpr double pi = std::numbers::pi;

/// theta -> N(cos(theta) H - sin(theta) K) with reusable workspace, so a
/// full grid sweep does not allocate.
class RotationObjective {
public:
    RotationObjective(const ComplexMatrix& a, const NormSpec& spec)
        : n_(a.rows()), spec_(spec), h_(hermitian_part(a)), k_(skew_part(a)),
          work_(static_cast<size_t>(n_) * n_), w_(n_), abs_(n_) {
        const double nh = eval_buffer(h_.entries());
        const double nk = eval_buffer(k_.entries());
        lipschitz_ = (nh + nk) * (1.0 + 1e-12);  // outward, so L stays an upper bound
    }

    double operator()(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const auto& he = h_.entries();
        const auto& ke = k_.entries();
        for (size_t i = 0; i < work_.size(); ++i) work_[i] = c * he[i] - s * ke[i];
        return gauge_of_workspace();
    }

    double lipschitz() const { return lipschitz_; }

private:
    double eval_buffer(const std::vector<cplx>& src) {
        work_ = src;
        return gauge_of_workspace();
    }

    double gauge_of_workspace() {
        detail::jacobi_hermitian(work_.data(), n_, w_.data(), nullptr);
        for (int i = 0; i < n_; ++i) abs_[i] = std::abs(w_[i]);
        std::sort(abs_.begin(), abs_.end(), std::greater<>());
        return gauge(spec_, abs_);
    }

    int n_;
    NormSpec spec_;
    ComplexMatrix h_, k_;
    std::vector<cplx> work_;
    RealVector w_, abs_;
    double lipschitz_ = 0.0;
};

struct BestPoint {
    double value = 0.0;
    double theta = 0.0;
};

}  // namespace

ComplexMatrix rotated_real_part(const ComplexMatrix& a, double theta) {
    if (!a.is_square()) throw NotSquare("rotated_real_part: matrix must be square");
    const ComplexMatrix h = hermitian_part(a);
    const ComplexMatrix k = skew_part(a);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.entries().size(); ++i)
        r.entries()[i] = c * h.entries()[i] - s * k.entries()[i];
    return r;
}

RadiusEstimate generalized_radius(const ComplexMatrix& a, const NormSpec& spec,
                                  const GridConfig& cfg) {
    if (!a.is_square()) throw NotSquare("generalized_radius: matrix must be square");
    if (!a.all_finite()) throw NonFinite("generalized_radius: non-finite entries");
    if (cfg.coarse_points < 8) throw ConfigError("grid: coarse_points must be >= 8");
    if (!(cfg.refine_tol > 0.0)) throw ConfigError("grid: refine_tol must be > 0");
    if (cfg.max_refine_iters < 1) throw ConfigError("grid: max_refine_iters must be >= 1");

    RotationObjective f(a, spec);
    const int m = cfg.coarse_points;
    const double step = pi / m;

    std::vector<double> vals(m);
    int best_idx = 0;
    for (int j = 0; j < m; ++j) {
        vals[j] = f(j * step);
        if (vals[j] > vals[best_idx]) best_idx = j;
    }
    BestPoint best{vals[best_idx], best_idx * step};

    // local maxima of the periodic sample sequence, best three by value
    std::vector<int> peaks;
    for (int j = 0; j < m; ++j) {
        const double left = vals[(j + m - 1) % m];
        const double right = vals[(j + 1) % m];
        if (vals[j] >= left && vals[j] >= right) peaks.push_back(j);
    }
    std::sort(peaks.begin(), peaks.end(), [&vals](int x, int y) {
        if (vals[x] != vals[y]) return vals[x] > vals[y];
        return x < y;
    });
    if (peaks.size() > 3) peaks.resize(3);

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double bracket_star = 2.0 * step;  // final bracket width around theta_star
    for (int idx : peaks) {
        double lo_b = idx * step - step;
        double hi_b = idx * step + step;
        double x1 = hi_b - gr * (hi_b - lo_b);
        double x2 = lo_b + gr * (hi_b - lo_b);
        double f1 = f(x1);
        double f2 = f(x2);
        BestPoint local = (f1 >= f2) ? BestPoint{f1, x1} : BestPoint{f2, x2};
        int iters = 0;
        while (hi_b - lo_b > cfg.refine_tol && iters < cfg.max_refine_iters) {
            if (f1 < f2) {
                lo_b = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo_b + gr * (hi_b - lo_b);
                f2 = f(x2);
                if (f2 > local.value) local = {f2, x2};
            } else {
                hi_b = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi_b - gr * (hi_b - lo_b);
                f1 = f(x1);
                if (f1 > local.value) local = {f1, x1};
            }
            ++iters;
        }
        const double width = hi_b - lo_b;
        if (local.value > best.value) {
            best = local;
            bracket_star = width;
        } else if (idx == best_idx) {
            bracket_star = width;
        }
    }

    const double L = f.lipschitz();
    RadiusEstimate est;
    est.lo = best.value;
    est.hi = best.value + 0.5 * L * bracket_star;
    est.lipschitz = L;
    double theta = std::fmod(best.theta, pi);
    if (theta < 0.0) theta += pi;
    est.theta_star = theta;
    if (!std::isfinite(est.hi) || !std::isfinite(est.lo))
        throw NonFinite("generalized_radius: overflow while certifying the enclosure");
    return est;
}

double frobenius_closed_form(const ComplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("frobenius_closed_form: matrix must be square");
    const ComplexMatrix h = hermitian_part(a);
    const ComplexMatrix k = skew_part(a);
    double h2 = 0.0, k2 = 0.0, hk = 0.0;
    for (size_t i = 0; i < h.entries().size(); ++i) {
        h2 += std::norm(h.entries()[i]);
        k2 += std::norm(k.entries()[i]);
        // Re<H,K> with the trace inner product; K Hermitian makes this the
        // real Frobenius inner product of the two buffers.
        hk += (h.entries()[i] * std::conj(k.entries()[i])).real();
    }
    const double mean = 0.5 * (h2 + k2);
    const double swing = std::hypot(0.5 * (h2 - k2), hk);
    return std::sqrt(mean + swing);
}

double classical_radius_lower_oracle(const ComplexMatrix& a, int samples, uint64_t seed) {
    if (!a.is_square()) throw NotSquare("classical_radius_lower_oracle: matrix must be square");
    if (samples < 1) throw ConfigError("classical_radius_lower_oracle: samples must be >= 1");
    const int n = a.rows();
    const ComplexMatrix h = hermitian_part(a);
    const ComplexMatrix k = skew_part(a);
    const double shift = h.frobenius_norm() + k.frobenius_norm() + 1.0;

    Rng rng(seed);
    std::vector<cplx> x(n), y(n);
    double best = 0.0;

    auto quad_form = [&](const std::vector<cplx>& v) {
        cplx mu = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx row = 0.0;
            for (int j = 0; j < n; ++j) row += a(i, j) * v[j];
            mu += std::conj(v[i]) * row;
        }
        return mu;
    };

    for (int s = 0; s < samples; ++s) {
        double nx2 = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = rng.complex_gaussian();
            nx2 += std::norm(x[i]);
        }
        if (nx2 == 0.0) x[0] = 1.0, nx2 = 1.0;
        const double inv = 1.0 / std::sqrt(nx2);
        for (int i = 0; i < n; ++i) x[i] *= inv;

        for (int step = 0; step < 50; ++step) {
            const cplx mu = quad_form(x);
            const double amu = std::abs(mu);
            if (amu > best) best = amu;
            const double phi = (amu == 0.0) ? 0.0 : std::arg(mu);
            // ascend on Re(e^{-i phi} a) = cos(phi) H + sin(phi) K
            const double c = std::cos(phi);
            const double si = std::sin(phi);
            double ny2 = 0.0;
            for (int i = 0; i < n; ++i) {
                cplx row = shift * x[i];
                for (int j = 0; j < n; ++j) row += (c * h(i, j) + si * k(i, j)) * x[j];
                y[i] = row;
                ny2 += std::norm(row);
            }
            if (ny2 == 0.0) break;
            const double invy = 1.0 / std::sqrt(ny2);
            for (int i = 0; i < n; ++i) x[i] = y[i] * invy;
        }
        const double amu = std::abs(quad_form(x));
        if (amu > best) best = amu;
    }
    return best;
}

}  // namespace numrad
