#include "numrad/checks.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"
#include "numrad/random.hpp"

namespace numrad {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Enclosure rad(const ComplexMatrix& m, const NormSpec& spec, const GridConfig& g) {
    const RadiusEstimate r = generalized_radius(m, spec, g);
    return {r.lo, r.hi};
}

Enclosure normp(double p, const ComplexMatrix& m) {
    return Enclosure::point(matrix_norm(NormSpec::schatten(p), m));
}

double scale_of(const Enclosure& lhs, const Enclosure& rhs) {
    return std::max({lhs.hi, rhs.hi, 1.0});
}

/// Claim lhs <= rhs. Pass when consistent within tolerance; fail only on a
/// certain violation; uncertain-and-wide becomes inconclusive (retried at 4x
/// density by the wrapper below).
CheckResult finish_inequality(std::string id, Enclosure lhs, Enclosure rhs,
                              const TolerancePolicy& tp,
                              std::map<std::string, std::string> params) {
    CheckResult r;
    r.check_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs.lo - lhs.hi;
    r.params = std::move(params);
    const double scale = scale_of(lhs, rhs);
    const double tol = tp.rel_for(r.check_id, false) * scale;
    if (lhs.lo > rhs.hi + tol)
        r.verdict = Verdict::fail;
    else if (lhs.hi > rhs.hi + tol && std::max(lhs.width(), rhs.width()) > 1e-6 * scale)
        r.verdict = Verdict::inconclusive;
    else
        r.verdict = Verdict::pass;
    return r;
}

/// Two-sided claim lhs = rhs within combined enclosure radii + tolerance.
CheckResult finish_equality(std::string id, Enclosure lhs, Enclosure rhs,
                            const TolerancePolicy& tp,
                            std::map<std::string, std::string> params) {
    CheckResult r;
    r.check_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs.lo - lhs.hi;
    r.params = std::move(params);
    const double scale = scale_of(lhs, rhs);
    const double tol = tp.rel_for(r.check_id, true) * scale;
    const double gap = std::max(lhs.lo - rhs.hi, rhs.lo - lhs.hi);
    if (gap > tol)
        r.verdict = (std::max(lhs.width(), rhs.width()) > 1e-6 * scale) ? Verdict::inconclusive
                                                                        : Verdict::fail;
    else
        r.verdict = Verdict::pass;
    return r;
}

/// Never report a discretization artifact: an inconclusive first pass reruns
/// once with 4x coarse grid density before the verdict stands.
CheckResult with_densify_retry(const std::function<CheckResult(const GridConfig&)>& make,
                               const GridConfig& grid) {
    CheckResult first = make(grid);
    if (first.verdict != Verdict::inconclusive) return first;
    GridConfig dense = grid;
    dense.coarse_points *= 4;
    CheckResult second = make(dense);
    second.params["densified"] = "4x";
    return second;
}

/// Eigendecompose a positive definite matrix once and serve all its powers.
class PowerCache {
public:
    explicit PowerCache(const ComplexMatrix& a) : eig_(hermitian_eigendecomposition(a)) {
        if (eig_.values.back() <= pd_floor)
            throw NotPositiveDefinite("power cache: matrix is not positive definite");
    }

    const ComplexMatrix& at(double t) {
        auto it = memo_.find(t);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(t, detail::power_from_eigen(eig_, t)).first->second;
    }

private:
    EigenDecomposition eig_;
    std::map<double, ComplexMatrix> memo_;
};

ComplexMatrix heinz_mean_arg(PowerCache& ap, const ComplexMatrix& x, double t, Sign sign) {
    const ComplexMatrix lhs = multiply(multiply(ap.at(t), x), ap.at(1.0 - t));
    const ComplexMatrix rhs = multiply(multiply(ap.at(1.0 - t), x), ap.at(t));
    return sign == Sign::plus ? add(lhs, rhs) : subtract(lhs, rhs);
}

/// Memoizing evaluator for the scalar curves t -> w_N(argument(t)).
class Curve {
public:
    Curve(std::function<ComplexMatrix(double)> argument, NormSpec spec, GridConfig grid)
        : arg_(std::move(argument)), spec_(spec), grid_(grid) {}

    Enclosure operator()(double t) {
        auto it = memo_.find(t);
        if (it != memo_.end()) return it->second;
        const Enclosure e = rad(arg_(t), spec_, grid_);
        memo_.emplace(t, e);
        return e;
    }

private:
    std::function<ComplexMatrix(double)> arg_;
    NormSpec spec_;
    GridConfig grid_;
    std::map<double, Enclosure> memo_;
};

enum class MinCondition { none, at_half, at_zero, zero_at_half };

ConvexityReport run_convexity(const std::string& function_id, Curve& f,
                              std::span<const double> t_grid, const std::string& check_id,
                              const TolerancePolicy& tp, MinCondition min_cond,
                              int random_pairs, uint64_t pair_seed) {
    if (t_grid.size() < 2) throw ConfigError("convexity check: t_grid needs at least two points");
    ConvexityReport rep;
    rep.function_id = function_id;
    rep.t_grid.assign(t_grid.begin(), t_grid.end());
    rep.min_slack = std::numeric_limits<double>::infinity();

    for (double t : t_grid) rep.values.push_back(f(t));

    const double rel = tp.rel_for(check_id, false);
    auto test_pair = [&](double t, double s) {
        const Enclosure lhs = f(0.5 * (t + s));
        const Enclosure rhs = 0.5 * (f(t) + f(s));
        const double scale = scale_of(lhs, rhs);
        const double tol = rel * scale;
        const double slack = rhs.lo - lhs.hi;
        if (slack < rep.min_slack) {
            rep.min_slack = slack;
            rep.worst_lhs = lhs;
            rep.worst_rhs = rhs;
        }
        if (lhs.lo > rhs.hi + tol)
            rep.midpoint_violations.push_back({t, s, lhs.lo - rhs.hi - tol});
        else if (lhs.hi > rhs.hi + tol && std::max(lhs.width(), rhs.width()) > 1e-6 * scale)
            rep.uncertain = true;
    };

    for (size_t i = 0; i < t_grid.size(); ++i)
        for (size_t j = i + 1; j < t_grid.size(); ++j) test_pair(t_grid[i], t_grid[j]);

    if (random_pairs > 0) {
        Rng rng(pair_seed);
        const double t0 = rep.t_grid.front();
        const double t1 = rep.t_grid.back();
        for (int r = 0; r < random_pairs; ++r) {
            const double t = t0 + (t1 - t0) * rng.uniform01();
            const double s = t0 + (t1 - t0) * rng.uniform01();
            test_pair(t, s);
        }
    }

    if (min_cond == MinCondition::at_half || min_cond == MinCondition::at_zero) {
        const double tmin = (min_cond == MinCondition::at_half) ? 0.5 : 0.0;
        const Enclosure vmin = f(tmin);
        for (double t : t_grid) {
            const Enclosure vt = f(t);
            const double scale = scale_of(vmin, vt);
            if (vmin.lo > vt.hi + rel * scale) {
                rep.min_location_ok = false;
            } else if (vmin.hi > vt.hi + rel * scale &&
                       std::max(vmin.width(), vt.width()) > 1e-6 * scale) {
                rep.uncertain = true;
            }
        }
    } else if (min_cond == MinCondition::zero_at_half) {
        rep.min_location_ok = f(0.5).hi <= 1e-10;
    }

    if (rep.values.size() >= 1 && !std::isfinite(rep.min_slack)) rep.min_slack = 0.0;
    return rep;
}

CheckResult fold_report(const ConvexityReport& rep, const std::string& check_id,
                        std::map<std::string, std::string> params) {
    CheckResult r;
    r.check_id = check_id;
    r.lhs = rep.worst_lhs;
    r.rhs = rep.worst_rhs;
    r.slack = rep.min_slack;
    r.params = std::move(params);
    r.params["violations"] = std::to_string(rep.midpoint_violations.size());
    r.params["min_location_ok"] = rep.min_location_ok ? "true" : "false";
    if (!rep.midpoint_violations.empty() || !rep.min_location_ok)
        r.verdict = Verdict::fail;
    else if (rep.uncertain)
        r.verdict = Verdict::inconclusive;
    else
        r.verdict = Verdict::pass;
    return r;
}

/// Convexity with the same densify-on-uncertain retry as the scalar checks.
ConvexityReport convexity_with_retry(const std::function<ConvexityReport(const GridConfig&)>& make,
                                     const GridConfig& grid) {
    ConvexityReport rep = make(grid);
    if (!rep.uncertain || !rep.midpoint_violations.empty()) return rep;
    GridConfig dense = grid;
    dense.coarse_points *= 4;
    return make(dense);
}

void require_unit_interval(double t, const char* who) {
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError(std::string(who) + ": t must lie in [0, 1]");
}

}  // namespace

CheckResult ConvexityReport::fold(const std::string& check_id,
                                  std::map<std::string, std::string> params) const {
    return fold_report(*this, check_id, std::move(params));
}

CheckResult check_lemma21_holder(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const NormSpec& spec, double t, const GridConfig& grid,
                                 const TolerancePolicy& tol) {
    require_unit_interval(t, "lem2.1-eq3");
    return with_densify_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            const Enclosure lhs = rad(multiply(multiply(ap.at(t), x), ap.at(t)), spec, g);
            const Enclosure waxa = rad(multiply(multiply(a, x), a), spec, g);
            const Enclosure wx = rad(x, spec, g);
            const Enclosure rhs = mul(pow_nonneg(waxa, t), pow_nonneg(wx, 1.0 - t));
            return finish_inequality("lem2.1-eq3", lhs, rhs, tol, {{"t", fmt(t)}});
        },
        grid);
}

std::array<CheckResult, 2> check_lemma21_heinz(const ComplexMatrix& a, const ComplexMatrix& x,
                                               const NormSpec& spec, double t,
                                               const GridConfig& grid,
                                               const TolerancePolicy& tol) {
    require_unit_interval(t, "lem2.1-eq4");
    auto lower = with_densify_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            const ComplexMatrix half = multiply(multiply(ap.at(0.5), x), ap.at(0.5));
            const Enclosure lhs = 2.0 * rad(half, spec, g);
            const Enclosure rhs = rad(heinz_mean_arg(ap, x, t, Sign::plus), spec, g);
            return finish_inequality("lem2.1-eq4-lower", lhs, rhs, tol, {{"t", fmt(t)}});
        },
        grid);
    auto upper = with_densify_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            const Enclosure lhs = rad(heinz_mean_arg(ap, x, t, Sign::plus), spec, g);
            const Enclosure rhs = rad(add(multiply(a, x), multiply(x, a)), spec, g);
            return finish_inequality("lem2.1-eq4-upper", lhs, rhs, tol, {{"t", fmt(t)}});
        },
        grid);
    return {lower, upper};
}

CheckResult check_axa_half_bound(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const NormSpec& spec, const GridConfig& grid,
                                 const TolerancePolicy& tol) {
    return with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = rad(multiply(multiply(a, x), a), spec, g);
            const ComplexMatrix a2 = multiply(a, a);
            const Enclosure rhs = 0.5 * rad(add(multiply(a2, x), multiply(x, a2)), spec, g);
            return finish_inequality("eq5", lhs, rhs, tol, {});
        },
        grid);
}

CheckResult check_two_sided_axb(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& x, const NormSpec& spec,
                                const GridConfig& grid, const TolerancePolicy& tol) {
    return with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = 2.0 * rad(multiply(multiply(a, x), b), spec, g);
            const ComplexMatrix a2 = multiply(a, a);
            const ComplexMatrix b2 = multiply(b, b);
            const Enclosure rhs = rad(add(multiply(a2, x), multiply(x, b2)), spec, g);
            return finish_inequality("sec4-two-sided", lhs, rhs, tol, {});
        },
        grid);
}

namespace {

/// Shared right-hand side of the two block-matrix bounds:
/// w_p^p(a) + w_p^p(d) + 2^{1-p} (|b|_p + |c|_p)^p.
Enclosure block_bound_core(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                           const ComplexMatrix& d, double p, const GridConfig& g) {
    const NormSpec sp = NormSpec::schatten(p);
    const Enclosure wa = pow_nonneg(rad(a, sp, g), p);
    const Enclosure wd = pow_nonneg(rad(d, sp, g), p);
    const Enclosure off = pow_nonneg(normp(p, b) + normp(p, c), p);
    return wa + wd + std::pow(2.0, 1.0 - p) * off;
}

}  // namespace

CheckResult check_thm12_p_ge_2(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const ComplexMatrix& d, double p,
                               const GridConfig& grid, const TolerancePolicy& tol) {
    if (!(p >= 2.0) || std::isinf(p)) throw ConfigError("thm1.2-eq1: p must lie in [2, inf)");
    return with_densify_retry(
        [&](const GridConfig& g) {
            const ComplexMatrix t = block_2x2(a, b, c, d);
            const Enclosure lhs = pow_nonneg(rad(t, NormSpec::schatten(p), g), p);
            const Enclosure rhs = std::pow(2.0, p - 2.0) * block_bound_core(a, b, c, d, p, g);
            return finish_inequality("thm1.2-eq1", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);
}

CheckResult check_thm12_p_le_2(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const ComplexMatrix& d, double p,
                               const GridConfig& grid, const TolerancePolicy& tol) {
    if (!(p >= 1.0 && p <= 2.0)) throw ConfigError("thm1.2-eq2: p must lie in [1, 2]");
    return with_densify_retry(
        [&](const GridConfig& g) {
            const ComplexMatrix t = block_2x2(a, b, c, d);
            const Enclosure lhs = pow_nonneg(rad(t, NormSpec::schatten(p), g), p);
            const Enclosure rhs = block_bound_core(a, b, c, d, p, g);
            return finish_inequality("thm1.2-eq2", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);
}

CheckResult check_lemma31_partition(const ComplexMatrix& t11, const ComplexMatrix& t12,
                                    const ComplexMatrix& t21, const ComplexMatrix& t22, double p,
                                    const TolerancePolicy& tol) {
    if (!(p >= 2.0) || std::isinf(p)) throw ConfigError("lem3.1: p must lie in [2, inf)");
    const ComplexMatrix t = block_2x2(t11, t12, t21, t22);
    const Enclosure lhs = pow_nonneg(normp(p, t), p);
    const Enclosure sum = pow_nonneg(normp(p, t11), p) + pow_nonneg(normp(p, t12), p) +
                          pow_nonneg(normp(p, t21), p) + pow_nonneg(normp(p, t22), p);
    const Enclosure rhs = std::pow(2.0, p - 2.0) * sum;
    return finish_inequality("lem3.1", lhs, rhs, tol, {{"p", fmt(p)}});
}

CheckResult check_cor41(const ComplexMatrix& a, const ComplexMatrix& x, const NormSpec& spec,
                        double t, Sign sign, const GridConfig& grid, const TolerancePolicy& tol) {
    const bool inside = (t >= 0.0 && t <= 1.0);
    const std::string id = (sign == Sign::plus) ? "cor4.1-plus" : "cor4.1-minus";
    return with_densify_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            const Enclosure heinz = rad(heinz_mean_arg(ap, x, t, sign), spec, g);
            const ComplexMatrix ax = multiply(a, x);
            const ComplexMatrix xa = multiply(x, a);
            const Enclosure ends =
                rad(sign == Sign::plus ? add(ax, xa) : subtract(ax, xa), spec, g);
            std::map<std::string, std::string> params{
                {"t", fmt(t)},
                {"sign", sign == Sign::plus ? "+" : "-"},
                {"regime", inside ? "t in [0,1]" : "t outside [0,1]"}};
            return inside ? finish_inequality(id, heinz, ends, tol, std::move(params))
                          : finish_inequality(id, ends, heinz, tol, std::move(params));
        },
        grid);
}

CheckResult check_cor42_young(const ComplexMatrix& a, const ComplexMatrix& x,
                              const NormSpec& spec, double t, const GridConfig& grid,
                              const TolerancePolicy& tol) {
    const bool inside = (t >= 0.0 && t <= 1.0);
    const std::string id = inside ? "cor4.2-in" : "cor4.2-out";
    return with_densify_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            const Enclosure left =
                rad(multiply(multiply(ap.at(t), x), ap.at(1.0 - t)), spec, g);
            const Enclosure right =
                t * rad(multiply(a, x), spec, g) + (1.0 - t) * rad(multiply(x, a), spec, g);
            std::map<std::string, std::string> params{{"t", fmt(t)}};
            return inside ? finish_inequality(id, left, right, tol, std::move(params))
                          : finish_inequality(id, right, left, tol, std::move(params));
        },
        grid);
}

namespace {

ConvexityReport convexity_of(const std::string& function_id, const std::string& check_id,
                             const ComplexMatrix& a, const ComplexMatrix& x, const NormSpec& spec,
                             std::span<const double> t_grid, const GridConfig& grid,
                             const TolerancePolicy& tol, MinCondition min_cond, int random_pairs,
                             uint64_t pair_seed) {
    return convexity_with_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            std::function<ComplexMatrix(double)> arg;
            if (function_id == "f") {
                arg = [&ap, &x](double t) { return heinz_mean_arg(ap, x, t, Sign::plus); };
            } else if (function_id == "g") {
                arg = [&ap, &x](double t) {
                    return multiply(multiply(ap.at(t), x), ap.at(1.0 - t));
                };
            } else if (function_id == "h") {
                arg = [&ap, &x](double t) { return multiply(multiply(ap.at(t), x), ap.at(t)); };
            } else if (function_id == "k") {
                arg = [&ap, &x](double t) {
                    return add(multiply(multiply(ap.at(t), x), ap.at(1.0 - t)),
                               multiply(multiply(ap.at(-t), x), ap.at(1.0 + t)));
                };
            } else {  // "ell"
                arg = [&ap, &x](double t) { return heinz_mean_arg(ap, x, t, Sign::minus); };
            }
            Curve f(std::move(arg), spec, g);
            return run_convexity(function_id, f, t_grid, check_id, tol, min_cond, random_pairs,
                                 pair_seed);
        },
        grid);
}

}  // namespace

ConvexityReport check_f_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                  const NormSpec& spec, std::span<const double> t_grid,
                                  const GridConfig& grid, const TolerancePolicy& tol,
                                  int random_pairs, uint64_t pair_seed) {
    return convexity_of("f", "thm1.1-f", a, x, spec, t_grid, grid, tol, MinCondition::at_half,
                        random_pairs, pair_seed);
}

ConvexityReport check_g_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                  const NormSpec& spec, std::span<const double> t_grid,
                                  const GridConfig& grid, const TolerancePolicy& tol,
                                  int random_pairs, uint64_t pair_seed) {
    return convexity_of("g", "thm1.1-g", a, x, spec, t_grid, grid, tol, MinCondition::none,
                        random_pairs, pair_seed);
}

ConvexityReport check_h_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                  const NormSpec& spec, std::span<const double> t_grid,
                                  const GridConfig& grid, const TolerancePolicy& tol,
                                  int random_pairs, uint64_t pair_seed) {
    return convexity_of("h", "sec4-h-convex", a, x, spec, t_grid, grid, tol, MinCondition::none,
                        random_pairs, pair_seed);
}

ConvexityReport check_cor43_k(const ComplexMatrix& a, const ComplexMatrix& x,
                              const NormSpec& spec, std::span<const double> t_grid,
                              const GridConfig& grid, const TolerancePolicy& tol,
                              int random_pairs, uint64_t pair_seed) {
    return convexity_of("k", "cor4.3", a, x, spec, t_grid, grid, tol, MinCondition::at_zero,
                        random_pairs, pair_seed);
}

ConvexityReport check_ell_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                    const NormSpec& spec, std::span<const double> t_grid,
                                    const GridConfig& grid, const TolerancePolicy& tol,
                                    int random_pairs, uint64_t pair_seed) {
    return convexity_of("ell", "sec4-ell", a, x, spec, t_grid, grid, tol,
                        MinCondition::zero_at_half, random_pairs, pair_seed);
}

CheckResult check_h_logconvexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const NormSpec& spec, std::span<const double> t_grid,
                                 const GridConfig& grid, const TolerancePolicy& tol) {
    if (t_grid.size() < 2) throw ConfigError("sec4-h-logconvex: t_grid needs at least two points");
    return with_densify_retry(
        [&](const GridConfig& g) {
            PowerCache ap(a);
            Curve h([&ap, &x](double t) { return multiply(multiply(ap.at(t), x), ap.at(t)); },
                    spec, g);
            // h(0) = w_N(x) and h(1) = w_N(axa); both must be positive for the
            // logarithm to make sense.
            if (!(h(0.0).lo > 0.0) || !(h(1.0).lo > 0.0)) {
                CheckResult r;
                r.check_id = "sec4-h-logconvex";
                r.lhs = Enclosure::exact(0.0);
                r.rhs = Enclosure::exact(0.0);
                r.slack = 0.0;
                r.verdict = Verdict::pass;
                r.params["skipped"] = "degenerate (w_N(x) or w_N(axa) vanishes)";
                return r;
            }
            CheckResult worst;
            worst.check_id = "sec4-h-logconvex";
            worst.slack = std::numeric_limits<double>::infinity();
            worst.verdict = Verdict::pass;
            const double rel = tol.rel_for("sec4-h-logconvex", false);
            for (size_t i = 0; i < t_grid.size(); ++i) {
                for (size_t j = i + 1; j < t_grid.size(); ++j) {
                    const double t = t_grid[i], s = t_grid[j];
                    const Enclosure lhs = pow_nonneg(h(0.5 * (t + s)), 2.0);
                    const Enclosure rhs = mul(h(t), h(s));
                    const double scale = scale_of(lhs, rhs);
                    const double tl = rel * scale;
                    const double slack = rhs.lo - lhs.hi;
                    if (slack < worst.slack) {
                        worst.slack = slack;
                        worst.lhs = lhs;
                        worst.rhs = rhs;
                        worst.params["t"] = fmt(t);
                        worst.params["s"] = fmt(s);
                    }
                    if (lhs.lo > rhs.hi + tl)
                        worst.verdict = Verdict::fail;
                    else if (worst.verdict == Verdict::pass && lhs.hi > rhs.hi + tl &&
                             std::max(lhs.width(), rhs.width()) > 1e-6 * scale)
                        worst.verdict = Verdict::inconclusive;
                }
            }
            return worst;
        },
        grid);
}

std::array<CheckResult, 3> check_cor44(const ComplexMatrix& a, const ComplexMatrix& d,
                                       const ComplexMatrix& b, double p, const GridConfig& grid,
                                       const TolerancePolicy& tol) {
    if (!(p >= 2.0) || std::isinf(p)) throw ConfigError("cor4.4: p must lie in [2, inf)");
    const int n = a.rows();
    const ComplexMatrix zero(n, n);
    const NormSpec sp = NormSpec::schatten(p);
    const double c = std::pow(2.0, 1.0 - 2.0 / p);

    auto diag = with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = rad(block_2x2(a, zero, zero, d), sp, g);
            const Enclosure rhs =
                c * pow_nonneg(pow_nonneg(rad(a, sp, g), p) + pow_nonneg(rad(d, sp, g), p), 1.0 / p);
            return finish_inequality("cor4.4-diag", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);

    auto herm_eq = with_densify_retry(
        [&](const GridConfig& g) {
            const ComplexMatrix ah = hermitian_part(a);
            const ComplexMatrix dh = hermitian_part(d);
            const Enclosure lhs = rad(block_2x2(ah, zero, zero, dh), sp, g);
            const Enclosure rhs = pow_nonneg(
                pow_nonneg(rad(ah, sp, g), p) + pow_nonneg(rad(dh, sp, g), p), 1.0 / p);
            return finish_equality("cor4.4-diag-hermitian-eq", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);

    auto row = with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = rad(block_2x2(a, b, zero, zero), sp, g);
            const Enclosure inner = pow_nonneg(rad(a, sp, g), p) +
                                    std::pow(2.0, 1.0 - p) * pow_nonneg(normp(p, b), p);
            const Enclosure rhs = c * pow_nonneg(inner, 1.0 / p);
            return finish_inequality("cor4.4-row", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);

    return {diag, herm_eq, row};
}

std::array<CheckResult, 3> check_cor45(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                       const GridConfig& grid, const TolerancePolicy& tol) {
    if (!(p >= 2.0) || std::isinf(p)) throw ConfigError("cor4.5: p must lie in [2, inf)");
    const int n = a.rows();
    const ComplexMatrix zero(n, n);
    const NormSpec sp = NormSpec::schatten(p);

    auto offdiag = with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = rad(block_2x2(zero, b, b, zero), sp, g);
            const Enclosure rhs = std::pow(2.0, 1.0 / p) * rad(b, sp, g);
            return finish_equality("cor4.5-offdiag-eq", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);

    auto symmetric = with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = rad(block_2x2(a, b, b, a), sp, g);
            const Enclosure inner =
                pow_nonneg(rad(add(a, b), sp, g), p) + pow_nonneg(rad(subtract(a, b), sp, g), p);
            const Enclosure rhs = std::pow(2.0, 1.0 - 2.0 / p) * pow_nonneg(inner, 1.0 / p);
            return finish_inequality("cor4.5-symmetric", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);

    auto herm_eq = with_densify_retry(
        [&](const GridConfig& g) {
            const ComplexMatrix ah = hermitian_part(a);
            const ComplexMatrix bh = hermitian_part(b);
            const Enclosure lhs = rad(block_2x2(ah, bh, bh, ah), sp, g);
            const Enclosure inner = pow_nonneg(rad(add(ah, bh), sp, g), p) +
                                    pow_nonneg(rad(subtract(ah, bh), sp, g), p);
            const Enclosure rhs = pow_nonneg(inner, 1.0 / p);
            return finish_equality("cor4.5-symmetric-hermitian-eq", lhs, rhs, tol,
                                   {{"p", fmt(p)}});
        },
        grid);

    return {offdiag, symmetric, herm_eq};
}

std::vector<CheckResult> check_clarkson_lower(const ComplexMatrix& a, const ComplexMatrix& b,
                                              const ComplexMatrix& c, const ComplexMatrix& d,
                                              double p, const GridConfig& grid,
                                              const TolerancePolicy& tol) {
    if (!(p >= 1.0) || std::isinf(p)) throw ConfigError("rem1: p must be finite and >= 1");
    std::vector<CheckResult> out;
    const ComplexMatrix t = block_2x2(a, b, c, d);
    const Enclosure tp = pow_nonneg(normp(p, t), p);
    if (p >= 2.0) {
        out.push_back(with_densify_retry(
            [&](const GridConfig& g) {
                const Enclosure lhs = std::pow(2.0, 1.0 - p) * tp;
                const Enclosure rhs = std::pow(2.0, p - 2.0) * block_bound_core(a, b, c, d, p, g);
                return finish_inequality("rem1-lower-eq1", lhs, rhs, tol, {{"p", fmt(p)}});
            },
            grid));
    }
    if (p <= 2.0) {
        out.push_back(with_densify_retry(
            [&](const GridConfig& g) {
                const Enclosure lhs = 0.5 * tp;
                const Enclosure rhs = block_bound_core(a, b, c, d, p, g);
                return finish_inequality("rem1-lower-eq2", lhs, rhs, tol, {{"p", fmt(p)}});
            },
            grid));
    }
    return out;
}

CheckResult check_cor45_offdiag_p12(const ComplexMatrix& b, double p, const GridConfig& grid,
                                    const TolerancePolicy& tol) {
    if (!(p >= 1.0 && p <= 2.0)) throw ConfigError("cor4.5-offdiag-p12: p must lie in [1, 2]");
    const int n = b.rows();
    const ComplexMatrix zero(n, n);
    const NormSpec sp = NormSpec::schatten(p);
    return with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = pow_nonneg(rad(block_2x2(zero, b, b, zero), sp, g), p);
            const Enclosure rhs = 2.0 * pow_nonneg(rad(b, sp, g), p);
            return finish_inequality("cor4.5-offdiag-p12", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);
}

CheckResult check_cor45_symmetric_p12(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                      const GridConfig& grid, const TolerancePolicy& tol) {
    if (!(p >= 1.0 && p <= 2.0)) throw ConfigError("cor4.5-symmetric-p12: p must lie in [1, 2]");
    const NormSpec sp = NormSpec::schatten(p);
    return with_densify_retry(
        [&](const GridConfig& g) {
            const Enclosure lhs = pow_nonneg(rad(block_2x2(a, b, b, a), sp, g), p);
            const Enclosure rhs =
                pow_nonneg(rad(add(a, b), sp, g), p) + pow_nonneg(rad(subtract(a, b), sp, g), p);
            return finish_inequality("cor4.5-symmetric-p12", lhs, rhs, tol, {{"p", fmt(p)}});
        },
        grid);
}

}  // namespace numrad
