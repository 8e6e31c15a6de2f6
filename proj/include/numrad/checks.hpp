#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numrad/enclosure.hpp"
#include "numrad/matrix.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"

namespace numrad {

/// Relative pass tolerances: inequalities at 1e-8 * scale, equality cases at
/// 1e-7 * scale (they stack more radius evaluations), with optional per-check
/// overrides keyed by check id.
struct TolerancePolicy {
    double inequality_rel = 1e-8;
    double equality_rel = 1e-7;
    std::map<std::string, double> overrides;

    double rel_for(const std::string& check_id, bool equality) const {
        auto it = overrides.find(check_id);
        if (it != overrides.end()) return it->second;
        return equality ? equality_rel : inequality_rel;
    }
};

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// One evaluated claim. For "lhs <= rhs" the verdict is fail only when
/// lhs.lo > rhs.hi + tol (a violation certain up to tolerance); an overlap
/// too wide to certify triggers one automatic rerun at 4x grid density and
/// is reported inconclusive only if it persists.
struct CheckResult {
    std::string check_id;
    Enclosure lhs;
    Enclosure rhs;
    double slack = 0.0;  // rhs.lo - lhs.hi, the most pessimistic margin
    Verdict verdict = Verdict::pass;
    std::map<std::string, std::string> params;
};

/// Midpoint-convexity evidence for one of the scalar functions of t.
struct ConvexityReport {
    std::string function_id;  // "f", "g", "h", "k" or "ell"
    std::vector<double> t_grid;
    std::vector<Enclosure> values;  // one enclosure per grid point

    struct Violation {
        double t = 0.0;
        double s = 0.0;
        double deficit = 0.0;
    };
    std::vector<Violation> midpoint_violations;
    bool min_location_ok = true;

    // worst tested pair, for folding into a CheckResult
    Enclosure worst_lhs;
    Enclosure worst_rhs;
    double min_slack = 0.0;
    bool uncertain = false;  // wide enclosures prevented certification somewhere

    CheckResult fold(const std::string& check_id,
                     std::map<std::string, std::string> params) const;
};

// ---------------------------------------------------------------------------
// One executable check per verified claim. All matrix arguments follow the
// conventions: a, b positive definite where a power of them is taken; x, and
// the blocks of a 2x2 block matrix, arbitrary.
// ---------------------------------------------------------------------------

/// "lem2.1-eq3": w_N(a^t x a^t) <= w_N(axa)^t * w_N(x)^(1-t), t in [0,1].
CheckResult check_lemma21_holder(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const NormSpec& spec, double t, const GridConfig& grid,
                                 const TolerancePolicy& tol);

/// "lem2.1-eq4-lower" and "lem2.1-eq4-upper":
/// 2 w_N(a^{1/2} x a^{1/2}) <= w_N(a^t x a^{1-t} + a^{1-t} x a^t) <= w_N(ax + xa).
std::array<CheckResult, 2> check_lemma21_heinz(const ComplexMatrix& a, const ComplexMatrix& x,
                                               const NormSpec& spec, double t,
                                               const GridConfig& grid, const TolerancePolicy& tol);

/// "eq5": w_N(axa) <= w_N(a^2 x + x a^2) / 2.
CheckResult check_axa_half_bound(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const NormSpec& spec, const GridConfig& grid,
                                 const TolerancePolicy& tol);

/// "sec4-two-sided": 2 w_N(axb) <= w_N(a^2 x + x b^2) for independent a, b > 0.
CheckResult check_two_sided_axb(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& x, const NormSpec& spec,
                                const GridConfig& grid, const TolerancePolicy& tol);

/// "thm1.2-eq1", p in [2, inf):
/// w_p^p(T) <= 2^{p-2} (w_p^p(a) + w_p^p(d) + 2^{1-p} (|b|_p + |c|_p)^p).
CheckResult check_thm12_p_ge_2(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const ComplexMatrix& d, double p,
                               const GridConfig& grid, const TolerancePolicy& tol);

/// "thm1.2-eq2", p in [1, 2]: same right-hand side without the 2^{p-2} factor.
CheckResult check_thm12_p_le_2(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const ComplexMatrix& d, double p,
                               const GridConfig& grid, const TolerancePolicy& tol);

/// "lem3.1", p in [2, inf): |T|_p^p <= 2^{p-2} sum_ij |T_ij|_p^p.
CheckResult check_lemma31_partition(const ComplexMatrix& t11, const ComplexMatrix& t12,
                                    const ComplexMatrix& t21, const ComplexMatrix& t22, double p,
                                    const TolerancePolicy& tol);

enum class Sign { plus, minus };

/// "cor4.1-plus" / "cor4.1-minus":
/// w_N(a^t x a^{1-t} +/- a^{1-t} x a^t) <= w_N(ax +/- xa) for t in [0,1],
/// with the inequality reversed for t outside [0,1].
CheckResult check_cor41(const ComplexMatrix& a, const ComplexMatrix& x, const NormSpec& spec,
                        double t, Sign sign, const GridConfig& grid, const TolerancePolicy& tol);

/// "cor4.2-in" / "cor4.2-out":
/// w_N(a^t x a^{1-t}) <= t w_N(ax) + (1-t) w_N(xa) for t in [0,1], reversed outside.
CheckResult check_cor42_young(const ComplexMatrix& a, const ComplexMatrix& x,
                              const NormSpec& spec, double t, const GridConfig& grid,
                              const TolerancePolicy& tol);

/// Convexity of f(t) = w_N(a^t x a^{1-t} + a^{1-t} x a^t) with the extra
/// requirement that t = 1/2 is a global minimum over the grid.
ConvexityReport check_f_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                  const NormSpec& spec, std::span<const double> t_grid,
                                  const GridConfig& grid, const TolerancePolicy& tol,
                                  int random_pairs = 50, uint64_t pair_seed = 0);

/// Convexity of g(t) = w_N(a^t x a^{1-t}).
ConvexityReport check_g_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                  const NormSpec& spec, std::span<const double> t_grid,
                                  const GridConfig& grid, const TolerancePolicy& tol,
                                  int random_pairs = 50, uint64_t pair_seed = 0);

/// "sec4-h-convex": convexity of h(t) = w_N(a^t x a^t).
ConvexityReport check_h_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                  const NormSpec& spec, std::span<const double> t_grid,
                                  const GridConfig& grid, const TolerancePolicy& tol,
                                  int random_pairs = 50, uint64_t pair_seed = 0);

/// "sec4-h-logconvex": h((t+s)/2)^2 <= h(t) h(s) on grid pairs. Degenerate
/// trials with w_N(x) = 0 or w_N(axa) = 0 pass with a "skipped" marker.
CheckResult check_h_logconvexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const NormSpec& spec, std::span<const double> t_grid,
                                 const GridConfig& grid, const TolerancePolicy& tol);

/// "cor4.3": convexity of k(t) = w_N(a^t x a^{1-t} + a^{-t} x a^{1+t}) with
/// minimum at t = 0.
ConvexityReport check_cor43_k(const ComplexMatrix& a, const ComplexMatrix& x,
                              const NormSpec& spec, std::span<const double> t_grid,
                              const GridConfig& grid, const TolerancePolicy& tol,
                              int random_pairs = 50, uint64_t pair_seed = 0);

/// "sec4-ell": convexity of ell(t) = w_N(a^t x a^{1-t} - a^{1-t} x a^t);
/// ell(1/2) = 0 exactly (the two terms cancel).
ConvexityReport check_ell_convexity(const ComplexMatrix& a, const ComplexMatrix& x,
                                    const NormSpec& spec, std::span<const double> t_grid,
                                    const GridConfig& grid, const TolerancePolicy& tol,
                                    int random_pairs = 50, uint64_t pair_seed = 0);

/// "cor4.4-diag", "cor4.4-diag-hermitian-eq", "cor4.4-row" for p in [2, inf):
/// block-diagonal and row-block bounds; the equality case runs on the
/// Hermitian parts of a and d.
std::array<CheckResult, 3> check_cor44(const ComplexMatrix& a, const ComplexMatrix& d,
                                       const ComplexMatrix& b, double p, const GridConfig& grid,
                                       const TolerancePolicy& tol);

/// "cor4.5-offdiag-eq", "cor4.5-symmetric", "cor4.5-symmetric-hermitian-eq"
/// for p in [2, inf): w_p([[0,b],[b,0]]) = 2^{1/p} w_p(b) as a two-sided
/// equality; the symmetric block bound, with equality on Hermitian parts.
std::array<CheckResult, 3> check_cor45(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                       const GridConfig& grid, const TolerancePolicy& tol);

/// "rem1-lower-eq1" (p >= 2) and/or "rem1-lower-eq2" (p <= 2): the block
/// bounds' right-hand sides stay above the stated multiples of |T|_p^p.
std::vector<CheckResult> check_clarkson_lower(const ComplexMatrix& a, const ComplexMatrix& b,
                                              const ComplexMatrix& c, const ComplexMatrix& d,
                                              double p, const GridConfig& grid,
                                              const TolerancePolicy& tol);

/// Informational analogues of the cor4.5 bounds for p in [1, 2], using the
/// thm1.2-eq2 constant. Reported outside the pass/fail gate.
CheckResult check_cor45_offdiag_p12(const ComplexMatrix& b, double p, const GridConfig& grid,
                                    const TolerancePolicy& tol);
CheckResult check_cor45_symmetric_p12(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                                      const GridConfig& grid, const TolerancePolicy& tol);

}  // namespace numrad
