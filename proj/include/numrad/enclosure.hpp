#pragma once

#include <algorithm>
#include <cmath>

namespace numrad {

/// Closed interval [lo, hi] used for certified comparisons. Composite
/// right-hand sides (powers, products, affine combinations) are assembled
/// with outward inflation of 1e-12 relative per operation, the accepted
/// shortcut for ulp-level outward rounding.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    static Enclosure exact(double v) { return {v, v}; }
    static Enclosure point(double v) { return Enclosure{v, v}.inflated(); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    Enclosure inflated() const {
        const double m = 1e-12 * std::max(std::abs(lo), std::abs(hi));
        return {lo - m, hi + m};
    }
};

inline Enclosure operator+(Enclosure a, Enclosure b) {
    return Enclosure{a.lo + b.lo, a.hi + b.hi}.inflated();
}

inline Enclosure operator-(Enclosure a, Enclosure b) {
    return Enclosure{a.lo - b.hi, a.hi - b.lo}.inflated();
}

inline Enclosure operator*(double c, Enclosure a) {
    return (c >= 0.0 ? Enclosure{c * a.lo, c * a.hi} : Enclosure{c * a.hi, c * a.lo}).inflated();
}

inline Enclosure mul(Enclosure a, Enclosure b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Enclosure{std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4))}
        .inflated();
}

/// x^e for an interval with lo >= 0 and e >= 0 (monotone); e == 0 gives [1,1].
inline Enclosure pow_nonneg(Enclosure a, double e) {
    if (e == 0.0) return Enclosure::exact(1.0);
    return Enclosure{std::pow(std::max(0.0, a.lo), e), std::pow(std::max(0.0, a.hi), e)}.inflated();
}

}  // namespace numrad
