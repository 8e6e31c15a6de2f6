#pragma once

#include <span>
#include <string>

#include "numrad/matrix.hpp"

namespace numrad {

/// A symmetric gauge norm on singular values: Schatten p (p in [1, inf],
/// infinity is a first-class value) or Ky Fan k (sum of the k largest).
///
/// Textual form for CLI/config: "schatten:p" (p decimal or "inf"), "kyfan:k",
/// plus the aliases "operator" (= schatten:inf), "trace" (= schatten:1) and
/// "frobenius" (= schatten:2). Parsing is case-insensitive.
struct NormSpec {
    enum class Kind { schatten, kyfan };

    Kind kind = Kind::schatten;
    double p = 2.0;  // schatten only; may be +infinity
    int k = 1;       // kyfan only

    static NormSpec schatten(double p);
    static NormSpec kyfan(int k);
    static NormSpec parse(const std::string& text);

    std::string to_string() const;
    bool operator==(const NormSpec&) const = default;
};

/// Gauge value on a descending, nonnegative singular-value vector.
/// Large finite p (> 64) is evaluated in scaled form to avoid overflow.
double gauge(const NormSpec& spec, std::span<const double> sv);

/// gauge(spec, singular_values(m)).
double matrix_norm(const NormSpec& spec, const ComplexMatrix& m);

/// Fast path for Hermitian m: gauge on |eigenvalues| sorted descending.
double hermitian_norm_fast(const NormSpec& spec, const ComplexMatrix& m);

}  // namespace numrad
