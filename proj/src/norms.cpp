#include "numrad/norms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"

namespace numrad {

namespace {

std::string lowercased(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double_strict(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw InvalidSpec("norm spec: cannot parse number '" + s + "'");
    return v;
}

int parse_int_strict(const std::string& s) {
    int v = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw InvalidSpec("norm spec: cannot parse integer '" + s + "'");
    return v;
}

void validate(const NormSpec& s) {
    if (s.kind == NormSpec::Kind::schatten) {
        if (std::isnan(s.p) || s.p < 1.0) throw InvalidSpec("schatten norm requires p >= 1");
    } else {
        if (s.k < 1) throw InvalidSpec("kyfan norm requires k >= 1");
    }
}

}  // namespace

NormSpec NormSpec::schatten(double p) {
    NormSpec s;
    s.kind = Kind::schatten;
    s.p = p;
    validate(s);
    return s;
}

NormSpec NormSpec::kyfan(int k) {
    NormSpec s;
    s.kind = Kind::kyfan;
    s.k = k;
    validate(s);
    return s;
}

NormSpec NormSpec::parse(const std::string& text) {
    const std::string s = lowercased(trimmed(text));
    if (s == "operator") return schatten(std::numeric_limits<double>::infinity());
    if (s == "trace") return schatten(1.0);
    if (s == "frobenius") return schatten(2.0);
    if (s.rfind("schatten:", 0) == 0) {
        const std::string arg = trimmed(s.substr(9));
        if (arg == "inf") return schatten(std::numeric_limits<double>::infinity());
        return schatten(parse_double_strict(arg));
    }
    if (s.rfind("kyfan:", 0) == 0) return kyfan(parse_int_strict(trimmed(s.substr(6))));
    throw InvalidSpec("unknown norm spec '" + text +
                      "' (expected schatten:p, kyfan:k, operator, trace or frobenius)");
}

std::string NormSpec::to_string() const {
    if (kind == Kind::kyfan) return "kyfan:" + std::to_string(k);
    if (std::isinf(p)) return "schatten:inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return std::string("schatten:") + buf;
}

double gauge(const NormSpec& spec, std::span<const double> sv) {
    validate(spec);
    if (sv.empty()) return 0.0;
    if (spec.kind == NormSpec::Kind::kyfan) {
        if (static_cast<size_t>(spec.k) > sv.size())
            throw InvalidSpec("kyfan:" + std::to_string(spec.k) + " needs at least that many singular values");
        double s = 0.0;
        for (int i = 0; i < spec.k; ++i) s += sv[i];
        return s;
    }
    const double p = spec.p;
    if (std::isinf(p)) return sv[0];
    if (p == 1.0) {
        double s = 0.0;
        for (double x : sv) s += x;
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (double x : sv) s += x * x;
        return std::sqrt(s);
    }
    if (p > 64.0) {
        // scaled form sv1 * (sum (sv_i/sv1)^p)^(1/p) keeps large p overflow-safe
        const double s1 = sv[0];
        if (s1 == 0.0) return 0.0;
        double s = 0.0;
        for (double x : sv) s += std::pow(x / s1, p);
        return s1 * std::pow(s, 1.0 / p);
    }
    double s = 0.0;
    for (double x : sv) s += std::pow(x, p);
    return std::pow(s, 1.0 / p);
}

double matrix_norm(const NormSpec& spec, const ComplexMatrix& m) {
    const RealVector sv = singular_values(m);
    return gauge(spec, sv);
}

double hermitian_norm_fast(const NormSpec& spec, const ComplexMatrix& m) {
    RealVector w = hermitian_eigenvalues(m);  // validates shape/Hermiticity
    for (double& x : w) x = std::abs(x);
    std::sort(w.begin(), w.end(), std::greater<>());
    return gauge(spec, w);
}

}  // namespace numrad
