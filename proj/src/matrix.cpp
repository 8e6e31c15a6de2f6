#include "numrad/matrix.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "numrad/errors.hpp"

namespace numrad {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("matrix dimensions must be nonnegative");
    e_.assign(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(int rows, int cols, std::initializer_list<cplx> entries) {
    if (static_cast<size_t>(rows) * cols != entries.size())
        throw DimensionMismatch("from_rows: entry count does not match dimensions");
    ComplexMatrix m(rows, cols);
    size_t i = 0;
    for (cplx v : entries) m.e_[i++] = v;
    return m;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw NotSquare("trace: matrix must be square");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : e_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : e_) s += std::norm(v);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : e_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(who) + ": shapes do not match");
}

}  // namespace

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    ComplexMatrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = a.entries()[i] + b.entries()[i];
    return r;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "subtract");
    ComplexMatrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = a.entries()[i] - b.entries()[i];
    return r;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions do not match");
    ComplexMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix scale(cplx c, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = c * a.entries()[i];
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

ComplexMatrix block_2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                        const ComplexMatrix& c, const ComplexMatrix& d) {
    const int n = a.rows();
    auto square_n = [n](const ComplexMatrix& m) { return m.rows() == n && m.cols() == n; };
    if (!a.is_square() || !square_n(b) || !square_n(c) || !square_n(d))
        throw DimensionMismatch("block_2x2: all four blocks must be n x n");
    ComplexMatrix t(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t(i, j) = a(i, j);
            t(i, j + n) = b(i, j);
            t(i + n, j) = c(i, j);
            t(i + n, j + n) = d(i, j);
        }
    }
    return t;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("hermitian_part: matrix must be square");
    const int n = a.rows();
    ComplexMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = cplx(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

ComplexMatrix skew_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("skew_part: matrix must be square");
    const int n = a.rows();
    ComplexMatrix k(n, n);
    for (int i = 0; i < n; ++i) {
        k(i, i) = cplx(a(i, i).imag(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            // (a_ij - conj(a_ji)) / (2i)
            const cplx d = a(i, j) - std::conj(a(j, i));
            const cplx v(0.5 * d.imag(), -0.5 * d.real());
            k(i, j) = v;
            k(j, i) = std::conj(v);
        }
    }
    return k;
}

double hermitian_deviation(const ComplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("hermitian_deviation: matrix must be square");
    double dev = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
    return dev;
}

std::string matrix_to_json(const ComplexMatrix& a) {
    nlohmann::json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    auto entries = nlohmann::json::array();
    for (const cplx& v : a.entries()) entries.push_back({v.real(), v.imag()});
    j["entries"] = std::move(entries);
    return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("matrix JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ConfigError("matrix JSON must contain rows, cols and entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ConfigError("matrix JSON: rows and cols must be integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows < 1 || cols < 1) throw ConfigError("matrix JSON: rows and cols must be positive");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<size_t>(rows) * cols)
        throw ConfigError("matrix JSON: entries must hold rows*cols pairs");
    ComplexMatrix m(rows, cols);
    size_t i = 0;
    for (const auto& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ConfigError("matrix JSON: each entry must be a [re, im] pair");
        m.entries()[i++] = cplx(pair[0].get<double>(), pair[1].get<double>());
    }
    if (!m.all_finite()) throw ConfigError("matrix JSON: entries must be finite");
    return m;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

void save_matrix(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write matrix file: " + path);
    out << matrix_to_json(a) << '\n';
}

}  // namespace numrad
