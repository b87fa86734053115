#include "loadcast/matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace loadcast {

namespace {

[[noreturn]] void shape_error(const char* op, const Matrix& a, const Matrix& b) {
    std::ostringstream os;
    os << op << ": incompatible shapes " << a.shape_str() << " and " << b.shape_str();
    throw std::invalid_argument(os.str());
}

}  // namespace

std::string Matrix::shape_str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_;
    return os.str();
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, std::vector<double> data) {
    if (data.size() != rows * cols) {
        std::ostringstream os;
        os << "Matrix::from_data: " << data.size() << " values for a " << rows << "x" << cols
           << " matrix";
        throw std::invalid_argument(os.str());
    }
    ensure_finite(data, "Matrix::from_data");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) shape_error("matmul", a, b);
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    ensure_finite(c.values(), "matmul");
    return c;
}

Vec matvec(const Matrix& a, const Vec& x) {
    if (a.cols() != x.size()) {
        std::ostringstream os;
        os << "matvec: matrix " << a.shape_str() << " vs vector of length " << x.size();
        throw std::invalid_argument(os.str());
    }
    Vec y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        const double* row = a.data() + i * a.cols();
        for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

Vec matvec_transposed(const Matrix& a, const Vec& x) {
    if (a.rows() != x.size()) {
        std::ostringstream os;
        os << "matvec_transposed: matrix " << a.shape_str() << " vs vector of length "
           << x.size();
        throw std::invalid_argument(os.str());
    }
    Vec y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        const double* row = a.data() + i * a.cols();
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += row[j] * xi;
    }
    return y;
}

void add_outer(Matrix& a, const Vec& u, const Vec& v, double alpha) {
    if (a.rows() != u.size() || a.cols() != v.size()) {
        std::ostringstream os;
        os << "add_outer: matrix " << a.shape_str() << " vs outer " << u.size() << "x"
           << v.size();
        throw std::invalid_argument(os.str());
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double ui = alpha * u[i];
        if (ui == 0.0) continue;
        double* row = a.data() + i * a.cols();
        for (std::size_t j = 0; j < v.size(); ++j) row[j] += ui * v[j];
    }
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

void axpy(Vec& y, const Vec& x, double alpha) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Vec hadamard(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hadamard: length mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
    return c;
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void ensure_finite(std::span<const double> values, const char* context) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            std::ostringstream os;
            os << context << ": non-finite value at index " << i;
            throw std::runtime_error(os.str());
        }
    }
}

}  // namespace loadcast
