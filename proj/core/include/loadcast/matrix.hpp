#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace loadcast {

using Vec = std::vector<double>;

/// Dense row-major matrix of 64-bit floats. The single numeric carrier for
/// weights, activations and gradients. Every public operation leaves only
/// finite values behind; non-finite results raise instead of propagating.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from explicit row-major data; throws if sizes disagree or any
    /// value is non-finite.
    static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<double> data);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    std::string shape_str() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Standard matrix product with 64-bit accumulation.
/// Throws std::invalid_argument naming both shapes when a.cols != b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

/// y = A x. Throws on shape mismatch.
Vec matvec(const Matrix& a, const Vec& x);

/// y = A^T x (used by reverse accumulation). Throws on shape mismatch.
Vec matvec_transposed(const Matrix& a, const Vec& x);

/// Rank-1 update: A += alpha * u v^T.
void add_outer(Matrix& a, const Vec& u, const Vec& v, double alpha = 1.0);

Matrix transpose(const Matrix& a);

// Small vector helpers shared by the model code.
void axpy(Vec& y, const Vec& x, double alpha);          // y += alpha * x
Vec add(const Vec& a, const Vec& b);
Vec hadamard(const Vec& a, const Vec& b);
double dot(const Vec& a, const Vec& b);

/// Throws std::runtime_error if any entry of `values` is NaN or infinite.
void ensure_finite(std::span<const double> values, const char* context);

}  // namespace loadcast
