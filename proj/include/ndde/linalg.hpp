#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace ndde {

using Vec = std::vector<double>;

/// Max-norm ‖v‖∞.
[[nodiscard]] double inf_norm(const Vec& v);

/// ‖a − b‖∞; sizes must match.
[[nodiscard]] double inf_norm_diff(const Vec& a, const Vec& b);

/// Euclidean norm ‖v‖₂.
[[nodiscard]] double two_norm(const Vec& v);

/// Dense row-major matrix. Dimensions are fixed at construction; the small
/// sizes used here (state and weight matrices) do not warrant an external
/// linear-algebra dependency for the operations below.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Scaled rectangular identity: scale on the main diagonal, zero elsewhere.
    [[nodiscard]] static Matrix scaled_identity(std::size_t rows, std::size_t cols, double scale);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] const std::vector<double>& data() const { return data_; }

    /// Matrix-vector product; x.size() must equal cols().
    [[nodiscard]] Vec apply(const Vec& x) const;

    /// Operator norm induced by the vector max norm: max absolute row sum.
    [[nodiscard]] double inf_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Rank by Gaussian elimination with partial pivoting. A pivot counts if its
/// magnitude exceeds rel_tol times the matrix max norm (tolerance floor
/// rel_tol for the zero matrix).
[[nodiscard]] int rank_row_reduction(const Matrix& a, double rel_tol = 1e-10);

/// A kernel vector of a rank-deficient square matrix, found by the same
/// elimination; std::nullopt if the matrix has full rank at the tolerance.
[[nodiscard]] std::optional<Vec> kernel_vector(const Matrix& a, double rel_tol = 1e-10);

} // namespace ndde
