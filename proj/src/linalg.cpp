#include "ndde/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "ndde/errors.hpp"

namespace ndde {

double inf_norm(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double inf_norm_diff(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("inf_norm_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double two_norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Matrix Matrix::scaled_identity(std::size_t rows, std::size_t cols, double scale) {
    Matrix m(rows, cols, 0.0);
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) m(i, i) = scale;
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionError("Matrix::apply: size mismatch");
    Vec y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) acc += data_[r * cols_ + c] * x[c];
        y[r] = acc;
    }
    return y;
}

double Matrix::inf_norm() const {
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += std::abs(data_[r * cols_ + c]);
        m = std::max(m, s);
    }
    return m;
}

namespace {

// Elimination shared by rank and kernel extraction. Returns the reduced
// matrix, the pivot column of each eliminated row, and the pivot threshold.
struct Echelon {
    Matrix a;
    std::vector<std::size_t> pivot_cols;
    double threshold;
};

Echelon eliminate(const Matrix& input, double rel_tol) {
    Echelon e{input, {}, rel_tol * std::max(1.0, input.inf_norm())};
    Matrix& a = e.a;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < a.rows(); ++r)
            if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
        if (std::abs(a(best, col)) <= e.threshold) continue;
        if (best != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(best, c));
        for (std::size_t r = row + 1; r < a.rows(); ++r) {
            const double f = a(r, col) / a(row, col);
            a(r, col) = 0.0;
            for (std::size_t c = col + 1; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

int rank_row_reduction(const Matrix& a, double rel_tol) {
    return static_cast<int>(eliminate(a, rel_tol).pivot_cols.size());
}

std::optional<Vec> kernel_vector(const Matrix& a, double rel_tol) {
    const Echelon e = eliminate(a, rel_tol);
    if (e.pivot_cols.size() == a.cols()) return std::nullopt;

    // First non-pivot column becomes the free variable, set to 1.
    std::size_t free_col = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), c) == e.pivot_cols.end()) {
            free_col = c;
            break;
        }
    }
    Vec x(a.cols(), 0.0);
    x[free_col] = 1.0;
    for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
        const std::size_t pc = e.pivot_cols[i];
        double s = 0.0;
        for (std::size_t c = pc + 1; c < a.cols(); ++c) s += e.a(i, c) * x[c];
        x[pc] = -s / e.a(i, pc);
    }
    return x;
}

} // namespace ndde
