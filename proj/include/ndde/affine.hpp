#pragma once

#include "ndde/errors.hpp"
#include "ndde/linalg.hpp"

namespace ndde {

/// Affine map x -> W x + b.
struct AffineMap {
    Matrix W;
    Vec b;

    std::size_t rows() const { return W.rows(); }
    std::size_t cols() const { return W.cols(); }

    Vec apply(const Vec& x) const {
        if (b.size() != W.rows()) throw DimensionError("AffineMap: offset length does not match matrix rows");
        Vec y = W.apply(x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
        return y;
    }

    static AffineMap identity(std::size_t n) {
        return {Matrix::scaled_identity(n, n, 1.0), Vec(n, 0.0)};
    }

    /// Rectangular scaled embedding/projection with zero offset.
    static AffineMap scaled_identity(std::size_t rows, std::size_t cols, double scale) {
        return {Matrix::scaled_identity(rows, cols, scale), Vec(rows, 0.0)};
    }
};

} // namespace ndde
