#pragma once

#include <string>
#include <vector>

#include "ndde/delays.hpp"
#include "ndde/neural_dde.hpp"

namespace ndde {

/// Layered view of the Euler scheme: h_{l+1} = h_l + f_{Dense,l}(h_l, ..., h_0)
/// where f_{Dense,l} is delta times the DDE field at time t_l with delayed
/// arguments resolved through the integer index table and negative indices
/// substituted by h_0 (constant initial data).
struct DenseResNetSpec {
    TimeGrid grid;         ///< layer l sits at time t_l = l * delta
    VectorFieldSpec field; ///< evaluation is shared verbatim with euler_solve
    AlignmentTable table;  ///< one column per declared delay; may be empty

    int layers() const { return grid.L; }
    double delta() const { return grid.delta; }
    std::size_t width() const { return field.m; }

    /// The layer-l update f_{Dense,l} applied to the stack h = (h_0, ..., h_l)
    /// (h may be longer; entries beyond l are not read).
    Vec layer_update(int l, const std::vector<Vec>& h) const;

    /// The delayed grid index used by delay column k at layer l; negative
    /// values point into the constant initial data.
    int delayed_index(int l, std::size_t k) const { return table.alpha[static_cast<std::size_t>(l)][k]; }

    /// Human-readable summary: layer count, step, and per-delay index rows
    /// rendered as y{index} entries for l = 0..L.
    std::string report() const;
};

/// Builds the layered network equivalent to L Euler steps of the architecture's
/// internal DDE. The field must carry its delay metadata for a nonempty index
/// table; alignment violations propagate as AlignmentError.
DenseResNetSpec discretize(const NeuralDDESpec& ndde, int L);

/// Iterates the update rule from h_0 and returns h_L. Performs the identical
/// floating-point operations as euler_solve with constant initial data h_0,
/// so results agree bit for bit.
Vec dense_forward(const DenseResNetSpec& net, const Vec& h0);

} // namespace ndde
