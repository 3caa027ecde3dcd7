#include "ndde/dense_resnet.hpp"

#include <cmath>
#include <sstream>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"
#include "ndde/solver.hpp"

namespace ndde {

namespace {

bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace

Vec DenseResNetSpec::layer_update(int l, const std::vector<Vec>& h) const {
    if (l < 0 || l >= grid.L) throw DomainError("layer_update: layer index out of range");
    if (static_cast<int>(h.size()) < l + 1 || h[0].size() != field.m)
        throw DimensionError("layer_update: layer stack too short or wrong width");

    // Reconstruct the solver's state layout: history slots -R..0 all alias
    // h_0, forward slots carry the stack. Entries beyond l stay empty and any
    // read of them would throw, which enforces the feed-forward property.
    std::vector<Vec> states(static_cast<std::size_t>(grid.R + grid.L + 1));
    for (int r = -grid.R; r <= 0; ++r) states[static_cast<std::size_t>(r + grid.R)] = h[0];
    for (int i = 1; i <= l; ++i) states[static_cast<std::size_t>(i + grid.R)] = h[static_cast<std::size_t>(i)];

    const HistoryView view(grid, states, l);
    Vec f = field.eval(grid.time_at(l), view);
    if (f.size() != field.m) throw DimensionError("layer_update: field output has wrong width");
    for (double& x : f) x *= grid.delta;
    return f;
}

std::string DenseResNetSpec::report() const {
    std::ostringstream out;
    out << "layers L = " << grid.L << "\n";
    out << "step delta = " << format_g17(grid.delta) << "\n";
    out << "width m = " << field.m << "\n";
    for (std::size_t k = 0; k < table.labels.size(); ++k) {
        out << table.labels[k] << ":";
        for (int l = 0; l <= grid.L; ++l) out << " y" << table.alpha[static_cast<std::size_t>(l)][k];
        out << "\n";
    }
    return out.str();
}

DenseResNetSpec discretize(const NeuralDDESpec& ndde, int L) {
    ndde.validate();
    DenseResNetSpec net;
    net.grid = make_aligned_grid(0.0, ndde.T, L, ndde.tau);
    net.field = ndde.field;
    if (!ndde.field.delays.empty())
        net.table = grid_alignment_table(ndde.field.delays, net.grid);
    else {
        net.table.L = net.grid.L;
        net.table.R = net.grid.R;
    }
    return net;
}

Vec dense_forward(const DenseResNetSpec& net, const Vec& h0) {
    if (h0.size() != net.field.m) throw DimensionError("dense_forward: h0 has wrong width");

    const TimeGrid& g = net.grid;
    std::vector<Vec> states(static_cast<std::size_t>(g.R + g.L + 1));
    for (int r = -g.R; r <= 0; ++r) states[static_cast<std::size_t>(r + g.R)] = h0;

    for (int l = 0; l < g.L; ++l) {
        const HistoryView view(g, states, l);
        const Vec f = net.field.eval(g.time_at(l), view);
        if (f.size() != net.field.m) throw DimensionError("dense_forward: field output has wrong width");
        if (!all_finite(f))
            throw NumericError("dense_forward: non-finite update at layer " + std::to_string(l));
        Vec next = euler_step(states[static_cast<std::size_t>(l + g.R)], g.delta, f);
        if (!all_finite(next))
            throw NumericError("dense_forward: hidden state overflow at layer " + std::to_string(l + 1));
        states[static_cast<std::size_t>(l + 1 + g.R)] = std::move(next);
    }
    return states[static_cast<std::size_t>(g.L + g.R)];
}

} // namespace ndde
