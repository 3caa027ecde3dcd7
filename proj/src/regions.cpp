#include "ndde/regions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

const char* region_kind_name(RegionKind kind) {
    switch (kind) {
    case RegionKind::UE_nonaugmented: return "UE_nonaugmented";
    case RegionKind::UE_augmented: return "UE_augmented";
    case RegionKind::nUA: return "nUA";
    default: return "unknown";
    }
}

RegionLabel classify_region(const RegionQuery& query) {
    if (!(query.K > 0.0) || !(query.T > 0.0) || !(query.w > 0.0) || !(query.w_tilde > 0.0) ||
        query.K_psi < 0.0 || query.m == 0 || query.n == 0 || query.q == 0)
        throw ConfigError("classify_region: dimensions and scales must be positive");
    if (query.tau < 0.0 || query.tau > query.T * (1.0 + 1e-12))
        throw ConfigError("classify_region: need 0 <= tau <= T");

    const double ratio = query.K_psi / (query.w * query.w_tilde);
    const std::size_t max_nq = std::max(query.n, query.q);

    if (query.m >= max_nq && query.tau > 0.0 && query.K * query.tau >= 2.0 * (1.0 + ratio))
        return {RegionKind::UE_nonaugmented, "memory inequality K*tau >= 2(1+K_psi/(w*wt))"};

    if (query.m >= query.n + query.q && query.K * query.T >= ratio)
        return {RegionKind::UE_augmented, "horizon inequality K*T >= K_psi/(w*wt)"};

    if (query.m <= max_nq) {
        if (query.tau == 0.0) return {RegionKind::nUA, "zero delay, non-augmented"};
        if (query.constants && query.K * query.tau * std::exp(1.0) < 1.0) {
            const ConstantsBundle& cb = *query.constants;
            const SeparationConstants sc = separation_constants(
                query.K, cb.A, query.T, cb.M, cb.r0, cb.r1, cb.eps, query.w, query.w_tilde, cb.C2);
            if (query.tau <= sc.tau0)
                return {RegionKind::nUA, "tau <= tau0 = " + format_g17(sc.tau0) +
                                             " (C2 = " + format_g17(cb.C2) + ")"};
        }
    }
    return {RegionKind::unknown, "no certifying inequality"};
}

std::string SweepResult::csv() const {
    std::ostringstream out;
    out << "K,tau,label,justification\n";
    for (std::size_t i = 0; i < K_values.size(); ++i)
        for (std::size_t j = 0; j < tau_values.size(); ++j) {
            const RegionLabel& cell = at(i, j);
            std::string just = cell.justification;
            std::replace(just.begin(), just.end(), ',', ';');
            out << format_g17(K_values[i]) << ',' << format_g17(tau_values[j]) << ','
                << region_kind_name(cell.kind) << ',' << just << '\n';
        }
    return out.str();
}

std::string SweepResult::svg() const {
    const std::size_t nk = K_values.size(), nt = tau_values.size();
    const int cell = 4, margin = 30;
    const int width = margin * 2 + cell * static_cast<int>(nk);
    const int height = margin * 2 + cell * static_cast<int>(nt);

    const auto color = [](RegionKind kind) {
        switch (kind) {
        case RegionKind::UE_nonaugmented:
        case RegionKind::UE_augmented: return "#2a9d3c";
        case RegionKind::nUA: return "#d7302e";
        default: return "#cccccc";
        }
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    // tau increases upward: row j sits at y = height - margin - (j+1)*cell.
    for (std::size_t j = 0; j < nt; ++j) {
        std::size_t run_start = 0;
        for (std::size_t i = 1; i <= nk; ++i) {
            if (i < nk && color(at(i, j).kind) == color(at(run_start, j).kind)) continue;
            const int x = margin + cell * static_cast<int>(run_start);
            const int y = height - margin - cell * (static_cast<int>(j) + 1);
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\""
                << cell * static_cast<int>(i - run_start) << "\" height=\"" << cell << "\" fill=\""
                << color(at(run_start, j).kind) << "\"/>\n";
            run_start = i;
        }
    }
    out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">K</text>\n";
    out << "  <text x=\"12\" y=\"" << height / 2 << "\" font-size=\"12\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 12 " << height / 2 << ")\">tau</text>\n";
    out << "</svg>\n";
    return out.str();
}

SweepResult sweep_regions(double K_min, double K_max, double tau_min, double tau_max, int resolution,
                          const RegionQuery& fixed) {
    if (resolution < 2) throw ConfigError("sweep_regions: resolution must be at least 2");
    if (!(K_min > 0.0) || K_max < K_min || tau_min < 0.0 || tau_max < tau_min)
        throw ConfigError("sweep_regions: invalid axis ranges");

    SweepResult result;
    result.K_values.resize(static_cast<std::size_t>(resolution));
    result.tau_values.resize(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double f = static_cast<double>(i) / (resolution - 1);
        result.K_values[static_cast<std::size_t>(i)] = K_min + f * (K_max - K_min);
        result.tau_values[static_cast<std::size_t>(i)] = tau_min + f * (tau_max - tau_min);
    }

    const std::size_t total = result.K_values.size() * result.tau_values.size();
    result.cells.resize(total);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    const auto worker = [&]() {
        for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
            if (failed.load()) return;
            RegionQuery query = fixed;
            query.K = result.K_values[idx / result.tau_values.size()];
            query.tau = result.tau_values[idx % result.tau_values.size()];
            try {
                result.cells[idx] = classify_region(query);
            } catch (const std::exception& ex) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) error_message = ex.what();
                return;
            }
        }
    };

    const unsigned n_threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    if (failed.load()) throw ConfigError("sweep_regions: " + error_message);
    return result;
}

} // namespace ndde
