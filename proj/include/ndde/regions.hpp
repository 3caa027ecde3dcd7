#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndde/morse.hpp"

namespace ndde {

/// Extra inputs needed to evaluate the small-delay horizon tau0; without them
/// a positive-delay point can never be certified as non-approximating.
struct ConstantsBundle {
    double C2;
    double M;
    double A;
    double r0;
    double r1;
    double eps;
};

/// One point of the (K, tau) parameter space together with the architecture
/// dimensions and weight scales that the certifying inequalities read.
struct RegionQuery {
    double K = 1.0;
    double tau = 0.0;
    double T = 1.0;
    std::size_t m = 1;
    std::size_t n = 1;
    std::size_t q = 1;
    double K_psi = 1.0;
    double w = 1.0;
    double w_tilde = 1.0;
    std::optional<ConstantsBundle> constants;
};

enum class RegionKind { UE_nonaugmented, UE_augmented, nUA, unknown };

const char* region_kind_name(RegionKind kind);

struct RegionLabel {
    RegionKind kind;
    std::string justification;
};

/// Decides which certifying inequality (if any) covers the query:
///   UE_nonaugmented  m >= max{n,q}, tau > 0, K*tau >= 2(1 + K_psi/(w*w_tilde))
///   UE_augmented     m >= n+q, K*T >= K_psi/(w*w_tilde)
///   nUA              m <= max{n,q} and either tau = 0, or a constants bundle
///                    is supplied, K*tau*e < 1, and tau <= tau0 from
///                    separation_constants
///   unknown          none of the above
/// Boundary equalities count as satisfied. The two UE tests and the nUA test
/// are mutually exclusive by arithmetic (K*tau >= 2 excludes K*tau*e < 1,
/// and m >= n+q excludes m <= max{n,q}). Invalid queries raise ConfigError.
RegionLabel classify_region(const RegionQuery& query);

/// Rectangular sweep over [K_min, K_max] x [tau_min, tau_max] with
/// `resolution` points per axis; remaining query fields from `fixed`.
struct SweepResult {
    std::vector<double> K_values;
    std::vector<double> tau_values;
    std::vector<RegionLabel> cells; ///< row-major: index = i_K * resolution + i_tau

    const RegionLabel& at(std::size_t i_K, std::size_t i_tau) const {
        return cells[i_K * tau_values.size() + i_tau];
    }

    /// CSV columns K,tau,label,justification.
    std::string csv() const;

    /// Three-color heatmap (UE, nUA, unknown), K on the x axis, tau on the y
    /// axis with the origin bottom-left; consecutive same-color cells are
    /// merged per row.
    std::string svg() const;
};

/// Cells are classified concurrently by a small worker pool; the result is
/// deterministic because each cell writes only its own slot.
SweepResult sweep_regions(double K_min, double K_max, double tau_min, double tau_max, int resolution,
                          const RegionQuery& fixed);

} // namespace ndde
