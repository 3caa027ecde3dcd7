#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ndde/affine.hpp"
#include "ndde/field.hpp"
#include "ndde/solver.hpp"

namespace ndde {

enum class Architecture { NonAugmented, Augmented };

/// Augmented iff the internal state dimension m strictly exceeds both the
/// input dimension n and the output dimension q.
Architecture classify_architecture(std::size_t n, std::size_t m, std::size_t q);

const char* architecture_name(Architecture a);

/// True iff rank(W) = min{rows, cols} for both matrices, using row reduction
/// with relative pivot tolerance rel_tol.
bool in_full_rank_set(const Matrix& W, const Matrix& W_tilde, double rel_tol = 1e-10);

/// Full architecture: affine read-in, delay field evolved for time T from
/// constant initial data, affine read-out.
///
///   Phi(x) = lambda_out( y(0, c_{lambda_in(x)})(T) )
struct NeuralDDESpec {
    AffineMap lambda_in;   ///< R^n -> R^m
    VectorFieldSpec field; ///< dynamics on R^m, history depth tau
    double tau = 0.0;
    double T = 1.0;
    AffineMap lambda_out;  ///< R^m -> R^q

    /// Named-builder handle {"name": ..., "parameters": {...}} so specs can be
    /// serialized; builders fill it in, hand-assembled specs may leave it null.
    nlohmann::json field_config;

    std::size_t n() const { return lambda_in.cols(); }
    std::size_t m() const { return lambda_in.rows(); }
    std::size_t q() const { return lambda_out.rows(); }

    /// Throws DimensionError / ConfigError when shapes or times are inconsistent.
    void validate() const;
};

/// Euler trajectory of the internal state for input x, using L steps on [0, T].
Trajectory ndde_trajectory(const NeuralDDESpec& spec, const Vec& x, int L);

/// Phi(x) with L Euler steps.
Vec ndde_forward(const NeuralDDESpec& spec, const Vec& x, int L);

/// Output-gap certificate between a spec and a perturbed-field copy sharing
/// all affine data and times. theory_bound = ||W_tilde||_inf * T * delta_sup;
/// slack = 10 * (T/L) first-order integration allowance.
struct GapReport {
    double theory_bound;
    double empirical_max;
    double slack;
};

/// Runs both architectures on every sample, verifies the field difference on
/// the visited histories stays within delta_sup (a necessary check only; the
/// sup over the full state space is the caller's responsibility), and checks
/// empirical_max <= theory_bound + slack. Violations raise NumericError;
/// structure mismatches raise ConfigError.
GapReport parameterized_gap_bound(const NeuralDDESpec& phi_general, const NeuralDDESpec& phi_perturbed,
                                  double delta_sup, const std::vector<Vec>& samples, int L);

} // namespace ndde
