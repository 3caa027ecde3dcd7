#pragma once

#include "json.hpp"

#include "ndde/embedding.hpp"
#include "ndde/neural_dde.hpp"

namespace ndde {

/// JSON shape: {n, m, q, tau, T, W, b, W_tilde, b_tilde,
///              field: {name, parameters}}. Matrices are arrays of rows.
nlohmann::json ndde_to_json(const NeuralDDESpec& spec);

/// Rebuilds a spec from its JSON form. The affine data is taken verbatim;
/// the field is reconstructed through its named builder ("zero",
/// "linear-delay", "tanh-delay", "embed-basic", "embed-nonaug", "embed-aug").
/// Unknown names or missing keys raise ConfigError.
NeuralDDESpec ndde_from_json(const nlohmann::json& j);

/// Named-builder dispatch used by ndde_from_json; exposed for CLI use.
VectorFieldSpec field_from_config(const nlohmann::json& config);

nlohmann::json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const nlohmann::json& j);

} // namespace ndde
