#include "ndde/serialize.hpp"

#include "ndde/errors.hpp"

namespace ndde {

nlohmann::json matrix_to_json(const Matrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw ConfigError("matrix_from_json: expected a nonempty array of rows");
    Matrix M(j.size(), j[0].size());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (j[i].size() != M.cols()) throw ConfigError("matrix_from_json: ragged rows");
        for (std::size_t k = 0; k < M.cols(); ++k) M(i, k) = j[i][k].get<double>();
    }
    return M;
}

nlohmann::json ndde_to_json(const NeuralDDESpec& spec) {
    spec.validate();
    if (spec.field_config.is_null())
        throw ConfigError("ndde_to_json: spec has no named field builder attached");
    return {
        {"n", spec.n()},
        {"m", spec.m()},
        {"q", spec.q()},
        {"tau", spec.tau},
        {"T", spec.T},
        {"W", matrix_to_json(spec.lambda_in.W)},
        {"b", spec.lambda_in.b},
        {"W_tilde", matrix_to_json(spec.lambda_out.W)},
        {"b_tilde", spec.lambda_out.b},
        {"field", spec.field_config},
    };
}

VectorFieldSpec field_from_config(const nlohmann::json& config) {
    if (!config.is_object() || !config.contains("name"))
        throw ConfigError("field_from_config: expected {name, parameters}");
    const std::string name = config["name"].get<std::string>();
    const nlohmann::json params =
        config.contains("parameters") ? config["parameters"] : nlohmann::json::object();

    const auto require = [&params, &name](const char* key) {
        if (!params.contains(key))
            throw ConfigError("field_from_config: builder '" + name + "' needs parameter '" + key + "'");
        return params[key];
    };

    if (name == "zero") return zero_field(require("m").get<std::size_t>(), params.value("tau", 0.0));
    if (name == "linear-delay")
        return linear_delay_field(require("k0").get<double>(), require("tau").get<double>(),
                                  params.value("m", std::size_t{1}));
    if (name == "tanh-delay")
        return tanh_delay_field(require("a").get<double>(), require("b").get<double>(),
                                require("tau").get<double>(), params.value("m", std::size_t{1}));

    if (name == "embed-basic" || name == "embed-nonaug" || name == "embed-aug") {
        const nlohmann::json target_cfg = require("target");
        const TargetMap target = make_named_target(
            target_cfg["name"].get<std::string>(),
            target_cfg.contains("parameters") ? target_cfg["parameters"] : nlohmann::json::object());
        if (name == "embed-basic") return embed_basic_tauT(target, require("T").get<double>()).field;
        if (name == "embed-nonaug")
            return embed_nonaugmented(target, require("tau").get<double>(), require("K").get<double>(),
                                      require("w").get<double>(), require("w_tilde").get<double>(),
                                      params.value("T", 0.0), params.value("m", std::size_t{0}))
                .field;
        return embed_augmented(target, require("tau").get<double>(), require("T").get<double>(),
                               require("K").get<double>(), require("w").get<double>(),
                               require("w_tilde").get<double>(), require("m").get<std::size_t>())
            .field;
    }
    throw ConfigError("field_from_config: unknown builder '" + name + "'");
}

NeuralDDESpec ndde_from_json(const nlohmann::json& j) {
    for (const char* key : {"tau", "T", "W", "b", "W_tilde", "b_tilde", "field"})
        if (!j.contains(key)) throw ConfigError(std::string("ndde_from_json: missing key '") + key + "'");

    NeuralDDESpec spec;
    spec.lambda_in = {matrix_from_json(j["W"]), j["b"].get<Vec>()};
    spec.lambda_out = {matrix_from_json(j["W_tilde"]), j["b_tilde"].get<Vec>()};
    spec.tau = j["tau"].get<double>();
    spec.T = j["T"].get<double>();
    spec.field_config = j["field"];
    spec.field = field_from_config(spec.field_config);
    spec.validate();
    return spec;
}

} // namespace ndde
