#include "pamusim/costmodel.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pamusim/errors.hpp"

namespace pamusim {

namespace {

void require_count(std::int64_t value, const std::string& field) {
    if (value < 1) {
        throw ValidationError(field + ": must be at least 1, got " + std::to_string(value));
    }
}

std::int64_t universe_product(const CostParams& params) {
    std::int64_t product = 1;
    for (std::int64_t i : params.universe_powers) product *= i;
    return product;
}

std::int64_t decision_field(const CostParams& params) {
    return params.rules * universe_product(params) * params.classes;
}

}  // namespace

void validate_params(const CostParams& params) {
    require_count(params.tau, "tau");
    require_count(params.gamma, "gamma");
    require_count(params.n_inputs, "n_inputs");
    require_count(params.big_n, "N");
    require_count(params.rules, "L");
    require_count(params.classes, "K");
    if (static_cast<std::int64_t>(params.universe_powers.size()) != params.big_n) {
        throw ValidationError("I: expected " + std::to_string(params.big_n) + " entries, got " +
                              std::to_string(params.universe_powers.size()));
    }
    if (static_cast<std::int64_t>(params.fuzzy_powers.size()) != params.big_n) {
        throw ValidationError("J: expected " + std::to_string(params.big_n) + " entries, got " +
                              std::to_string(params.fuzzy_powers.size()));
    }
    for (std::size_t i = 0; i < params.universe_powers.size(); ++i) {
        require_count(params.universe_powers[i], "I[" + std::to_string(i) + "]");
        require_count(params.fuzzy_powers[i], "J[" + std::to_string(i) + "]");
    }
}

std::int64_t time_flexible(const CostParams& params) {
    return params.tau * (6 + params.n_inputs * params.gamma + 2 * params.gamma);
}

std::int64_t time_rigid(const CostParams& params) {
    return params.tau * (6 + 3 * params.gamma);
}

std::int64_t memory_flexible(const CostParams& params) {
    std::int64_t total = 0;
    for (std::int64_t n = 0; n < params.big_n; ++n) {
        std::int64_t i_n = params.universe_powers[n];
        std::int64_t j_n = params.fuzzy_powers[n];
        total += params.gamma + i_n + i_n * j_n * params.gamma;
        if (!params.decision_field_global) total += decision_field(params);
    }
    if (params.decision_field_global) total += decision_field(params);
    return total + params.classes * params.gamma;
}

std::int64_t memory_rigid(const CostParams& params) {
    std::int64_t total = 0;
    for (std::int64_t n = 0; n < params.big_n; ++n) {
        std::int64_t i_n = params.universe_powers[n];
        std::int64_t j_n = params.fuzzy_powers[n];
        total += params.gamma * i_n + i_n + 2 * i_n * j_n * params.gamma +
                 2 * params.big_n * j_n * params.gamma;
    }
    return total + params.classes * params.gamma;
}

CostReport compare(const CostParams& params) {
    CostReport report;
    report.time_flexible = time_flexible(params);
    report.time_rigid = time_rigid(params);
    report.delta_time = report.time_flexible - report.time_rigid;
    if (report.delta_time != params.tau * params.gamma * (params.n_inputs - 1)) {
        throw std::logic_error("delta_time does not satisfy tau*gamma*(n-1)");
    }
    report.memory_flexible = memory_flexible(params);
    report.memory_rigid = memory_rigid(params);
    report.delta_memory = report.memory_flexible - report.memory_rigid;

    // memory_flexible is affine in L: delta(L) = base + per_rule * L.
    std::int64_t per_rule = universe_product(params) * params.classes;
    if (!params.decision_field_global) per_rule *= params.big_n;
    std::int64_t base = report.delta_memory - per_rule * params.rules;
    if (per_rule <= 0) {
        report.crossover_rules = base > 0 ? 1 : -1;
    } else if (base >= 0) {
        report.crossover_rules = 1;
    } else {
        report.crossover_rules = (-base) / per_rule + 1;
    }
    return report;
}

CostParams parse_cost_params(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("cost parameters are not well-formed JSON");
    if (!doc.is_object()) throw SchemaError("cost parameters root must be an object");

    auto require_int = [&](const char* key) -> std::int64_t {
        auto it = doc.find(key);
        if (it == doc.end()) throw SchemaError(std::string(key) + ": missing field");
        if (!it->is_number_integer()) {
            throw SchemaError(std::string(key) + ": expected an integer");
        }
        return it->get<std::int64_t>();
    };
    auto require_int_list = [&](const char* key) -> std::vector<std::int64_t> {
        auto it = doc.find(key);
        if (it == doc.end()) throw SchemaError(std::string(key) + ": missing field");
        if (!it->is_array()) throw SchemaError(std::string(key) + ": expected an array");
        std::vector<std::int64_t> values;
        for (const auto& v : *it) {
            if (!v.is_number_integer()) {
                throw SchemaError(std::string(key) + ": expected integer entries");
            }
            values.push_back(v.get<std::int64_t>());
        }
        return values;
    };

    CostParams params;
    params.tau = require_int("tau");
    params.gamma = require_int("gamma");
    params.n_inputs = require_int("n_inputs");
    params.big_n = require_int("N");
    params.universe_powers = require_int_list("I");
    params.fuzzy_powers = require_int_list("J");
    params.rules = require_int("L");
    params.classes = require_int("K");
    if (auto it = doc.find("decision_field_global"); it != doc.end()) {
        if (!it->is_boolean()) throw SchemaError("decision_field_global: expected a boolean");
        params.decision_field_global = it->get<bool>();
    }
    validate_params(params);
    return params;
}

std::string render_cost_report(const CostReport& report) {
    std::ostringstream out;
    auto row = [&](const char* label, std::int64_t value) {
        out << label;
        for (std::size_t i = std::string(label).size(); i < 17; ++i) out << ' ';
        out << value << '\n';
    };
    row("time_flexible", report.time_flexible);
    row("time_rigid", report.time_rigid);
    row("delta_time", report.delta_time);
    row("memory_flexible", report.memory_flexible);
    row("memory_rigid", report.memory_rigid);
    row("delta_memory", report.delta_memory);
    row("crossover_rules", report.crossover_rules);
    return out.str();
}

}  // namespace pamusim
