#ifndef PAMUSIM_COSTMODEL_HPP
#define PAMUSIM_COSTMODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pamusim {

/// Per-component clock durations of the recognition path. Carried as
/// metadata only: the closed-form time expressions below are authoritative.
struct ComponentTimes {
    std::int64_t t_c = 0;
    std::int64_t t_l = 0;
    std::int64_t t_n_c = 0;
    std::int64_t t_n_min = 0;
    std::int64_t t_n_max = 0;

    bool operator==(const ComponentTimes&) const = default;
};

/// Sizing parameters shared by the time and memory models. All integer
/// counts; the cost path never touches floating point.
struct CostParams {
    std::int64_t tau = 1;       // control signal duration
    std::int64_t gamma = 1;     // processing word width in bits
    std::int64_t n_inputs = 1;  // input variables on the time path
    std::int64_t big_n = 1;     // variables summed over on the memory path
    std::vector<std::int64_t> universe_powers;  // I_n, one per memory variable
    std::vector<std::int64_t> fuzzy_powers;     // J_n, one per memory variable
    std::int64_t rules = 1;     // L
    std::int64_t classes = 1;   // K
    bool decision_field_global = true;  // one shared decision field vs one per variable
    std::optional<ComponentTimes> component_times;

    bool operator==(const CostParams&) const = default;
};

/// Throws ValidationError unless every count is at least 1 and both
/// per-variable lists have big_n entries.
void validate_params(const CostParams& params);

/// Recognition time of the flexible organization: tau * (6 + n*gamma + 2*gamma).
std::int64_t time_flexible(const CostParams& params);

/// Recognition time of the rigid organization: tau * (6 + 3*gamma).
/// Independent of the number of input variables.
std::int64_t time_rigid(const CostParams& params);

/// Memory demand of the flexible organization in bits:
/// sum over variables of (gamma + I_n + I_n*J_n*gamma) plus the decision
/// field L * (prod I) * K (once when global, per variable otherwise) plus
/// the control word table K*gamma.
std::int64_t memory_flexible(const CostParams& params);

/// Memory demand of the rigid organization in bits:
/// sum over variables of (gamma*I_n + I_n + 2*I_n*J_n*gamma + 2*N*J_n*gamma)
/// plus the control word table K*gamma.
std::int64_t memory_rigid(const CostParams& params);

/// Side-by-side comparison of both organizations.
struct CostReport {
    std::int64_t time_flexible = 0;
    std::int64_t time_rigid = 0;
    std::int64_t delta_time = 0;  // flexible - rigid = tau * gamma * (n - 1)
    std::int64_t memory_flexible = 0;
    std::int64_t memory_rigid = 0;
    std::int64_t delta_memory = 0;      // flexible - rigid
    std::int64_t crossover_rules = -1;  // smallest L with delta_memory > 0, -1 if none

    bool operator==(const CostReport&) const = default;
};

/// Fills a report from the four formulas. delta_time is recomputed from the
/// identity tau*gamma*(n-1) and cross-checked against the subtraction.
CostReport compare(const CostParams& params);

/// Parses the cost parameter JSON document and validates it.
CostParams parse_cost_params(const std::string& text);

/// Aligned human-readable table of a report.
std::string render_cost_report(const CostReport& report);

}  // namespace pamusim

#endif  // PAMUSIM_COSTMODEL_HPP
