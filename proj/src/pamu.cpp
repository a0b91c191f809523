#include "pamusim/pamu.hpp"

#include <algorithm>
#include <sstream>

namespace pamusim {

const Symbol* PamuMatrix::cell(int lane, int pos) const {
    if (lane < 1 || lane > lane_count) return nullptr;
    if (pos < 1 || pos > end_markers[lane - 1]) return nullptr;
    return &cells[lane - 1][pos - 1];
}

PamuMatrix flash(const std::vector<EtalonSet>& etalons, const Alphabet& alphabet,
                 bool correction_enabled) {
    if (etalons.empty()) throw EmptyStoreError("etalon store is empty");

    PamuMatrix matrix;
    matrix.correction_enabled = correction_enabled;
    matrix.lane_count = static_cast<int>(etalons.size());
    for (const EtalonSet& etalon : etalons) {
        if (etalon.symbols.empty()) {
            throw ValidationError("etalon \"" + etalon.name + "\" is empty");
        }
        for (const Symbol& s : etalon.symbols) {
            if (!alphabet.contains(s)) {
                throw ValidationError("etalon \"" + etalon.name + "\": symbol \"" + s +
                                      "\" not in alphabet");
            }
        }
        if (!correction_enabled && !matrix.cells.empty() &&
            etalon.symbols.size() != matrix.cells.front().size()) {
            throw UnequalLengthsError("etalon \"" + etalon.name +
                                      "\": lengths differ and correction is disabled");
        }
        matrix.cells.push_back(etalon.symbols);
        matrix.end_markers.push_back(etalon.length());
        matrix.lane_classes.push_back(etalon.class_label);
        matrix.lane_names.push_back(etalon.name);
        matrix.depth = std::max(matrix.depth, etalon.length());
    }
    return matrix;
}

PamuMatrix flash(const ProcessorConfig& config) {
    return flash(config.etalons, config.alphabet, config.correction_enabled);
}

AutomatonState init_state(const PamuMatrix& matrix) {
    AutomatonState state;
    state.position = 1;
    state.detectors.assign(matrix.lane_count, true);
    return state;
}

StepResult step(const PamuMatrix& matrix, const AutomatonState& state, const Symbol& symbol) {
    if (state.position > matrix.depth) {
        throw AutomatonExhaustedError("distributor at position " +
                                      std::to_string(state.position) + " is past the matrix");
    }

    StepResult result{StepOutcome{}, state};
    StepOutcome& outcome = result.outcome;
    outcome.input_symbol = symbol;
    outcome.position_before = state.position;

    for (int lane = 1; lane <= matrix.lane_count; ++lane) {
        if (!state.detectors[lane - 1]) continue;
        const Symbol* cell = matrix.cell(lane, state.position);
        if (cell != nullptr && *cell == symbol) outcome.fired.push_back(lane);
    }
    outcome.k1 = !outcome.fired.empty();

    AutomatonState& next = result.state;
    if (outcome.k1) {
        std::fill(next.detectors.begin(), next.detectors.end(), false);
        for (int lane : outcome.fired) {
            next.detectors[lane - 1] = true;
            if (state.position == matrix.end_markers[lane - 1]) {
                outcome.k2_lanes.push_back(lane);
                next.completed.insert(lane);
            }
        }
        next.position += 1;
        next.steps_consumed += 1;
    } else {
        next.steps_skipped += 1;
    }
    return result;
}

std::set<int> finalize(const PamuMatrix& matrix, const AutomatonState& state) {
    if (matrix.correction_enabled) return state.completed;
    std::set<int> accepted;
    if (state.position == matrix.depth + 1) {
        for (int lane = 1; lane <= matrix.lane_count; ++lane) {
            if (state.detectors[lane - 1]) accepted.insert(lane);
        }
    }
    return accepted;
}

MatchReport match_sequence(const PamuMatrix& matrix, const std::vector<Symbol>& input) {
    MatchReport report;
    AutomatonState state = init_state(matrix);
    for (const Symbol& symbol : input) {
        if (state.position > matrix.depth) {
            // The unit keeps clocking after the distributor leaves the
            // matrix; nothing can fire, so the symbol is a skipped step.
            StepOutcome outcome;
            outcome.input_symbol = symbol;
            outcome.position_before = state.position;
            state.steps_skipped += 1;
            report.trace.push_back(std::move(outcome));
            continue;
        }
        StepResult result = step(matrix, state, symbol);
        state = std::move(result.state);
        report.trace.push_back(std::move(result.outcome));
    }
    report.accepted = finalize(matrix, state);
    report.final_state = std::move(state);
    return report;
}

std::vector<Symbol> consumed_symbols(const std::vector<StepOutcome>& steps) {
    std::vector<Symbol> consumed;
    for (const StepOutcome& outcome : steps) {
        if (outcome.k1) consumed.push_back(outcome.input_symbol);
    }
    return consumed;
}

IndicatorState indicator_feed(const IndicatorState& state, bool alpha) {
    return IndicatorState{state.bit && alpha, state.fed + 1};
}

IndicatorState indicator_feed(const IndicatorState& state, const Symbol& expected,
                              const Symbol& actual) {
    return indicator_feed(state, expected == actual);
}

bool indicator_poll(const IndicatorState& state, int etalon_length) {
    return state.bit && state.fed == etalon_length;
}

bool indicator_match(const std::vector<Symbol>& etalon, const std::vector<Symbol>& input) {
    IndicatorState state;
    for (std::size_t j = 0; j < input.size(); ++j) {
        bool alpha = j < etalon.size() && etalon[j] == input[j];
        state = indicator_feed(state, alpha);
    }
    return indicator_poll(state, static_cast<int>(etalon.size()));
}

std::string dump_matrix(const PamuMatrix& matrix) {
    std::ostringstream out;
    for (int lane = 1; lane <= matrix.lane_count; ++lane) {
        out << "lane=" << lane << " class=" << matrix.lane_classes[lane - 1].name
            << " len=" << matrix.end_markers[lane - 1] << " cells=";
        const auto& row = matrix.cells[lane - 1];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pamusim
