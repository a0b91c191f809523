#include "pamusim/decision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace pamusim {

namespace {

std::vector<Symbol> lane_chain(const PamuMatrix& matrix, int lane) {
    return matrix.cells[lane - 1];
}

std::string format_score(double score) {
    if (score == std::floor(score) && std::abs(score) < 1e15) {
        return std::to_string(static_cast<long long>(score));
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", score);
    return buf;
}

}  // namespace

Decision classify_full_coincidence(const PamuMatrix& matrix, const MatchReport& report) {
    Decision decision;
    decision.mode = DecisionMode::full_coincidence;
    decision.lanes.assign(report.accepted.begin(), report.accepted.end());

    std::set<std::string> names;
    for (int lane : report.accepted) names.insert(matrix.lane_classes[lane - 1].name);

    if (names.empty()) {
        decision.outcome = DecisionOutcome::no_match;
    } else if (names.size() == 1) {
        decision.outcome = DecisionOutcome::matched;
        decision.class_label = matrix.lane_classes[*report.accepted.begin() - 1];
    } else {
        decision.outcome = DecisionOutcome::ambiguous;
    }
    return decision;
}

Decision classify_max_resemblance(const PamuMatrix& matrix, const std::vector<Symbol>& input) {
    Decision decision;
    decision.mode = DecisionMode::max_resemblance;
    int best_lane = 1;
    double best = resemblance_score(lane_chain(matrix, 1), input);
    for (int lane = 2; lane <= matrix.lane_count; ++lane) {
        double score = resemblance_score(lane_chain(matrix, lane), input);
        if (score > best) {
            best = score;
            best_lane = lane;
        }
    }
    decision.outcome = DecisionOutcome::matched;
    decision.class_label = matrix.lane_classes[best_lane - 1];
    decision.lanes = {best_lane};
    decision.score = best;
    return decision;
}

Decision classify_min_difference(const PamuMatrix& matrix, const std::vector<Symbol>& input) {
    Decision decision;
    decision.mode = DecisionMode::min_difference;
    int best_lane = 1;
    int best = difference_score(lane_chain(matrix, 1), input);
    for (int lane = 2; lane <= matrix.lane_count; ++lane) {
        int score = difference_score(lane_chain(matrix, lane), input);
        if (score < best) {
            best = score;
            best_lane = lane;
        }
    }
    decision.outcome = DecisionOutcome::matched;
    decision.class_label = matrix.lane_classes[best_lane - 1];
    decision.lanes = {best_lane};
    decision.score = best;
    return decision;
}

double resemblance_score(const std::vector<Symbol>& etalon, const std::vector<Symbol>& input) {
    std::size_t compared = std::min(etalon.size(), input.size());
    int matches = 0;
    for (std::size_t j = 0; j < compared; ++j) {
        if (etalon[j] == input[j]) ++matches;
    }
    return static_cast<double>(matches) / static_cast<double>(etalon.size());
}

int difference_score(const std::vector<Symbol>& etalon, const std::vector<Symbol>& input) {
    std::size_t compared = std::min(etalon.size(), input.size());
    int mismatches = 0;
    for (std::size_t j = 0; j < compared; ++j) {
        if (etalon[j] != input[j]) ++mismatches;
    }
    auto gap = static_cast<int>(std::max(etalon.size(), input.size()) - compared);
    return mismatches + gap;
}

ControlWord emit_control(const ProcessorConfig& config, const std::string& class_name) {
    auto it = config.control_table.find(class_name);
    if (it == config.control_table.end()) {
        throw UnknownClassError("control_table: unknown class \"" + class_name + "\"");
    }
    return it->second;
}

Decision attach_control(const ProcessorConfig& config, Decision decision) {
    if (decision.outcome == DecisionOutcome::matched && decision.class_label) {
        decision.control_word = emit_control(config, decision.class_label->name);
    }
    return decision;
}

std::string render_decision(const Decision& decision) {
    std::ostringstream out;
    out << "mode=" << mode_name(decision.mode);
    switch (decision.outcome) {
        case DecisionOutcome::matched:
            out << " class=" << decision.class_label->name;
            if (decision.control_word) out << " word=" << decision.control_word->bits;
            if (decision.score) out << " score=" << format_score(*decision.score);
            break;
        case DecisionOutcome::no_match:
            out << " class=NONE";
            break;
        case DecisionOutcome::ambiguous: {
            out << " class=AMBIGUOUS lanes=[";
            for (std::size_t i = 0; i < decision.lanes.size(); ++i) {
                if (i > 0) out << ',';
                out << decision.lanes[i];
            }
            out << ']';
            break;
        }
    }
    return out.str();
}

std::string mode_name(DecisionMode mode) {
    switch (mode) {
        case DecisionMode::full_coincidence: return "full";
        case DecisionMode::max_resemblance: return "max";
        case DecisionMode::min_difference: return "min";
    }
    return "full";
}

}  // namespace pamusim
