#include "pamusim/trace.hpp"

#include <sstream>
#include <string>

namespace pamusim {

namespace {

std::string lane_list(const std::vector<int>& lanes) {
    std::string out = "[";
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(lanes[i]);
    }
    return out + "]";
}

std::string detector_bits(const std::vector<bool>& detectors) {
    std::string out;
    for (bool bit : detectors) out += bit ? '1' : '0';
    return out;
}

// "key=value" splitter; value runs to the next space.
std::string take_field(std::istringstream& in, const std::string& key, int line_no) {
    std::string token;
    if (!(in >> token) || token.rfind(key + "=", 0) != 0) {
        throw SchemaError("trace line " + std::to_string(line_no) + ": expected " + key + "=");
    }
    return token.substr(key.size() + 1);
}

std::vector<int> parse_lane_list(const std::string& text, int line_no) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw SchemaError("trace line " + std::to_string(line_no) + ": malformed lane list \"" +
                          text + "\"");
    }
    std::vector<int> lanes;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            lanes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SchemaError("trace line " + std::to_string(line_no) + ": bad lane \"" + item +
                              "\"");
        }
    }
    return lanes;
}

int parse_int(const std::string& text, const std::string& key, int line_no) {
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw SchemaError("trace line " + std::to_string(line_no) + ": bad " + key + " \"" +
                          text + "\"");
    }
}

}  // namespace

std::string render_trace(const PamuMatrix& matrix, const std::vector<StepOutcome>& steps) {
    std::ostringstream out;
    std::vector<bool> detectors(matrix.lane_count, true);
    int number = 0;
    for (const StepOutcome& outcome : steps) {
        if (outcome.k1) {
            std::fill(detectors.begin(), detectors.end(), false);
            for (int lane : outcome.fired) detectors[lane - 1] = true;
        }
        out << "step=" << ++number << " sym=" << outcome.input_symbol
            << " pos=" << outcome.position_before << " fired=" << lane_list(outcome.fired)
            << " K1=" << (outcome.k1 ? 1 : 0) << " det=" << detector_bits(detectors)
            << " K2=" << lane_list(outcome.k2_lanes) << '\n';
    }
    return out.str();
}

std::vector<TraceStep> parse_trace(const std::string& text) {
    std::vector<TraceStep> steps;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream in(line);
        TraceStep step;
        step.step = parse_int(take_field(in, "step", line_no), "step", line_no);
        step.symbol = take_field(in, "sym", line_no);
        step.position = parse_int(take_field(in, "pos", line_no), "pos", line_no);
        step.fired = parse_lane_list(take_field(in, "fired", line_no), line_no);
        std::string k1 = take_field(in, "K1", line_no);
        if (k1 != "0" && k1 != "1") {
            throw SchemaError("trace line " + std::to_string(line_no) + ": K1 must be 0 or 1");
        }
        step.k1 = k1 == "1";
        std::string det = take_field(in, "det", line_no);
        for (char c : det) {
            if (c != '0' && c != '1') {
                throw SchemaError("trace line " + std::to_string(line_no) +
                                  ": det must be a bit string");
            }
            step.detectors.push_back(c == '1');
        }
        step.k2_lanes = parse_lane_list(take_field(in, "K2", line_no), line_no);
        steps.push_back(std::move(step));
    }
    return steps;
}

std::set<int> replay_accepted(const PamuMatrix& matrix, const std::vector<TraceStep>& steps) {
    std::vector<Symbol> input;
    input.reserve(steps.size());
    for (const TraceStep& step : steps) input.push_back(step.symbol);
    return match_sequence(matrix, input).accepted;
}

}  // namespace pamusim
