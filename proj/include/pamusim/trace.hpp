#ifndef PAMUSIM_TRACE_HPP
#define PAMUSIM_TRACE_HPP

#include <set>
#include <string>
#include <vector>

#include "pamusim/core.hpp"
#include "pamusim/pamu.hpp"

namespace pamusim {

/// One parsed trace line.
struct TraceStep {
    int step = 0;
    Symbol symbol;
    int position = 0;  // distributor before the step
    std::vector<int> fired;
    bool k1 = false;
    std::vector<bool> detectors;  // detector values after the step
    std::vector<int> k2_lanes;
};

/// Renders a run as one line per input symbol:
/// `step=1 sym=e pos=1 fired=[2] K1=1 det=010 K2=[]`.
std::string render_trace(const PamuMatrix& matrix, const std::vector<StepOutcome>& steps);

/// Parses text produced by render_trace. Throws SchemaError on malformed
/// lines.
std::vector<TraceStep> parse_trace(const std::string& text);

/// Re-runs the automaton on the symbols recorded in a trace and polls.
/// Lets a trace consumer confirm the printed steps reproduce the decision.
std::set<int> replay_accepted(const PamuMatrix& matrix, const std::vector<TraceStep>& steps);

}  // namespace pamusim

#endif  // PAMUSIM_TRACE_HPP
