#ifndef PAMUSIM_PAMU_HPP
#define PAMUSIM_PAMU_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pamusim/core.hpp"

namespace pamusim {

/// Flashed associative matrix. One lane per etalon, one column per chain
/// position. Lanes and positions are 1-based to match hardware numbering.
struct PamuMatrix {
    int lane_count = 0;
    int depth = 0;  // longest etalon length
    std::vector<std::vector<Symbol>> cells;  // cells[lane-1][pos-1]
    std::vector<int> end_markers;            // end_markers[lane-1] = etalon length
    std::vector<ClassLabel> lane_classes;
    std::vector<std::string> lane_names;
    bool correction_enabled = true;

    /// Cell content at (lane, pos), or nullptr past the lane's end marker.
    const Symbol* cell(int lane, int pos) const;
};

/// Live matching state. `position` is the distributor: the column every
/// lane's comparator reads next. It only advances on K1.
struct AutomatonState {
    int position = 1;
    std::vector<bool> detectors;  // detectors[lane-1]
    std::set<int> completed;      // lanes whose end marker fired (correction mode)
    int steps_consumed = 0;
    int steps_skipped = 0;
};

/// What one clock of the automaton did.
struct StepOutcome {
    Symbol input_symbol;
    std::vector<int> fired;  // lanes whose cell matched at position_before
    bool k1 = false;         // any lane fired: detectors latch, distributor shifts
    std::vector<int> k2_lanes;  // lanes completing their chain on this step
    int position_before = 1;
};

struct StepResult {
    StepOutcome outcome;
    AutomatonState state;
};

/// Result of running a whole input sequence.
struct MatchReport {
    std::set<int> accepted;  // lanes matching the input verbatim
    std::vector<StepOutcome> trace;
    AutomatonState final_state;
};

/// Burns the etalon store into a matrix. Throws EmptyStoreError for an empty
/// store, ValidationError for symbols outside the alphabet, and
/// UnequalLengthsError when correction is disabled and lengths differ.
PamuMatrix flash(const std::vector<EtalonSet>& etalons, const Alphabet& alphabet,
                 bool correction_enabled);
PamuMatrix flash(const ProcessorConfig& config);

/// Fresh state: position 1, every detector set, nothing completed.
AutomatonState init_state(const PamuMatrix& matrix);

/// Feeds one symbol. On K1 the fired set becomes the new detector values and
/// the distributor shifts; on K1=0 both hold and the step counts as skipped.
/// Throws AutomatonExhaustedError once the distributor has left the matrix.
StepResult step(const PamuMatrix& matrix, const AutomatonState& state, const Symbol& symbol);

/// End-of-input poll: which lanes matched their full chain. Under correction
/// this is the completed set; otherwise it needs every detector latched and
/// the distributor past the last column.
std::set<int> finalize(const PamuMatrix& matrix, const AutomatonState& state);

/// Runs a full sequence from a fresh state and polls. Never throws on long
/// inputs: symbols arriving after the distributor leaves the matrix are
/// recorded as skipped steps, since the unit keeps clocking.
MatchReport match_sequence(const PamuMatrix& matrix, const std::vector<Symbol>& input);

/// Symbols consumed by the matrix: inputs at K1 steps, in order.
std::vector<Symbol> consumed_symbols(const std::vector<StepOutcome>& steps);

/// Single-etalon indicator: S_0 = 1, S_j = S_{j-1} * alpha_j where alpha_j
/// is 1 iff consumed symbol j equals chain element j. Feed once per consumed
/// symbol.
struct IndicatorState {
    bool bit = true;
    int fed = 0;
};

/// The raw recurrence step.
IndicatorState indicator_feed(const IndicatorState& state, bool alpha);

/// Convenience step computing alpha from a symbol pair.
IndicatorState indicator_feed(const IndicatorState& state, const Symbol& expected,
                              const Symbol& actual);

/// End-of-input poll: 1 only when every recurrence step matched and exactly
/// etalon_length symbols were fed.
bool indicator_poll(const IndicatorState& state, int etalon_length);

/// Runs the recurrence for a whole input against one chain and polls.
bool indicator_match(const std::vector<Symbol>& etalon, const std::vector<Symbol>& input);

/// One line per lane: `lane=1 class=w1 len=5 cells=a,b,c,d,e`.
std::string dump_matrix(const PamuMatrix& matrix);

}  // namespace pamusim

#endif  // PAMUSIM_PAMU_HPP
