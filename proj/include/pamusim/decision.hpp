#ifndef PAMUSIM_DECISION_HPP
#define PAMUSIM_DECISION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pamusim/core.hpp"
#include "pamusim/pamu.hpp"

namespace pamusim {

enum class DecisionMode { full_coincidence, max_resemblance, min_difference };

enum class DecisionOutcome { matched, no_match, ambiguous };

/// What the decision stage produced for one input.
struct Decision {
    DecisionMode mode = DecisionMode::full_coincidence;
    DecisionOutcome outcome = DecisionOutcome::no_match;
    std::optional<ClassLabel> class_label;
    std::optional<ControlWord> control_word;
    std::vector<int> lanes;  // lanes behind the outcome; all tied lanes when ambiguous
    std::optional<double> score;
};

/// Accepts only verbatim matches. One distinct class wins; several distinct
/// classes are ambiguous; none is a no-match.
Decision classify_full_coincidence(const PamuMatrix& matrix, const MatchReport& report);

/// Positional matches over etalon length, best lane wins, ties go to the
/// lowest lane.
Decision classify_max_resemblance(const PamuMatrix& matrix, const std::vector<Symbol>& input);

/// Mismatches over the shorter length plus the length gap, lowest lane wins
/// ties.
Decision classify_min_difference(const PamuMatrix& matrix, const std::vector<Symbol>& input);

/// Positional agreement count over the compared prefix divided by the etalon
/// length.
double resemblance_score(const std::vector<Symbol>& etalon, const std::vector<Symbol>& input);

/// Positional disagreements over the compared prefix plus the length gap.
int difference_score(const std::vector<Symbol>& etalon, const std::vector<Symbol>& input);

/// Control word for a class name. Throws UnknownClassError when the control
/// table has no entry.
ControlWord emit_control(const ProcessorConfig& config, const std::string& class_name);

/// Fills in the decision's control word from the table when a class was
/// chosen.
Decision attach_control(const ProcessorConfig& config, Decision decision);

/// Render as the one-line report format, e.g.
/// `mode=full class=w1 word=10110011`.
std::string render_decision(const Decision& decision);

/// Short mode tag used in reports: full, max, min.
std::string mode_name(DecisionMode mode);

}  // namespace pamusim

#endif  // PAMUSIM_DECISION_HPP
