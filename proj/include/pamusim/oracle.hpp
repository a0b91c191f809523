#ifndef PAMUSIM_ORACLE_HPP
#define PAMUSIM_ORACLE_HPP

#include <set>
#include <vector>

#include "pamusim/core.hpp"

namespace pamusim {

/// Brute-force reference answer, computed without any automaton machinery.
struct OracleResult {
    std::set<int> accepted;                    // 1-based lanes
    std::vector<Symbol> consumed_subsequence;  // symbols the shared cursor took
};

/// Replays the matching discipline directly on the etalon lists: a shared
/// cursor over all surviving chains, advanced whenever any survivor expects
/// the incoming symbol, with non-advancing symbols dropped. A lane is
/// accepted when the symbols taken spell out its chain exactly.
OracleResult naive_match(const std::vector<EtalonSet>& etalons, const std::vector<Symbol>& input,
                         bool correction_enabled);

/// Strictest answer: lanes whose chain equals the raw input verbatim,
/// interference included. Always a subset of naive_match's accepted set.
std::set<int> exact_equality_match(const std::vector<EtalonSet>& etalons,
                                   const std::vector<Symbol>& input);

}  // namespace pamusim

#endif  // PAMUSIM_ORACLE_HPP
