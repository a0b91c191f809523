#include "pamusim/oracle.hpp"

#include "pamusim/errors.hpp"

namespace pamusim {

// Kept deliberately free of pamu machinery: no matrix, no detector
// bitvectors. Agreement between this interpreter and the automaton is the
// point of the comparison.
OracleResult naive_match(const std::vector<EtalonSet>& etalons, const std::vector<Symbol>& input,
                         bool correction_enabled) {
    if (etalons.empty()) throw EmptyStoreError("etalon store is empty");
    std::size_t max_len = 0;
    for (const EtalonSet& etalon : etalons) {
        if (etalon.symbols.empty()) {
            throw ValidationError("etalon \"" + etalon.name + "\" is empty");
        }
        if (!correction_enabled && etalon.symbols.size() != etalons.front().symbols.size()) {
            throw UnequalLengthsError("etalon \"" + etalon.name +
                                      "\": lengths differ and correction is disabled");
        }
        max_len = std::max(max_len, etalon.symbols.size());
    }

    std::vector<int> survivors;
    for (int i = 1; i <= static_cast<int>(etalons.size()); ++i) survivors.push_back(i);

    OracleResult result;
    std::set<int> completed;
    std::size_t cursor = 0;  // next chain element every survivor is asked for

    for (const Symbol& symbol : input) {
        std::vector<int> fired;
        for (int lane : survivors) {
            const auto& chain = etalons[lane - 1].symbols;
            if (cursor < chain.size() && chain[cursor] == symbol) fired.push_back(lane);
        }
        if (fired.empty()) continue;  // skipped symbol, nothing changes
        for (int lane : fired) {
            if (cursor + 1 == etalons[lane - 1].symbols.size()) completed.insert(lane);
        }
        survivors = fired;
        result.consumed_subsequence.push_back(symbol);
        ++cursor;
    }

    if (correction_enabled) {
        result.accepted = completed;
    } else if (cursor == max_len) {
        result.accepted.insert(survivors.begin(), survivors.end());
    }
    return result;
}

std::set<int> exact_equality_match(const std::vector<EtalonSet>& etalons,
                                   const std::vector<Symbol>& input) {
    std::set<int> matched;
    for (int i = 1; i <= static_cast<int>(etalons.size()); ++i) {
        if (etalons[i - 1].symbols == input) matched.insert(i);
    }
    return matched;
}

}  // namespace pamusim
