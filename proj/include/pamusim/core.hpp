#ifndef PAMUSIM_CORE_HPP
#define PAMUSIM_CORE_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pamusim/errors.hpp"
#include "pamusim/fuzzifier.hpp"

namespace pamusim {

/// One attribute of a situation chain. Symbols are whitespace-free text
/// atoms, so fuzzifier term names can serve directly as attributes.
using Symbol = std::string;

/// Category a reference situation belongs to. `id` is the 1-based position
/// in the configured class list.
struct ClassLabel {
    std::string name;
    int id = 0;

    bool operator==(const ClassLabel&) const = default;
};

/// Fixed-width control word, most significant bit first.
struct ControlWord {
    std::string bits;

    int width() const { return static_cast<int>(bits.size()); }
    bool operator==(const ControlWord&) const = default;
};

/// Ordered finite vocabulary. The list order assigns each symbol its decoder
/// line (1-based).
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    /// Decoder line of `symbol`, or nullopt when no output is activated.
    /// Unknown symbols are not an error: they model interference.
    std::optional<int> decode(const Symbol& symbol) const;

    bool contains(const Symbol& symbol) const { return decode(symbol).has_value(); }
    int size() const { return static_cast<int>(symbols_.size()); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, int> lines_;
};

/// Free-function form of Alphabet::decode.
std::optional<int> decode(const Symbol& symbol, const Alphabet& alphabet);

/// One reference situation: a named symbol chain with its class.
struct EtalonSet {
    std::string name;
    ClassLabel class_label;
    std::vector<Symbol> symbols;

    int length() const { return static_cast<int>(symbols.size()); }
    bool operator==(const EtalonSet&) const = default;
};

/// Everything the processor needs: vocabulary, etalon store, classes and
/// their control words, plus the optional fuzzifier front end.
struct ProcessorConfig {
    Alphabet alphabet;
    std::vector<EtalonSet> etalons;
    std::vector<ClassLabel> classes;
    std::map<std::string, ControlWord> control_table;  // keyed by class name
    int word_width = 0;
    bool correction_enabled = true;
    std::optional<FuzzifierSpec> fuzzifier;

    bool operator==(const ProcessorConfig&) const = default;
};

/// Parses and validates a JSON configuration document. Throws SchemaError
/// for malformed documents and ValidationError (naming the offending field)
/// for invariant violations.
ProcessorConfig parse_config(const std::string& text);

/// Inverse of parse_config: parse_config(serialize_config(c)) == c for every
/// valid configuration.
std::string serialize_config(const ProcessorConfig& config);

namespace detail {
bool has_whitespace(const std::string& text);
}

}  // namespace pamusim

#endif  // PAMUSIM_CORE_HPP
