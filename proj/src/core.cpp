#include "pamusim/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pamusim {

namespace detail {

bool has_whitespace(const std::string& text) {
    return std::any_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace detail

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
        const Symbol& s = symbols_[i];
        if (s.empty()) {
            throw ValidationError("alphabet: symbol at index " + std::to_string(i) + " is empty");
        }
        if (detail::has_whitespace(s)) {
            throw ValidationError("alphabet: symbol \"" + s + "\" contains whitespace");
        }
        if (!lines_.emplace(s, i + 1).second) {
            throw ValidationError("alphabet: duplicate symbol \"" + s + "\"");
        }
    }
}

std::optional<int> Alphabet::decode(const Symbol& symbol) const {
    auto it = lines_.find(symbol);
    if (it == lines_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> decode(const Symbol& symbol, const Alphabet& alphabet) {
    return alphabet.decode(symbol);
}

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("configuration is not well-formed JSON");
    if (!doc.is_object()) throw SchemaError("configuration root must be an object");
    return doc;
}

const json& require_field(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::string require_string(const json& value, const std::string& where) {
    if (!value.is_string()) throw SchemaError(where + ": expected a string");
    return value.get<std::string>();
}

double require_number(const json& value, const std::string& where) {
    if (!value.is_number()) throw SchemaError(where + ": expected a number");
    return value.get<double>();
}

FuzzyTerm parse_term(const json& node, const std::string& where) {
    if (!node.is_object()) throw SchemaError(where + ": expected an object");
    FuzzyTerm term;
    term.name = require_string(require_field(node, "name", where), where + ".name");
    const json& points = require_field(node, "points", where);
    if (!points.is_array()) throw SchemaError(where + ".points: expected an array");
    for (const json& p : points) {
        if (!p.is_array() || p.size() != 2) {
            throw SchemaError(where + ".points: each breakpoint must be a [x, degree] pair");
        }
        term.points.emplace_back(require_number(p[0], where + ".points"),
                                 require_number(p[1], where + ".points"));
    }
    return term;
}

FuzzifierSpec parse_fuzzifier(const json& node) {
    if (!node.is_object()) throw SchemaError("fuzzifier: expected an object");
    FuzzifierSpec spec;
    const json& vars = require_field(node, "variables", "fuzzifier");
    if (!vars.is_array()) throw SchemaError("fuzzifier.variables: expected an array");
    for (const json& v : vars) {
        std::string where = "fuzzifier.variables[" + std::to_string(spec.variables.size()) + "]";
        if (!v.is_object()) throw SchemaError(where + ": expected an object");
        LinguisticVariable var;
        var.name = require_string(require_field(v, "name", where), where + ".name");
        const json& universe = require_field(v, "universe", where);
        if (!universe.is_array() || universe.size() != 2) {
            throw SchemaError(where + ".universe: expected [lo, hi]");
        }
        var.lo = require_number(universe[0], where + ".universe");
        var.hi = require_number(universe[1], where + ".universe");
        if (auto it = v.find("clamp"); it != v.end()) {
            if (!it->is_boolean()) throw SchemaError(where + ".clamp: expected a boolean");
            var.clamp = it->get<bool>();
        }
        const json& terms = require_field(v, "terms", where);
        if (!terms.is_array()) throw SchemaError(where + ".terms: expected an array");
        for (const json& t : terms) {
            var.terms.push_back(
                parse_term(t, where + ".terms[" + std::to_string(var.terms.size()) + "]"));
        }
        validate_variable(var);
        spec.variables.push_back(std::move(var));
    }
    return spec;
}

}  // namespace

ProcessorConfig parse_config(const std::string& text) {
    json doc = parse_document(text);
    ProcessorConfig config;

    const json& alphabet_node = require_field(doc, "alphabet", "configuration");
    if (!alphabet_node.is_array()) throw SchemaError("alphabet: expected an array");
    std::vector<Symbol> symbols;
    for (const json& s : alphabet_node) {
        symbols.push_back(require_string(s, "alphabet"));
    }
    if (symbols.empty()) throw ValidationError("alphabet: must not be empty");
    config.alphabet = Alphabet(std::move(symbols));

    const json& width_node = require_field(doc, "word_width", "configuration");
    if (!width_node.is_number_integer()) throw SchemaError("word_width: expected an integer");
    config.word_width = width_node.get<int>();
    if (config.word_width < 1) throw ValidationError("word_width: must be at least 1");

    if (auto it = doc.find("correction"); it != doc.end()) {
        if (!it->is_boolean()) throw SchemaError("correction: expected a boolean");
        config.correction_enabled = it->get<bool>();
    }

    const json& classes_node = require_field(doc, "classes", "configuration");
    if (!classes_node.is_array()) throw SchemaError("classes: expected an array");
    std::set<std::string> class_names;
    for (const json& c : classes_node) {
        std::string where = "classes[" + std::to_string(config.classes.size()) + "]";
        if (!c.is_object()) throw SchemaError(where + ": expected an object");
        ClassLabel label;
        label.name = require_string(require_field(c, "name", where), where + ".name");
        label.id = static_cast<int>(config.classes.size()) + 1;
        if (label.name.empty() || detail::has_whitespace(label.name)) {
            throw ValidationError(where + ": invalid class name \"" + label.name + "\"");
        }
        if (!class_names.insert(label.name).second) {
            throw ValidationError("classes: duplicate class \"" + label.name + "\"");
        }
        config.classes.push_back(std::move(label));
    }
    if (config.classes.empty()) throw ValidationError("classes: must not be empty");

    const json& etalons_node = require_field(doc, "etalons", "configuration");
    if (!etalons_node.is_array()) throw SchemaError("etalons: expected an array");
    std::set<std::string> etalon_names;
    for (const json& e : etalons_node) {
        std::string where = "etalons[" + std::to_string(config.etalons.size()) + "]";
        if (!e.is_object()) throw SchemaError(where + ": expected an object");
        EtalonSet etalon;
        etalon.name = require_string(require_field(e, "name", where), where + ".name");
        if (etalon.name.empty() || detail::has_whitespace(etalon.name)) {
            throw ValidationError(where + ": invalid etalon name \"" + etalon.name + "\"");
        }
        if (!etalon_names.insert(etalon.name).second) {
            throw ValidationError("etalons: duplicate etalon \"" + etalon.name + "\"");
        }
        std::string class_name =
            require_string(require_field(e, "class", where), where + ".class");
        auto cls = std::find_if(config.classes.begin(), config.classes.end(),
                                [&](const ClassLabel& c) { return c.name == class_name; });
        if (cls == config.classes.end()) {
            throw ValidationError("etalons." + etalon.name + ": unknown class \"" + class_name +
                                  "\"");
        }
        etalon.class_label = *cls;
        const json& syms = require_field(e, "symbols", where);
        if (!syms.is_array()) throw SchemaError(where + ".symbols: expected an array");
        for (const json& s : syms) {
            Symbol sym = require_string(s, where + ".symbols");
            if (!config.alphabet.contains(sym)) {
                throw ValidationError("etalons." + etalon.name + ": symbol \"" + sym +
                                      "\" not in alphabet");
            }
            etalon.symbols.push_back(std::move(sym));
        }
        if (etalon.symbols.empty()) {
            throw ValidationError("etalons." + etalon.name + ": must contain at least one symbol");
        }
        config.etalons.push_back(std::move(etalon));
    }
    if (config.etalons.empty()) throw ValidationError("etalons: must not be empty");

    const json& table_node = require_field(doc, "control_table", "configuration");
    if (!table_node.is_object()) throw SchemaError("control_table: expected an object");
    for (auto it = table_node.begin(); it != table_node.end(); ++it) {
        if (class_names.count(it.key()) == 0) {
            throw ValidationError("control_table: unknown class \"" + it.key() + "\"");
        }
        std::string bits = require_string(it.value(), "control_table." + it.key());
        if (static_cast<int>(bits.size()) != config.word_width) {
            throw ValidationError("control_table." + it.key() + ": width " +
                                  std::to_string(bits.size()) + " does not match word_width " +
                                  std::to_string(config.word_width));
        }
        if (bits.find_first_not_of("01") != std::string::npos) {
            throw ValidationError("control_table." + it.key() + ": bits must be 0 or 1");
        }
        config.control_table.emplace(it.key(), ControlWord{std::move(bits)});
    }
    for (const ClassLabel& c : config.classes) {
        if (config.control_table.count(c.name) == 0) {
            throw ValidationError("control_table: missing entry for class \"" + c.name + "\"");
        }
    }

    if (auto it = doc.find("fuzzifier"); it != doc.end() && !it->is_null()) {
        config.fuzzifier = parse_fuzzifier(*it);
    }

    return config;
}

std::string serialize_config(const ProcessorConfig& config) {
    nlohmann::ordered_json doc;
    doc["alphabet"] = config.alphabet.symbols();
    doc["word_width"] = config.word_width;
    doc["correction"] = config.correction_enabled;
    doc["classes"] = nlohmann::ordered_json::array();
    for (const ClassLabel& c : config.classes) {
        doc["classes"].push_back({{"name", c.name}});
    }
    doc["etalons"] = nlohmann::ordered_json::array();
    for (const EtalonSet& e : config.etalons) {
        doc["etalons"].push_back(
            {{"name", e.name}, {"class", e.class_label.name}, {"symbols", e.symbols}});
    }
    doc["control_table"] = nlohmann::ordered_json::object();
    for (const ClassLabel& c : config.classes) {
        doc["control_table"][c.name] = config.control_table.at(c.name).bits;
    }
    if (config.fuzzifier) {
        nlohmann::ordered_json vars = nlohmann::ordered_json::array();
        for (const LinguisticVariable& v : config.fuzzifier->variables) {
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const FuzzyTerm& t : v.terms) {
                nlohmann::ordered_json points = nlohmann::ordered_json::array();
                for (const auto& [x, degree] : t.points) {
                    points.push_back({x, degree});
                }
                terms.push_back({{"name", t.name}, {"points", points}});
            }
            vars.push_back({{"name", v.name},
                            {"universe", {v.lo, v.hi}},
                            {"clamp", v.clamp},
                            {"terms", terms}});
        }
        doc["fuzzifier"] = {{"variables", vars}};
    }
    return doc.dump(2);
}

}  // namespace pamusim
