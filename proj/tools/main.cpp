#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pamusim/costmodel.hpp"
#include "pamusim/decision.hpp"
#include "pamusim/oracle.hpp"
#include "pamusim/pamu.hpp"
#include "pamusim/trace.hpp"

namespace {

using namespace pamusim;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> values;
    for (const std::string& token : split_tokens(text)) {
        try {
            std::size_t used = 0;
            double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw Error("not a number: \"" + token + "\"");
        }
    }
    return values;
}

// Uniform draw from [0, n) with rejection sampling, so sequences depend only
// on the seed, not on the standard library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (~std::uint64_t{0} - n + 1) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

std::string noise_token(const Alphabet& alphabet) {
    std::string token = "#";
    while (alphabet.contains(token)) token += '#';
    return token;
}

std::string render_set(const std::set<int>& lanes) {
    std::string out = "[";
    bool first = true;
    for (int lane : lanes) {
        if (!first) out += ',';
        out += std::to_string(lane);
        first = false;
    }
    return out + "]";
}

std::string render_input(const std::vector<Symbol>& input) {
    std::string out;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (i > 0) out += ' ';
        out += input[i];
    }
    return out;
}

int run_command(const std::string& config_path, const std::string& symbols,
                const std::string& numeric, const std::string& mode_text,
                const std::string& trace_path, bool as_json) {
    ProcessorConfig config = parse_config(read_file(config_path));
    PamuMatrix matrix = flash(config);

    std::vector<Symbol> input;
    if (!numeric.empty()) {
        if (!config.fuzzifier) {
            throw Error("numeric input needs a fuzzifier section in the configuration");
        }
        input = fuzzify(config.fuzzifier->variables, parse_numbers(numeric));
    } else {
        input = split_tokens(symbols);
    }

    MatchReport report = match_sequence(matrix, input);
    Decision decision;
    if (mode_text == "full") {
        decision = classify_full_coincidence(matrix, report);
    } else if (mode_text == "max") {
        decision = classify_max_resemblance(matrix, input);
    } else {
        decision = classify_min_difference(matrix, input);
    }
    decision = attach_control(config, decision);

    if (!trace_path.empty()) {
        write_file(trace_path, render_trace(matrix, report.trace));
    }

    if (as_json) {
        nlohmann::ordered_json doc;
        doc["mode"] = mode_name(decision.mode);
        switch (decision.outcome) {
            case DecisionOutcome::matched: doc["outcome"] = "matched"; break;
            case DecisionOutcome::no_match: doc["outcome"] = "no_match"; break;
            case DecisionOutcome::ambiguous: doc["outcome"] = "ambiguous"; break;
        }
        doc["class"] = decision.class_label ? nlohmann::ordered_json(decision.class_label->name)
                                            : nlohmann::ordered_json(nullptr);
        doc["word"] = decision.control_word ? nlohmann::ordered_json(decision.control_word->bits)
                                            : nlohmann::ordered_json(nullptr);
        doc["lanes"] = decision.lanes;
        doc["score"] = decision.score ? nlohmann::ordered_json(*decision.score)
                                      : nlohmann::ordered_json(nullptr);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << render_decision(decision) << '\n';
    }

    switch (decision.outcome) {
        case DecisionOutcome::matched: return 0;
        case DecisionOutcome::no_match: return 2;
        case DecisionOutcome::ambiguous: return 3;
    }
    return 0;
}

int check_command(const std::string& config_path, std::int64_t count, std::uint64_t seed) {
    ProcessorConfig config = parse_config(read_file(config_path));
    PamuMatrix matrix = flash(config);
    std::string noise = noise_token(config.alphabet);
    std::mt19937_64 rng(seed);

    auto disagrees = [&](const std::vector<Symbol>& input) {
        std::set<int> got = match_sequence(matrix, input).accepted;
        std::set<int> want = naive_match(config.etalons, input, config.correction_enabled).accepted;
        return got != want;
    };

    for (std::int64_t case_no = 0; case_no < count; ++case_no) {
        std::uint64_t length = bounded(rng, static_cast<std::uint64_t>(matrix.depth) + 3);
        std::vector<Symbol> input;
        for (std::uint64_t i = 0; i < length; ++i) {
            auto line = static_cast<std::size_t>(
                bounded(rng, static_cast<std::uint64_t>(config.alphabet.size()) + 1));
            input.push_back(line == static_cast<std::size_t>(config.alphabet.size())
                                ? noise
                                : config.alphabet.symbols()[line]);
        }
        if (!disagrees(input)) continue;

        // Greedy shrink: drop symbols one at a time while the disagreement
        // survives.
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (std::size_t i = 0; i < input.size(); ++i) {
                std::vector<Symbol> candidate = input;
                candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
                if (disagrees(candidate)) {
                    input = std::move(candidate);
                    shrunk = true;
                    break;
                }
            }
        }
        std::set<int> got = match_sequence(matrix, input).accepted;
        std::set<int> want = naive_match(config.etalons, input, config.correction_enabled).accepted;
        std::cout << "disagree input=\"" << render_input(input) << "\" automaton="
                  << render_set(got) << " oracle=" << render_set(want) << '\n';
        std::cout << "agree=" << case_no << "/" << count << '\n';
        return 4;
    }
    std::cout << "agree=" << count << "/" << count << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Associative fuzzy control processor simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto* cmd_flash = app.add_subcommand("flash", "Burn the etalon store and dump the matrix");
    cmd_flash->add_option("--config", config_path, "Configuration file")->required();
    cmd_flash->add_option("--out", out_path, "Write the dump to a file instead of stdout");

    std::string symbols;
    std::string numeric;
    std::string mode_text = "full";
    std::string trace_path;
    bool as_json = false;
    auto* cmd_run = app.add_subcommand("run", "Match one input and print the decision");
    cmd_run->add_option("--config", config_path, "Configuration file")->required();
    auto* symbols_opt = cmd_run->add_option("--symbols", symbols, "Whitespace-separated symbols");
    auto* numeric_opt =
        cmd_run->add_option("--numeric", numeric, "Numeric inputs routed through the fuzzifier");
    symbols_opt->excludes(numeric_opt);
    numeric_opt->excludes(symbols_opt);
    cmd_run->add_option("--mode", mode_text, "Decision mode")
        ->check(CLI::IsMember({"full", "max", "min"}));
    cmd_run->add_option("--trace", trace_path, "Write the step trace to a file");
    cmd_run->add_flag("--json", as_json, "Machine-readable output");

    std::string params_path;
    auto* cmd_cost = app.add_subcommand("cost", "Evaluate the time and memory models");
    cmd_cost->add_option("--params", params_path, "Cost parameter file")->required();
    cmd_cost->add_flag("--json", as_json, "Machine-readable output");

    std::int64_t count = 0;
    std::uint64_t seed = 0;
    auto* cmd_check = app.add_subcommand("check", "Cross-check the automaton against the oracle");
    cmd_check->add_option("--config", config_path, "Configuration file")->required();
    cmd_check->add_option("--count", count, "Number of random cases")->required();
    cmd_check->add_option("--seed", seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_flash->parsed()) {
            ProcessorConfig config = parse_config(read_file(config_path));
            std::string dump = dump_matrix(flash(config));
            if (out_path.empty()) {
                std::cout << dump;
            } else {
                write_file(out_path, dump);
            }
            return 0;
        }
        if (cmd_run->parsed()) {
            if (symbols_opt->count() == 0 && numeric_opt->count() == 0) {
                throw Error("one of --symbols or --numeric is required");
            }
            return run_command(config_path, symbols, numeric, mode_text, trace_path, as_json);
        }
        if (cmd_cost->parsed()) {
            CostReport report = compare(parse_cost_params(read_file(params_path)));
            if (as_json) {
                nlohmann::ordered_json doc;
                doc["time_flexible"] = report.time_flexible;
                doc["time_rigid"] = report.time_rigid;
                doc["delta_time"] = report.delta_time;
                doc["memory_flexible"] = report.memory_flexible;
                doc["memory_rigid"] = report.memory_rigid;
                doc["delta_memory"] = report.delta_memory;
                doc["crossover_rules"] = report.crossover_rules;
                std::cout << doc.dump(2) << '\n';
            } else {
                std::cout << render_cost_report(report);
            }
            return 0;
        }
        if (cmd_check->parsed()) {
            if (count < 1) throw Error("--count must be at least 1");
            return check_command(config_path, count, seed);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
