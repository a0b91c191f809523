#include <doctest.h>

#include <map>
#include <random>

#include "pamusim/decision.hpp"
#include "support/generators.hpp"

using namespace pamusim;
using testutil::bounded;

namespace {

PamuMatrix reference_matrix() {
    return flash(testutil::reference_etalons(), testutil::reference_alphabet(), true);
}

}  // namespace

TEST_CASE("full coincidence reports the single matching class") {
    PamuMatrix matrix = reference_matrix();
    MatchReport report = match_sequence(matrix, {"e", "a", "b"});
    Decision decision = classify_full_coincidence(matrix, report);
    CHECK(decision.outcome == DecisionOutcome::matched);
    CHECK(decision.class_label->name == "w1");
    CHECK(decision.lanes == std::vector<int>{2});
    CHECK_FALSE(decision.score.has_value());
}

TEST_CASE("full coincidence distinguishes no-match from ambiguity") {
    PamuMatrix matrix = reference_matrix();
    SUBCASE("nothing accepted") {
        Decision decision =
            classify_full_coincidence(matrix, match_sequence(matrix, {"d", "d", "d"}));
        CHECK(decision.outcome == DecisionOutcome::no_match);
        CHECK_FALSE(decision.class_label.has_value());
    }
    SUBCASE("two classes accepted") {
        // Lanes 1 (w1) and 3 (w2) accepted together.
        MatchReport report;
        report.accepted = {1, 3};
        Decision decision = classify_full_coincidence(matrix, report);
        CHECK(decision.outcome == DecisionOutcome::ambiguous);
        CHECK(decision.lanes == std::vector<int>{1, 3});
    }
    SUBCASE("two lanes of one class stay unambiguous") {
        // Lanes 1 and 2 share class w1.
        MatchReport report;
        report.accepted = {1, 2};
        Decision decision = classify_full_coincidence(matrix, report);
        CHECK(decision.outcome == DecisionOutcome::matched);
        CHECK(decision.class_label->name == "w1");
    }
}

TEST_CASE("scores follow the positional formulas") {
    std::vector<Symbol> e1{"a", "b", "c", "d", "e"};
    std::vector<Symbol> e2{"e", "a", "b"};
    std::vector<Symbol> e3{"b", "a", "d", "e"};
    std::vector<Symbol> input{"e", "a", "c"};

    CHECK(resemblance_score(e2, input) == doctest::Approx(2.0 / 3.0));
    CHECK(resemblance_score(e1, input) == doctest::Approx(1.0 / 5.0));  // only 'c' lines up
    CHECK(resemblance_score(e3, input) == doctest::Approx(1.0 / 4.0));  // only 'a' lines up
    CHECK(resemblance_score(e1, e1) == doctest::Approx(1.0));
    CHECK(resemblance_score(e1, {}) == doctest::Approx(0.0));

    CHECK(difference_score(e2, input) == 1);
    CHECK(difference_score(e1, input) == 4);  // 2 mismatches + 2 length gap
    CHECK(difference_score(e3, input) == 3);  // 2 mismatches + 1 length gap
    CHECK(difference_score(e2, e2) == 0);
    CHECK(difference_score(e2, {}) == 3);
}

TEST_CASE("max resemblance picks the best lane") {
    PamuMatrix matrix = reference_matrix();
    SUBCASE("partially matching input") {
        Decision decision = classify_max_resemblance(matrix, {"e", "a", "c"});
        CHECK(decision.outcome == DecisionOutcome::matched);
        CHECK(decision.class_label->name == "w1");
        CHECK(decision.lanes == std::vector<int>{2});
        CHECK(*decision.score == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("verbatim etalon scores 1") {
        Decision decision = classify_max_resemblance(matrix, {"a", "b", "c", "d", "e"});
        CHECK(decision.lanes == std::vector<int>{1});
        CHECK(*decision.score == doctest::Approx(1.0));
    }
    SUBCASE("empty input falls to the first lane by tie-break") {
        Decision decision = classify_max_resemblance(matrix, {});
        CHECK(decision.lanes == std::vector<int>{1});
        CHECK(*decision.score == doctest::Approx(0.0));
    }
}

TEST_CASE("min difference picks the closest lane") {
    PamuMatrix matrix = reference_matrix();
    SUBCASE("exact match has zero difference") {
        Decision decision = classify_min_difference(matrix, {"e", "a", "b"});
        CHECK(decision.lanes == std::vector<int>{2});
        CHECK(*decision.score == doctest::Approx(0.0));
    }
    SUBCASE("near match wins with difference 1") {
        Decision decision = classify_min_difference(matrix, {"e", "a", "c"});
        CHECK(decision.lanes == std::vector<int>{2});
        CHECK(*decision.score == doctest::Approx(1.0));
    }
    SUBCASE("a singleton store always answers with its class") {
        Alphabet alphabet({"a", "b"});
        PamuMatrix single = flash({EtalonSet{"E1", {"w9", 1}, {"a", "b"}}}, alphabet, true);
        Decision decision = classify_min_difference(single, {"b", "b", "b"});
        CHECK(decision.outcome == DecisionOutcome::matched);
        CHECK(decision.class_label->name == "w9");
    }
}

TEST_CASE("full coincidence implies a zero-difference min pick on clean inputs") {
    std::mt19937_64 rng(2024);
    int confirmed = 0;
    for (int round = 0; round < 300; ++round) {
        std::vector<EtalonSet> etalons = testutil::random_store(rng, false);
        PamuMatrix matrix = flash(etalons, Alphabet(testutil::tiny_alphabet_symbols()), true);
        // A verbatim stored chain never produces a skipped step.
        std::vector<Symbol> input = etalons[bounded(rng, etalons.size())].symbols;
        MatchReport report = match_sequence(matrix, input);
        REQUIRE(report.final_state.steps_skipped == 0);
        Decision full = classify_full_coincidence(matrix, report);
        if (full.outcome != DecisionOutcome::matched) continue;
        ++confirmed;
        Decision min = classify_min_difference(matrix, input);
        CHECK(min.class_label->name == full.class_label->name);
        CHECK(*min.score == doctest::Approx(0.0));
    }
    CHECK(confirmed > 100);
}

TEST_CASE("equal-length stores rank the same lane under both scores") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 200; ++round) {
        std::vector<EtalonSet> etalons = testutil::random_store(rng, true);
        PamuMatrix matrix = flash(etalons, Alphabet(testutil::tiny_alphabet_symbols()), true);
        std::vector<Symbol> input =
            testutil::random_input(rng, testutil::tiny_alphabet_symbols(), 5, false);
        Decision by_max = classify_max_resemblance(matrix, input);
        Decision by_min = classify_min_difference(matrix, input);
        CHECK(by_max.lanes == by_min.lanes);
    }
}

TEST_CASE("classification commutes with class relabeling") {
    std::mt19937_64 rng(77);
    std::map<std::string, std::string> rename{{"w1", "blue"}, {"w2", "red"}};
    for (int round = 0; round < 100; ++round) {
        std::vector<EtalonSet> etalons = testutil::random_store(rng, false);
        std::vector<EtalonSet> renamed = etalons;
        for (EtalonSet& etalon : renamed) {
            etalon.class_label.name = rename.at(etalon.class_label.name);
        }
        Alphabet alphabet(testutil::tiny_alphabet_symbols());
        PamuMatrix matrix = flash(etalons, alphabet, true);
        PamuMatrix renamed_matrix = flash(renamed, alphabet, true);
        std::vector<Symbol> input =
            testutil::random_input(rng, testutil::tiny_alphabet_symbols(), 5, true);

        MatchReport report = match_sequence(matrix, input);
        MatchReport renamed_report = match_sequence(renamed_matrix, input);
        Decision original = classify_full_coincidence(matrix, report);
        Decision relabeled = classify_full_coincidence(renamed_matrix, renamed_report);
        CHECK(original.outcome == relabeled.outcome);
        if (original.outcome == DecisionOutcome::matched) {
            CHECK(rename.at(original.class_label->name) == relabeled.class_label->name);
        }

        Decision original_max = classify_max_resemblance(matrix, input);
        Decision relabeled_max = classify_max_resemblance(renamed_matrix, input);
        CHECK(original_max.lanes == relabeled_max.lanes);
        CHECK(rename.at(original_max.class_label->name) == relabeled_max.class_label->name);
    }
}

TEST_CASE("emit_control looks up the configured word") {
    ProcessorConfig config = testutil::reference_config();
    CHECK(emit_control(config, "w1").bits == "10110011");
    CHECK(emit_control(config, "w2").bits == "01001100");
    CHECK(emit_control(config, "w1").width() == 8);
    CHECK_THROWS_AS(emit_control(config, "w9"), UnknownClassError);
}

TEST_CASE("attach_control completes matched decisions only") {
    ProcessorConfig config = testutil::reference_config();
    PamuMatrix matrix = reference_matrix();
    Decision matched = attach_control(
        config, classify_full_coincidence(matrix, match_sequence(matrix, {"e", "a", "b"})));
    REQUIRE(matched.control_word.has_value());
    CHECK(matched.control_word->bits == "10110011");

    Decision missed = attach_control(
        config, classify_full_coincidence(matrix, match_sequence(matrix, {"d", "d", "d"})));
    CHECK_FALSE(missed.control_word.has_value());
}

TEST_CASE("decisions render as single report lines") {
    ProcessorConfig config = testutil::reference_config();
    PamuMatrix matrix = reference_matrix();

    Decision matched = attach_control(
        config, classify_full_coincidence(matrix, match_sequence(matrix, {"e", "a", "b"})));
    CHECK(render_decision(matched) == "mode=full class=w1 word=10110011");

    Decision missed = classify_full_coincidence(matrix, match_sequence(matrix, {"d", "d", "d"}));
    CHECK(render_decision(missed) == "mode=full class=NONE");

    MatchReport fake;
    fake.accepted = {1, 3};
    Decision split = classify_full_coincidence(matrix, fake);
    CHECK(render_decision(split) == "mode=full class=AMBIGUOUS lanes=[1,3]");

    Decision by_min = attach_control(config, classify_min_difference(matrix, {"e", "a", "b"}));
    CHECK(render_decision(by_min) == "mode=min class=w1 word=10110011 score=0");
}
