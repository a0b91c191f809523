#include <doctest.h>

#include <random>

#include "pamusim/trace.hpp"
#include "support/generators.hpp"

using namespace pamusim;

namespace {

PamuMatrix reference_matrix() {
    return flash(testutil::reference_etalons(), testutil::reference_alphabet(), true);
}

}  // namespace

TEST_CASE("render_trace prints one line per step with held detectors") {
    PamuMatrix matrix = reference_matrix();
    MatchReport report = match_sequence(matrix, {"e", "z", "a", "b"});
    CHECK(render_trace(matrix, report.trace) ==
          "step=1 sym=e pos=1 fired=[2] K1=1 det=010 K2=[]\n"
          "step=2 sym=z pos=2 fired=[] K1=0 det=010 K2=[]\n"
          "step=3 sym=a pos=2 fired=[2] K1=1 det=010 K2=[]\n"
          "step=4 sym=b pos=3 fired=[2] K1=1 det=010 K2=[2]\n");
}

TEST_CASE("parse_trace inverts render_trace") {
    PamuMatrix matrix = reference_matrix();
    MatchReport report = match_sequence(matrix, {"e", "z", "a", "b"});
    std::vector<TraceStep> steps = parse_trace(render_trace(matrix, report.trace));
    REQUIRE(steps.size() == 4);
    CHECK(steps[0].step == 1);
    CHECK(steps[0].symbol == "e");
    CHECK(steps[0].position == 1);
    CHECK(steps[0].fired == std::vector<int>{2});
    CHECK(steps[0].k1);
    CHECK(steps[0].detectors == std::vector<bool>{false, true, false});
    CHECK(steps[0].k2_lanes.empty());
    CHECK_FALSE(steps[1].k1);
    CHECK(steps[1].symbol == "z");
    CHECK(steps[3].k2_lanes == std::vector<int>{2});
}

TEST_CASE("parse_trace rejects malformed lines") {
    CHECK_THROWS_AS(parse_trace("step=1 sym=e\n"), SchemaError);
    CHECK_THROWS_AS(parse_trace("nonsense\n"), SchemaError);
    CHECK_THROWS_AS(parse_trace("step=x sym=e pos=1 fired=[] K1=0 det=0 K2=[]\n"), SchemaError);
    CHECK_THROWS_AS(parse_trace("step=1 sym=e pos=1 fired=[] K1=2 det=0 K2=[]\n"), SchemaError);
    CHECK_THROWS_AS(parse_trace("step=1 sym=e pos=1 fired=[] K1=0 det=0x K2=[]\n"), SchemaError);
    CHECK_THROWS_AS(parse_trace("step=1 sym=e pos=1 fired=)( K1=0 det=0 K2=[]\n"), SchemaError);
}

TEST_CASE("replaying a trace reconstructs the accepted set") {
    std::mt19937_64 rng(808);
    for (int round = 0; round < 100; ++round) {
        bool correction = round % 2 == 0;
        std::vector<EtalonSet> etalons = testutil::random_store(rng, !correction);
        PamuMatrix matrix = flash(etalons, Alphabet(testutil::tiny_alphabet_symbols()), correction);
        std::vector<Symbol> input =
            testutil::random_input(rng, testutil::tiny_alphabet_symbols(), 6, true);
        MatchReport report = match_sequence(matrix, input);
        std::vector<TraceStep> steps = parse_trace(render_trace(matrix, report.trace));
        CHECK(replay_accepted(matrix, steps) == report.accepted);
        REQUIRE(steps.size() == input.size());
        for (std::size_t i = 0; i < steps.size(); ++i) {
            CHECK(steps[i].symbol == input[i]);
        }
    }
}
