#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pamusim/costmodel.hpp"
#include "pamusim/decision.hpp"
#include "pamusim/oracle.hpp"
#include "pamusim/pamu.hpp"
#include "pamusim/trace.hpp"

namespace py = pybind11;
using namespace pamusim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Associative fuzzy control processor simulator";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<SchemaError>(m, "SchemaError", error);
    auto validation = py::register_exception<ValidationError>(m, "ValidationError", error);
    py::register_exception<EmptyStoreError>(m, "EmptyStoreError", validation);
    py::register_exception<UnequalLengthsError>(m, "UnequalLengthsError", validation);
    py::register_exception<AutomatonExhaustedError>(m, "AutomatonExhaustedError", error);
    py::register_exception<UniverseViolationError>(m, "UniverseViolationError", error);
    py::register_exception<UnknownClassError>(m, "UnknownClassError", error);

    py::class_<ClassLabel>(m, "ClassLabel")
        .def(py::init<>())
        .def(py::init([](std::string name, int id) {
                 return ClassLabel{std::move(name), id};
             }),
             py::arg("name"), py::arg("id") = 0)
        .def_readwrite("name", &ClassLabel::name)
        .def_readwrite("id", &ClassLabel::id)
        .def(py::self == py::self)
        .def("__repr__", [](const ClassLabel& c) {
            return "ClassLabel(name='" + c.name + "', id=" + std::to_string(c.id) + ")";
        });

    py::class_<ControlWord>(m, "ControlWord")
        .def(py::init<>())
        .def(py::init([](std::string bits) { return ControlWord{std::move(bits)}; }),
             py::arg("bits"))
        .def_readwrite("bits", &ControlWord::bits)
        .def_property_readonly("width", &ControlWord::width)
        .def(py::self == py::self)
        .def("__repr__",
             [](const ControlWord& w) { return "ControlWord(bits='" + w.bits + "')"; });

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init<>())
        .def(py::init<std::vector<Symbol>>(), py::arg("symbols"))
        .def("decode", &Alphabet::decode, py::arg("symbol"))
        .def("contains", &Alphabet::contains, py::arg("symbol"))
        .def_property_readonly("symbols", &Alphabet::symbols)
        .def("__len__", &Alphabet::size)
        .def("__contains__", &Alphabet::contains)
        .def(py::self == py::self);

    py::class_<EtalonSet>(m, "EtalonSet")
        .def(py::init<>())
        .def(py::init([](std::string name, ClassLabel class_label, std::vector<Symbol> symbols) {
                 return EtalonSet{std::move(name), std::move(class_label), std::move(symbols)};
             }),
             py::arg("name"), py::arg("class_label"), py::arg("symbols"))
        .def_readwrite("name", &EtalonSet::name)
        .def_readwrite("class_label", &EtalonSet::class_label)
        .def_readwrite("symbols", &EtalonSet::symbols)
        .def_property_readonly("length", &EtalonSet::length)
        .def(py::self == py::self);

    py::class_<FuzzyTerm>(m, "FuzzyTerm")
        .def(py::init<>())
        .def(py::init([](std::string name, std::vector<std::pair<double, double>> points) {
                 return FuzzyTerm{std::move(name), std::move(points)};
             }),
             py::arg("name"), py::arg("points"))
        .def_readwrite("name", &FuzzyTerm::name)
        .def_readwrite("points", &FuzzyTerm::points)
        .def(py::self == py::self);

    py::class_<LinguisticVariable>(m, "LinguisticVariable")
        .def(py::init<>())
        .def(py::init([](std::string name, double lo, double hi, bool clamp,
                         std::vector<FuzzyTerm> terms) {
                 return LinguisticVariable{std::move(name), lo, hi, clamp, std::move(terms)};
             }),
             py::arg("name"), py::arg("lo"), py::arg("hi"), py::arg("clamp") = true,
             py::arg("terms") = std::vector<FuzzyTerm>{})
        .def_readwrite("name", &LinguisticVariable::name)
        .def_readwrite("lo", &LinguisticVariable::lo)
        .def_readwrite("hi", &LinguisticVariable::hi)
        .def_readwrite("clamp", &LinguisticVariable::clamp)
        .def_readwrite("terms", &LinguisticVariable::terms)
        .def(py::self == py::self);

    py::class_<FuzzifierSpec>(m, "FuzzifierSpec")
        .def(py::init<>())
        .def_readwrite("variables", &FuzzifierSpec::variables)
        .def(py::self == py::self);

    py::class_<ProcessorConfig>(m, "ProcessorConfig")
        .def(py::init<>())
        .def_readwrite("alphabet", &ProcessorConfig::alphabet)
        .def_readwrite("etalons", &ProcessorConfig::etalons)
        .def_readwrite("classes", &ProcessorConfig::classes)
        .def_readwrite("control_table", &ProcessorConfig::control_table)
        .def_readwrite("word_width", &ProcessorConfig::word_width)
        .def_readwrite("correction_enabled", &ProcessorConfig::correction_enabled)
        .def_readwrite("fuzzifier", &ProcessorConfig::fuzzifier)
        .def(py::self == py::self);

    py::class_<PamuMatrix>(m, "PamuMatrix")
        .def(py::init<>())
        .def_readonly("lane_count", &PamuMatrix::lane_count)
        .def_readonly("depth", &PamuMatrix::depth)
        .def_readonly("cells", &PamuMatrix::cells)
        .def_readonly("end_markers", &PamuMatrix::end_markers)
        .def_readonly("lane_classes", &PamuMatrix::lane_classes)
        .def_readonly("lane_names", &PamuMatrix::lane_names)
        .def_readonly("correction_enabled", &PamuMatrix::correction_enabled)
        .def("cell",
             [](const PamuMatrix& matrix, int lane, int pos) -> std::optional<Symbol> {
                 const Symbol* cell = matrix.cell(lane, pos);
                 if (cell == nullptr) return std::nullopt;
                 return *cell;
             },
             py::arg("lane"), py::arg("pos"));

    py::class_<AutomatonState>(m, "AutomatonState")
        .def(py::init<>())
        .def_readwrite("position", &AutomatonState::position)
        .def_readwrite("detectors", &AutomatonState::detectors)
        .def_readwrite("completed", &AutomatonState::completed)
        .def_readwrite("steps_consumed", &AutomatonState::steps_consumed)
        .def_readwrite("steps_skipped", &AutomatonState::steps_skipped);

    py::class_<StepOutcome>(m, "StepOutcome")
        .def(py::init<>())
        .def_readonly("input_symbol", &StepOutcome::input_symbol)
        .def_readonly("fired", &StepOutcome::fired)
        .def_readonly("k1", &StepOutcome::k1)
        .def_readonly("k2_lanes", &StepOutcome::k2_lanes)
        .def_readonly("position_before", &StepOutcome::position_before);

    py::class_<StepResult>(m, "StepResult")
        .def_readonly("outcome", &StepResult::outcome)
        .def_readonly("state", &StepResult::state);

    py::class_<MatchReport>(m, "MatchReport")
        .def_readonly("accepted", &MatchReport::accepted)
        .def_readonly("trace", &MatchReport::trace)
        .def_readonly("final_state", &MatchReport::final_state);

    py::class_<IndicatorState>(m, "IndicatorState")
        .def(py::init<>())
        .def_readwrite("bit", &IndicatorState::bit)
        .def_readwrite("fed", &IndicatorState::fed);

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
    m.def("decode", &decode, py::arg("symbol"), py::arg("alphabet"));
    m.def("membership", &membership, py::arg("term"), py::arg("x"));
    m.def("validate_variable", &validate_variable, py::arg("variable"));
    m.def("fuzzify", &fuzzify, py::arg("variables"), py::arg("inputs"));
    m.def("flash",
          py::overload_cast<const std::vector<EtalonSet>&, const Alphabet&, bool>(&flash),
          py::arg("etalons"), py::arg("alphabet"), py::arg("correction_enabled"));
    m.def("flash", py::overload_cast<const ProcessorConfig&>(&flash), py::arg("config"));
    m.def("init_state", &init_state, py::arg("matrix"));
    m.def("step", &step, py::arg("matrix"), py::arg("state"), py::arg("symbol"));
    m.def("finalize", &finalize, py::arg("matrix"), py::arg("state"));
    m.def("match_sequence", &match_sequence, py::arg("matrix"), py::arg("input"));
    m.def("consumed_symbols", &consumed_symbols, py::arg("steps"));
    m.def("indicator_feed", py::overload_cast<const IndicatorState&, bool>(&indicator_feed),
          py::arg("state"), py::arg("alpha"));
    m.def("indicator_feed",
          py::overload_cast<const IndicatorState&, const Symbol&, const Symbol&>(&indicator_feed),
          py::arg("state"), py::arg("expected"), py::arg("actual"));
    m.def("indicator_poll", &indicator_poll, py::arg("state"), py::arg("etalon_length"));
    m.def("indicator_match", &indicator_match, py::arg("etalon"), py::arg("input"));
    m.def("dump_matrix", &dump_matrix, py::arg("matrix"));

    py::enum_<DecisionMode>(m, "DecisionMode")
        .value("full_coincidence", DecisionMode::full_coincidence)
        .value("max_resemblance", DecisionMode::max_resemblance)
        .value("min_difference", DecisionMode::min_difference);

    py::enum_<DecisionOutcome>(m, "DecisionOutcome")
        .value("matched", DecisionOutcome::matched)
        .value("no_match", DecisionOutcome::no_match)
        .value("ambiguous", DecisionOutcome::ambiguous);

    py::class_<Decision>(m, "Decision")
        .def(py::init<>())
        .def_readwrite("mode", &Decision::mode)
        .def_readwrite("outcome", &Decision::outcome)
        .def_readwrite("class_label", &Decision::class_label)
        .def_readwrite("control_word", &Decision::control_word)
        .def_readwrite("lanes", &Decision::lanes)
        .def_readwrite("score", &Decision::score);

    m.def("classify_full_coincidence", &classify_full_coincidence, py::arg("matrix"),
          py::arg("report"));
    m.def("classify_max_resemblance", &classify_max_resemblance, py::arg("matrix"),
          py::arg("input"));
    m.def("classify_min_difference", &classify_min_difference, py::arg("matrix"),
          py::arg("input"));
    m.def("resemblance_score", &resemblance_score, py::arg("etalon"), py::arg("input"));
    m.def("difference_score", &difference_score, py::arg("etalon"), py::arg("input"));
    m.def("emit_control", &emit_control, py::arg("config"), py::arg("class_name"));
    m.def("attach_control", &attach_control, py::arg("config"), py::arg("decision"));
    m.def("render_decision", &render_decision, py::arg("decision"));
    m.def("mode_name", &mode_name, py::arg("mode"));

    py::class_<ComponentTimes>(m, "ComponentTimes")
        .def(py::init<>())
        .def_readwrite("t_c", &ComponentTimes::t_c)
        .def_readwrite("t_l", &ComponentTimes::t_l)
        .def_readwrite("t_n_c", &ComponentTimes::t_n_c)
        .def_readwrite("t_n_min", &ComponentTimes::t_n_min)
        .def_readwrite("t_n_max", &ComponentTimes::t_n_max)
        .def(py::self == py::self);

    py::class_<CostParams>(m, "CostParams")
        .def(py::init<>())
        .def_readwrite("tau", &CostParams::tau)
        .def_readwrite("gamma", &CostParams::gamma)
        .def_readwrite("n_inputs", &CostParams::n_inputs)
        .def_readwrite("big_n", &CostParams::big_n)
        .def_readwrite("universe_powers", &CostParams::universe_powers)
        .def_readwrite("fuzzy_powers", &CostParams::fuzzy_powers)
        .def_readwrite("rules", &CostParams::rules)
        .def_readwrite("classes", &CostParams::classes)
        .def_readwrite("decision_field_global", &CostParams::decision_field_global)
        .def_readwrite("component_times", &CostParams::component_times)
        .def(py::self == py::self);

    py::class_<CostReport>(m, "CostReport")
        .def(py::init<>())
        .def_readwrite("time_flexible", &CostReport::time_flexible)
        .def_readwrite("time_rigid", &CostReport::time_rigid)
        .def_readwrite("delta_time", &CostReport::delta_time)
        .def_readwrite("memory_flexible", &CostReport::memory_flexible)
        .def_readwrite("memory_rigid", &CostReport::memory_rigid)
        .def_readwrite("delta_memory", &CostReport::delta_memory)
        .def_readwrite("crossover_rules", &CostReport::crossover_rules)
        .def(py::self == py::self);

    m.def("validate_params", &validate_params, py::arg("params"));
    m.def("time_flexible", &time_flexible, py::arg("params"));
    m.def("time_rigid", &time_rigid, py::arg("params"));
    m.def("memory_flexible", &memory_flexible, py::arg("params"));
    m.def("memory_rigid", &memory_rigid, py::arg("params"));
    m.def("compare", &compare, py::arg("params"));
    m.def("parse_cost_params", &parse_cost_params, py::arg("text"));
    m.def("render_cost_report", &render_cost_report, py::arg("report"));

    py::class_<OracleResult>(m, "OracleResult")
        .def(py::init<>())
        .def_readonly("accepted", &OracleResult::accepted)
        .def_readonly("consumed_subsequence", &OracleResult::consumed_subsequence);

    m.def("naive_match", &naive_match, py::arg("etalons"), py::arg("input"),
          py::arg("correction_enabled"));
    m.def("exact_equality_match", &exact_equality_match, py::arg("etalons"), py::arg("input"));

    py::class_<TraceStep>(m, "TraceStep")
        .def(py::init<>())
        .def_readwrite("step", &TraceStep::step)
        .def_readwrite("symbol", &TraceStep::symbol)
        .def_readwrite("position", &TraceStep::position)
        .def_readwrite("fired", &TraceStep::fired)
        .def_readwrite("k1", &TraceStep::k1)
        .def_readwrite("detectors", &TraceStep::detectors)
        .def_readwrite("k2_lanes", &TraceStep::k2_lanes);

    m.def("render_trace", &render_trace, py::arg("matrix"), py::arg("steps"));
    m.def("parse_trace", &parse_trace, py::arg("text"));
    m.def("replay_accepted", &replay_accepted, py::arg("matrix"), py::arg("steps"));

    m.attr("__version__") = "0.1.0";
}
