#ifndef PAMUSIM_FUZZIFIER_HPP
#define PAMUSIM_FUZZIFIER_HPP

#include <string>
#include <utility>
#include <vector>

namespace pamusim {

/// One fuzzy term of a linguistic variable. Membership is piecewise linear
/// through `points` (strictly increasing x, degrees in [0,1]); outside the
/// breakpoint span it holds the nearest endpoint's degree.
struct FuzzyTerm {
    std::string name;
    std::vector<std::pair<double, double>> points;  // (x, degree)

    bool operator==(const FuzzyTerm&) const = default;
};

/// A named numeric input variable over a closed universe [lo, hi] with its
/// ordered term set. With `clamp` off, out-of-universe inputs are an error.
struct LinguisticVariable {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    bool clamp = true;
    std::vector<FuzzyTerm> terms;

    bool operator==(const LinguisticVariable&) const = default;
};

/// The linguistic-converter section of a processor configuration.
struct FuzzifierSpec {
    std::vector<LinguisticVariable> variables;

    bool operator==(const FuzzifierSpec&) const = default;
};

/// Degree of x in `term`: linear interpolation between the bracketing
/// breakpoints, endpoint clamping outside the span.
double membership(const FuzzyTerm& term, double x);

/// Checks the variable invariants: universe ordering, breakpoint placement
/// and monotonicity, degree range, and coverage (at every point of the
/// universe some term has positive degree). Throws ValidationError naming
/// the variable.
void validate_variable(const LinguisticVariable& variable);

/// Converts one numeric input per variable into the chain of winning term
/// names (highest membership; ties pick the earlier term). Out-of-universe
/// inputs are clamped unless the variable disables clamping, in which case
/// UniverseViolationError is thrown.
std::vector<std::string> fuzzify(const std::vector<LinguisticVariable>& variables,
                                 const std::vector<double>& inputs);

}  // namespace pamusim

#endif  // PAMUSIM_FUZZIFIER_HPP
