#include "pamusim/fuzzifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "pamusim/core.hpp"
#include "pamusim/errors.hpp"

namespace pamusim {

double membership(const FuzzyTerm& term, double x) {
    const auto& pts = term.points;
    if (pts.empty()) return 0.0;
    if (x <= pts.front().first) return pts.front().second;
    if (x >= pts.back().first) return pts.back().second;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (x <= pts[i].first) {
            double x0 = pts[i - 1].first, y0 = pts[i - 1].second;
            double x1 = pts[i].first, y1 = pts[i].second;
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return pts.back().second;
}

void validate_variable(const LinguisticVariable& variable) {
    std::string where = "variable \"" + variable.name + "\"";
    if (variable.name.empty() || detail::has_whitespace(variable.name)) {
        throw ValidationError("fuzzifier: invalid variable name \"" + variable.name + "\"");
    }
    if (!std::isfinite(variable.lo) || !std::isfinite(variable.hi) ||
        !(variable.lo < variable.hi)) {
        throw ValidationError(where + ": universe bounds must satisfy lo < hi");
    }
    if (variable.terms.empty()) {
        throw ValidationError(where + ": needs at least one term");
    }
    for (const FuzzyTerm& term : variable.terms) {
        std::string term_where = where + " term \"" + term.name + "\"";
        if (term.name.empty() || detail::has_whitespace(term.name)) {
            throw ValidationError(where + ": invalid term name \"" + term.name + "\"");
        }
        if (term.points.empty()) {
            throw ValidationError(term_where + ": needs at least one breakpoint");
        }
        for (std::size_t i = 0; i < term.points.size(); ++i) {
            const auto& [x, degree] = term.points[i];
            if (!std::isfinite(x) || !std::isfinite(degree)) {
                throw ValidationError(term_where + ": breakpoints must be finite");
            }
            if (degree < 0.0 || degree > 1.0) {
                throw ValidationError(term_where + ": degree " + std::to_string(degree) +
                                      " outside [0,1]");
            }
            if (x < variable.lo || x > variable.hi) {
                throw ValidationError(term_where + ": breakpoint x=" + std::to_string(x) +
                                      " outside the universe");
            }
            if (i > 0 && !(term.points[i - 1].first < x)) {
                throw ValidationError(term_where + ": breakpoints must be strictly increasing");
            }
        }
    }

    // The max of the terms is piecewise linear, so it can only vanish at a
    // breakpoint or a universe bound; checking those points covers all x.
    std::set<double> grid{variable.lo, variable.hi};
    for (const FuzzyTerm& term : variable.terms) {
        for (const auto& [x, degree] : term.points) grid.insert(x);
    }
    for (double x : grid) {
        bool covered = std::any_of(variable.terms.begin(), variable.terms.end(),
                                   [&](const FuzzyTerm& t) { return membership(t, x) > 0.0; });
        if (!covered) {
            throw ValidationError(where + ": no term covers x=" + std::to_string(x));
        }
    }
}

std::vector<std::string> fuzzify(const std::vector<LinguisticVariable>& variables,
                                 const std::vector<double>& inputs) {
    if (variables.size() != inputs.size()) {
        throw ValidationError("fuzzify: got " + std::to_string(inputs.size()) +
                              " inputs for " + std::to_string(variables.size()) + " variables");
    }
    std::vector<std::string> chain;
    chain.reserve(variables.size());
    for (std::size_t k = 0; k < variables.size(); ++k) {
        const LinguisticVariable& variable = variables[k];
        double x = inputs[k];
        if (!std::isfinite(x)) {
            throw ValidationError("fuzzify: input for variable \"" + variable.name +
                                  "\" is not finite");
        }
        if (x < variable.lo || x > variable.hi) {
            if (!variable.clamp) {
                throw UniverseViolationError("variable \"" + variable.name + "\": input " +
                                             std::to_string(x) + " outside [" +
                                             std::to_string(variable.lo) + ", " +
                                             std::to_string(variable.hi) + "]");
            }
            x = std::clamp(x, variable.lo, variable.hi);
        }
        std::size_t best = 0;
        double best_degree = membership(variable.terms[0], x);
        for (std::size_t i = 1; i < variable.terms.size(); ++i) {
            double degree = membership(variable.terms[i], x);
            if (degree > best_degree) {
                best = i;
                best_degree = degree;
            }
        }
        chain.push_back(variable.terms[best].name);
    }
    return chain;
}

}  // namespace pamusim
