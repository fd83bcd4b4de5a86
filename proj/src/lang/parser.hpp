#pragma once

#include <string>

#include "lang/model.hpp"

namespace tamp::lang {

/// Parses a `.sdom` domain. Probabilities come out as exact rationals and
/// every action's outcome probabilities must sum to exactly 1.
/// Throws SyntaxError (with line/column) or ValidationError.
Domain parseDomain(const std::string& text);

/// Parses a `.sprob` problem and grounds its facts against the domain
/// vocabulary. Requires a horizon >= 1.
Problem parseProblem(const std::string& text, const Domain& domain);

Domain loadDomain(const std::string& path);
Problem loadProblem(const std::string& path, const Domain& domain);

/// Writers. Parsing the printed text reproduces a structurally equal
/// Domain/Problem.
std::string printDomain(const Domain& d);
std::string printProblem(const Problem& p, const Domain& d);

}  // namespace tamp::lang
