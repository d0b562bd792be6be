#pragma once

#include <string>

#include <json.hpp>

#include "kraw/matrix.hpp"
#include "kraw/multivariate.hpp"
#include "kraw/polynomial.hpp"
#include "kraw/report.hpp"
#include "kraw/walks.hpp"

namespace kraw {

// Matrices carry their shape and a row-major entry grid.  Entries are
// decimal strings so values of any size survive round trips; rationals
// use "n" or "n/d" in lowest terms.  Parsers also accept plain JSON
// integers for convenience.
std::string to_json(const ExactMatrix& m);
std::string to_json(const RationalMatrix& m);
ExactMatrix exact_matrix_from_json(const std::string& text);
RationalMatrix rational_matrix_from_json(const std::string& text);

// CSV: one row per line, comma-separated tokens, no header.
std::string to_csv(const ExactMatrix& m);
std::string to_csv(const RationalMatrix& m);
ExactMatrix exact_matrix_from_csv(const std::string& text);
RationalMatrix rational_matrix_from_csv(const std::string& text);

// Polynomial entries serialize as ascending coefficient arrays; the zero
// polynomial is the empty array.
std::string to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const std::string& text);

// Human-oriented layout: right-aligned columns, one row per line.
std::string pretty(const ExactMatrix& m);
std::string pretty(const RationalMatrix& m);

// Probability vectors: array of {"num", "den"} objects, index = state.
std::string to_json(const FiniteDistribution& d);
FiniteDistribution distribution_from_json(const std::string& text);

// {"xi": [rationals], "p": [rationals]} with the same num/den encoding.
std::string to_json(const SiteDistribution& d);
SiteDistribution site_distribution_from_json(const std::string& text);

// Trajectories: "step,state" header then one line per visited state.
std::string to_csv(const UrnTrajectory& t);
UrnTrajectory trajectory_from_csv(const std::string& text, Order n,
                                  std::uint64_t seed);

nlohmann::json json_of(const CheckReport& r);
std::string to_json(const CheckReport& r);

// Vectors of rationals, used for transform output.
std::string to_json(const std::vector<Rat>& v);
std::string to_csv(const std::vector<Rat>& v);

// Reads a matrix from JSON or CSV, deciding by the leading non-space
// character.
ExactMatrix exact_matrix_from_text(const std::string& text);

} // namespace kraw
