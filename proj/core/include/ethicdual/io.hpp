#pragma once

#include <iosfwd>
#include <string>

#include "ethicdual/facial.hpp"
#include "ethicdual/graph.hpp"

#include <nlohmann/json_fwd.hpp>

namespace ethicdual {

/// Matrix text format: first line "rows cols", then one line per row of
/// whitespace-separated decimal integers. '#' starts a comment line.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_string(const std::string& text);

/// Integer vector: whitespace-separated decimal integers (comments allowed).
IntVec parse_int_vector(std::istream& in);
IntVec parse_int_vector_string(const std::string& text);

/// Graph file format: line "n m", then m lines "u v" (0-indexed).
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);

// JSON conversions. Large integers and rationals always serialize as
// decimal strings, never as native numbers.
nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const Rat& v);
nlohmann::json to_json(const IntVec& v);
nlohmann::json to_json(const RatVec& v);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const FgAbelianGroup& g);
nlohmann::json to_json(const SmithDecomposition& d);
nlohmann::json to_json(const UnifiedCertificate& c);

Int int_from_json(const nlohmann::json& j);
Rat rat_from_json(const nlohmann::json& j);
IntVec int_vec_from_json(const nlohmann::json& j);
RatVec rat_vec_from_json(const nlohmann::json& j);
IntMatrix int_matrix_from_json(const nlohmann::json& j);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

/// Problem JSON for the certify subcommand: optional blocks
/// {integer: {A, b, c}, real: {A, b, c}, conic: {A, b, c}}.
UnifiedProblem unified_problem_from_json(const nlohmann::json& j);
nlohmann::json to_json(const UnifiedProblem& p);

}  // namespace ethicdual
