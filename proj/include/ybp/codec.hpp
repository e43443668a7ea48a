#ifndef YBP_CODEC_HPP
#define YBP_CODEC_HPP

#include <string>

#include <json.hpp>

#include "ybp/solution.hpp"

namespace ybp {

// Document form of a solution.  Finite carriers list every map as
// explicit pairs; countable carriers name their closed-form family.
// Unknown fields are rejected (SchemaError with a path); a listed map
// sending two points to one value is NonInjectiveSigma.
nlohmann::json save_solution(const PartialSolution& S);
PartialSolution load_solution(const nlohmann::json& doc);

PartialSolution load_solution_file(const std::string& path);
void save_solution_file(const PartialSolution& S, const std::string& path);

}  // namespace ybp

#endif
