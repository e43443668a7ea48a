#ifndef YBP_REGISTRY_HPP
#define YBP_REGISTRY_HPP

#include <string>
#include <vector>

#include "ybp/solution.hpp"

namespace ybp {

// Built-in solutions: squarefree3, trivial3, etingof4, thompson.
// Unknown names raise Errc::UnknownExample.
PartialSolution example(const std::string& name);

// Registered names in alphabetical order, with a one-line blurb each.
std::vector<std::pair<std::string, std::string>> example_catalog();

}  // namespace ybp

#endif
