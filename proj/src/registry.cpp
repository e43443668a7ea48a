#include "ybp/registry.hpp"

#include "ybp/error.hpp"

namespace ybp {

namespace {

PartialBijection perm(const Carrier& c, std::initializer_list<Index> images) {
  std::vector<std::pair<Index, Index>> pairs;
  Index k = 0;
  for (Index v : images) pairs.emplace_back(k++, v);
  return PartialBijection::from_pairs(c, pairs);
}

// Square-free three-point solution: sigma_0 = gamma_0 the identity on
// {0,2}, sigma_1 = gamma_1 the identity on {1,2}, sigma_2 = gamma_2
// the transposition of 0,1 fixing 2.
PartialSolution squarefree3() {
  Carrier c = Carrier::finite(3);
  auto s0 = PartialBijection::from_pairs(c, {{0, 0}, {2, 2}});
  auto s1 = PartialBijection::from_pairs(c, {{1, 1}, {2, 2}});
  auto s2 = PartialBijection::from_pairs(c, {{0, 1}, {1, 0}, {2, 2}});
  return PartialSolution::finite({s0, s1, s2}, {s0, s1, s2});
}

// Same domains, all maps partial identities: generator 2 commutes
// with the other two and nothing else is related.
PartialSolution trivial3() {
  Carrier c = Carrier::finite(3);
  auto s0 = PartialBijection::from_pairs(c, {{0, 0}, {2, 2}});
  auto s1 = PartialBijection::from_pairs(c, {{1, 1}, {2, 2}});
  auto s2 = PartialBijection::identity(c);
  return PartialSolution::finite({s0, s1, s2}, {s0, s1, s2});
}

// Four-point total solution (everywhere defined), indecomposable and
// irretractable; not square-free.
PartialSolution etingof4() {
  Carrier c = Carrier::finite(4);
  std::vector<PartialBijection> sigma = {
      perm(c, {0, 2, 1, 3}),
      perm(c, {3, 1, 2, 0}),
      perm(c, {1, 3, 0, 2}),
      perm(c, {2, 0, 3, 1}),
  };
  std::vector<PartialBijection> gamma = {
      perm(c, {0, 3, 2, 1}),
      perm(c, {2, 1, 0, 3}),
      perm(c, {3, 0, 1, 2}),
      perm(c, {1, 2, 3, 0}),
  };
  return PartialSolution::finite(std::move(sigma), std::move(gamma));
}

}  // namespace

PartialSolution example(const std::string& name) {
  if (name == "squarefree3") return squarefree3();
  if (name == "trivial3") return trivial3();
  if (name == "etingof4") return etingof4();
  if (name == "thompson") return PartialSolution::thompson();
  fail(Errc::UnknownExample, "no example named '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> example_catalog() {
  return {
      {"etingof4", "total 4-point solution, indecomposable and irretractable"},
      {"squarefree3", "square-free 3-point partial solution"},
      {"thompson", "countable square-free family on the naturals"},
      {"trivial3", "3-point partial identities (partially commutative)"},
  };
}

}  // namespace ybp
