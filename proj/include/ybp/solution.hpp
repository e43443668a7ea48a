#ifndef YBP_SOLUTION_HPP
#define YBP_SOLUTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybp/partial_bijection.hpp"

namespace ybp {

enum class Axiom { NonDegenerate, Involutive, Braided, SquareFree };

constexpr const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::NonDegenerate: return "NonDegenerate";
    case Axiom::Involutive: return "Involutive";
    case Axiom::Braided: return "Braided";
    case Axiom::SquareFree: return "SquareFree";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& s);

// Counterexample: the indices it happened at plus the identity that
// failed, written out as a formula.
struct Witness {
  std::vector<Index> tuple;
  std::string equation;

  bool operator==(const Witness&) const = default;
};

// Orders witnesses so that parallel and serial verification agree on
// which counterexample gets reported.
bool witness_less(const Witness& a, const Witness& b);

struct AxiomReport {
  std::string axiom;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::uint64_t skipped = 0;       // tuples where only one side was defined
};

// Canonical window used by the docs and test suite when a countable
// carrier needs bounding.
inline constexpr Index kDefaultWindow = 20;

// Partial map data (X, r) with r(x,y) = (sigma_x(y), gamma_y(x)).
// The defined set D is always derived from the two domain families:
// (x,y) in D iff y in dom(sigma_x) and x in dom(gamma_y).
class PartialSolution {
public:
  enum class Family { Explicit, Thompson };

  // sigma[i], gamma[i] over the finite carrier {0,...,n-1}
  static PartialSolution finite(std::vector<PartialBijection> sigma,
                                std::vector<PartialBijection> gamma);
  // the countable family: sigma_n fixes 0..n, skips n+1, shifts the
  // rest down; gamma_n fixes 0..n-2 and n, skips n-1, shifts the rest up
  static PartialSolution thompson();

  Family family() const { return family_; }
  const Carrier& carrier() const { return carrier_; }

  PartialBijection sigma(Index x) const;
  PartialBijection gamma(Index y) const;

  bool in_domain(Index x, Index y) const;
  std::optional<std::pair<Index, Index>> r(Index x, Index y) const;

  // Axiom status computed once at construction (finite carriers) or
  // established for the built-in family; verify() recomputes honestly.
  bool certified(Axiom a) const { return certified_[static_cast<int>(a)]; }

  bool operator==(const PartialSolution& o) const;

private:
  PartialSolution() = default;

  Family family_ = Family::Explicit;
  Carrier carrier_ = Carrier::finite(0);
  std::vector<PartialBijection> sigma_, gamma_;
  bool certified_[4] = {false, false, false, false};
};

inline std::optional<std::pair<Index, Index>> r_apply(const PartialSolution& S,
                                                      Index x, Index y) {
  return S.r(x, y);
}

// window is required for countable carriers (Errc::MissingWindow
// otherwise) and ignored for finite ones; with parallel=true the scan
// is split across threads and merged so the report is identical to the
// serial one (lowest witness in scan order wins).
AxiomReport verify(const PartialSolution& S, Axiom axiom,
                   std::optional<Index> window = std::nullopt, bool parallel = false);

std::vector<AxiomReport> verify_all(const PartialSolution& S,
                                    std::optional<Index> window = std::nullopt,
                                    bool parallel = false);

}  // namespace ybp

#endif
