#ifndef YBP_CYCLE_SET_HPP
#define YBP_CYCLE_SET_HPP

#include <optional>

#include "ybp/solution.hpp"

namespace ybp {

// Binary operation x * y = sigma_x^{-1}(y) derived from a
// non-degenerate solution.  Each translation tau(x) = (y -> x * y) is
// the inverse of a partial bijection, hence itself one.
class CycleSet {
public:
  const Carrier& carrier() const { return base_.carrier(); }

  PartialBijection tau(Index x) const { return base_.sigma(x).inverse(); }
  std::optional<Index> star(Index x, Index y) const {
    return base_.sigma(x).preimage(y);
  }

private:
  friend CycleSet derive_cycle_set(const PartialSolution& S);
  explicit CycleSet(PartialSolution S) : base_(std::move(S)) {}

  PartialSolution base_;
};

// Requires S non-degenerate (Errc::BadArgument otherwise).
CycleSet derive_cycle_set(const PartialSolution& S);

// identity:       (x*y)*(x*z) = (y*x)*(y*z) wherever both sides are
//                 defined; one-sided triples are counted as skipped.
// square_free:    x*x = x (undefined x*x is a failure).
// non_degenerate: x -> x*x is defined on the scan range and injective.
struct CycleSetReport {
  AxiomReport identity;
  AxiomReport square_free;
  AxiomReport non_degenerate;

  bool all_hold() const {
    return identity.holds && square_free.holds && non_degenerate.holds;
  }
};

// window is required for countable carriers and ignored for finite
// ones, as in verify(); parallel splits the identity scan only.
CycleSetReport verify_cycle_set(const CycleSet& C,
                                std::optional<Index> window = std::nullopt,
                                bool parallel = false);

}  // namespace ybp

#endif
