#ifndef YBP_ANALYSIS_HPP
#define YBP_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "ybp/index_set.hpp"
#include "ybp/solution.hpp"

namespace ybp {

// Quotient by sigma-map equality (same domain, same values).  Classes
// are numbered by first occurrence in carrier order.  The induced maps
// come from representatives; if representatives disagree, retract
// throws Errc::QuotientNotWellDefined instead of picking one.  The
// axioms are re-verified on the quotient rather than assumed, and the
// reports are part of the result.
struct RetractResult {
  PartialSolution quotient;
  std::vector<Index> class_of;
  std::vector<AxiomReport> quotient_reports;

  Index size() const { return quotient.carrier().size(); }
};

// Requires a finite, non-degenerate, involutive solution.
RetractResult retract(const PartialSolution& S);

struct MplResult {
  enum class Outcome {
    Reached,     // quotient tower hit size 1; level is set
    FixedPoint,  // retract stopped shrinking at size > 1 (irretractable)
    MaxIter,     // still shrinking when the iteration budget ran out
  };

  Outcome outcome = Outcome::MaxIter;
  std::optional<Index> level;
  Index final_size = 0;
};

MplResult multipermutation_level(const PartialSolution& S, Index max_iter = 64);

// first always holds index 0.
struct Partition2 {
  IndexSet first;
  IndexSet second;

  bool operator==(const Partition2&) const = default;
};

// Splits the carrier into two nonempty invariant parts whose restricted
// solutions are non-degenerate and involutive, if any such split
// exists.  Brute force over bipartitions; Errc::TooLarge past limit.
std::optional<Partition2> decompose(const PartialSolution& S, Index limit = 12);

// perm maps S1 indices to S2 indices; checks that defined pairs
// correspond exactly and that r commutes with the relabeling.
bool is_isomorphism(const PartialSolution& S1, const PartialSolution& S2,
                    const std::vector<Index>& perm);

// Exhaustive search in lexicographic order, so the identity wins
// whenever it works.  Errc::TooLarge past limit.
std::optional<std::vector<Index>> are_isomorphic(const PartialSolution& S1,
                                                 const PartialSolution& S2,
                                                 Index limit = 8);

}  // namespace ybp

#endif
