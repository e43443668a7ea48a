#ifndef YBP_REVERSING_HPP
#define YBP_REVERSING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ybp/monoid.hpp"
#include "ybp/solution.hpp"
#include "ybp/word.hpp"

namespace ybp {

// Defining relations indexed by their leading letters: lookup(a, b) =
// (u, v) holds the relation a u = b v, built on demand from r as
// u = sigma_a^-1(b), v = gamma_u(a).  An entry exists iff
// sigma_a^-1(b) is defined and (a, u) lies in D; for involutive
// solutions (a,b) has an entry iff (b,a) does.
class RelationTable {
public:
  explicit RelationTable(const PartialSolution& S) : S_(&S) {}

  std::optional<std::pair<Index, Index>> lookup(Index a, Index b) const;
  bool has(Index a, Index b) const { return lookup(a, b).has_value(); }

private:
  const PartialSolution* S_;
};

// One closed square: the corner it closed (grid coordinates of the
// shared vertex, degenerate squares counted with size zero), the two
// edges that met there, and the pair of new edges (both empty for an
// equal-letter corner).
struct SquareLog {
  Index row = 0;
  Index col = 0;
  Letter vletter;
  Letter hletter;
  MonoidWord closing_u;  // new vertical edge (right side)
  MonoidWord closing_v;  // new horizontal edge (bottom side)
};

struct ReversingDiagram {
  MonoidWord w1, w2;
  std::vector<SquareLog> squares;
  MonoidWord final_u, final_v;

  std::string dump() const;
  std::string dot() const;
};

struct ReversingOutcome {
  enum class Kind { Closed, NoRelation, StepLimit };

  Kind kind = Kind::Closed;
  MonoidWord u, v;          // Closed: w1 u = w2 v
  ReversingDiagram diagram;  // complete for Closed, partial otherwise
  Index row = 0, col = 0;    // NoRelation: the corner that failed
  std::optional<std::pair<Letter, Letter>> letters;  // NoRelation: (vertical, horizontal)
  std::uint64_t steps = 0;

  bool closed() const { return kind == Kind::Closed; }
};

// Right reversing of w2^-1 w1 over the defining relations, corners
// closed leftmost first.  Needs a non-degenerate involutive solution;
// missing relations and step exhaustion are outcomes, not errors.
// max_steps defaults to 10*(|w1|+1)*(|w2|+1).
ReversingOutcome reverse_words(const PartialSolution& S, const MonoidWord& w1,
                               const MonoidWord& w2,
                               std::optional<std::uint64_t> max_steps = std::nullopt);

// Partial join g + u where reverse_words(g, h) closed with (u, v); the
// result is words_equal to h v as well.  None when reversing fails.
// Needs a square-free solution (Errc::NotSquareFree otherwise).
std::optional<MonoidWord> oplus(const PartialSolution& S, const MonoidWord& g,
                                const MonoidWord& h,
                                std::optional<std::uint64_t> max_steps = std::nullopt);

enum class Tri { True, False, Skipped };

// Compares a (g + h) with (a g) + (a h); Skipped when either join is
// unavailable.
Tri check_left_distributivity(const PartialSolution& S, const MonoidWord& a,
                              const MonoidWord& g, const MonoidWord& h,
                              std::optional<std::uint64_t> max_steps = std::nullopt);

}  // namespace ybp

#endif
