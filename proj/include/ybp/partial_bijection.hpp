#ifndef YBP_PARTIAL_BIJECTION_HPP
#define YBP_PARTIAL_BIJECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybp/carrier.hpp"
#include "ybp/index_set.hpp"

namespace ybp {

// One run of consecutive indices mapped by a constant shift:
// k -> k + shift for k in iv.
struct Piece {
  Interval iv;
  std::int64_t shift;

  bool operator==(const Piece&) const = default;
};

// Injective partial map of the carrier, stored as a canonical sorted
// piece list (adjacent pieces with equal shift are merged, so equal
// maps have equal representations).  Point overrides are width-1
// pieces.  Closed under composition and inversion; domain and range
// are exact IndexSets.
class PartialBijection {
public:
  static PartialBijection empty(const Carrier& c);
  static PartialBijection identity(const Carrier& c);
  static PartialBijection identity_on(const Carrier& c, const IndexSet& dom);
  // Throws Errc::NotInjective when two points share an image.
  static PartialBijection from_pairs(const Carrier& c,
                                     const std::vector<std::pair<Index, Index>>& pairs);
  static PartialBijection from_pieces(const Carrier& c, std::vector<Piece> pieces);

  const Carrier& carrier() const { return carrier_; }
  const IndexSet& domain() const { return dom_; }
  const IndexSet& range() const { return ran_; }
  bool defined_at(Index k) const { return find_piece(k) != nullptr; }

  std::optional<Index> apply(Index k) const;
  std::optional<Index> preimage(Index v) const;

  PartialBijection inverse() const;
  PartialBijection restricted_to(const IndexSet& dom) const;
  IndexSet image_of(const IndexSet& s) const;
  IndexSet preimage_of(const IndexSet& s) const;

  bool is_empty() const { return pieces_.empty(); }
  bool is_partial_identity() const;

  const std::vector<Piece>& pieces() const { return pieces_; }

  bool operator==(const PartialBijection& o) const {
    return carrier_ == o.carrier_ && pieces_ == o.pieces_;
  }

  std::string str() const;

private:
  PartialBijection(Carrier c, std::vector<Piece> pieces);

  const Piece* find_piece(Index k) const;

  Carrier carrier_;
  std::vector<Piece> pieces_;
  IndexSet dom_;
  IndexSet ran_;
};

// compose(outer, inner): apply inner first, then outer.  Defined at k
// iff inner(k) lands in outer's domain.
PartialBijection compose(const PartialBijection& outer, const PartialBijection& inner);

}  // namespace ybp

#endif
