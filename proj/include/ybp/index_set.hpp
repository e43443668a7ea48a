#ifndef YBP_INDEX_SET_HPP
#define YBP_INDEX_SET_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ybp/carrier.hpp"

namespace ybp {

// Upper endpoint marker for an interval extending to infinity.
inline constexpr Index kInf = std::numeric_limits<Index>::max();

struct Interval {
  Index lo;
  Index hi;  // inclusive; kInf means unbounded

  bool unbounded() const { return hi == kInf; }
  bool operator==(const Interval&) const = default;
};

// Set of natural numbers kept as sorted disjoint non-adjacent closed
// intervals; only the last interval may be unbounded.  The normalized
// form is unique, so operator== decides set equality.
class IndexSet {
public:
  IndexSet() = default;
  explicit IndexSet(std::vector<Interval> ivs);

  static IndexSet empty() { return IndexSet(); }
  static IndexSet single(Index k) { return IndexSet({{k, k}}); }
  static IndexSet range(Index lo, Index hi) { return IndexSet({{lo, hi}}); }
  static IndexSet all() { return IndexSet({{0, kInf}}); }
  static IndexSet full(const Carrier& c);
  static IndexSet from_points(const std::vector<Index>& pts);

  bool is_empty() const { return iv_.empty(); }
  bool contains(Index k) const;
  bool contains(const IndexSet& other) const;  // superset test
  bool unbounded() const { return !iv_.empty() && iv_.back().unbounded(); }
  std::optional<Index> size() const;  // nullopt when unbounded
  Index min() const { return iv_.front().lo; }  // pre: not empty

  IndexSet intersect(const IndexSet& o) const;
  IndexSet unite(const IndexSet& o) const;
  IndexSet minus(const IndexSet& o) const;
  IndexSet complement_within(const IndexSet& universe) const { return universe.minus(*this); }
  IndexSet shifted(std::int64_t s) const;  // pre: s >= -min() when nonempty
  IndexSet clipped(Index window) const;    // intersection with [0, window)

  const std::vector<Interval>& intervals() const { return iv_; }

  // Visit members below `window` in increasing order.
  template <class F>
  void for_each_below(Index window, F&& f) const {
    for (const auto& iv : iv_) {
      if (iv.lo >= window) break;
      Index hi = iv.unbounded() ? window - 1 : std::min(iv.hi, window - 1);
      for (Index k = iv.lo; k <= hi; ++k) {
        f(k);
        if (k == kInf) break;
      }
    }
  }

  std::vector<Index> members_below(Index window) const;

  bool operator==(const IndexSet&) const = default;

  std::string str() const;

private:
  std::vector<Interval> iv_;
};

}  // namespace ybp

#endif
