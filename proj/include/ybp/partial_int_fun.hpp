#ifndef YBP_PARTIAL_INT_FUN_HPP
#define YBP_PARTIAL_INT_FUN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybp/index_set.hpp"
#include "ybp/partial_bijection.hpp"

namespace ybp {

// Partial integer-valued function on the carrier: an explicit domain
// plus the finitely many points where the value is nonzero.  Two
// functions are equal iff their domains and supports agree; a zero
// function on domain A differs from a zero function on domain B.
class PartialIntFun {
public:
  PartialIntFun() = default;

  static PartialIntFun zero(const Carrier& c, IndexSet dom);
  static PartialIntFun zero_all(const Carrier& c) { return zero(c, IndexSet::full(c)); }
  // support entries must lie in dom and be nonzero
  static PartialIntFun make(const Carrier& c, IndexSet dom,
                            std::vector<std::pair<Index, std::int64_t>> support);

  const Carrier& carrier() const { return carrier_; }
  const IndexSet& domain() const { return dom_; }
  const std::vector<std::pair<Index, std::int64_t>>& support() const { return supp_; }

  bool defined_at(Index k) const { return dom_.contains(k); }
  std::optional<std::int64_t> at(Index k) const;

  bool zero_on_domain() const { return supp_.empty(); }

  PartialIntFun negated() const;
  PartialIntFun restricted_to(const IndexSet& dom) const;

  bool operator==(const PartialIntFun&) const = default;

  std::string str() const;

private:
  Carrier carrier_ = Carrier::finite(0);
  IndexSet dom_;
  std::vector<std::pair<Index, std::int64_t>> supp_;  // sorted by key
};

// Pointwise sum on the intersection of the two domains; value overflow
// is a hard error (Errc::Overflow).
PartialIntFun add(const PartialIntFun& f, const PartialIntFun& g);

// act(tau, f): the translate of f along tau, defined on
// tau(dom(tau) & dom(f)) with value at y equal to f(tau^-1(y)).
PartialIntFun act(const PartialBijection& tau, const PartialIntFun& f);

// f after tau: defined at k iff tau(k) is defined and lies in dom(f).
// Same map as act(tau.inverse(), f).
PartialIntFun compose_fun(const PartialIntFun& f, const PartialBijection& tau);

}  // namespace ybp

#endif
