#include "ybp/partial_int_fun.hpp"

#include <algorithm>
#include <limits>

#include "ybp/error.hpp"

namespace ybp {

PartialIntFun PartialIntFun::zero(const Carrier& c, IndexSet dom) {
  PartialIntFun f;
  f.carrier_ = c;
  f.dom_ = std::move(dom);
  return f;
}

PartialIntFun PartialIntFun::make(const Carrier& c, IndexSet dom,
                                  std::vector<std::pair<Index, std::int64_t>> support) {
  std::sort(support.begin(), support.end());
  for (std::size_t i = 0; i < support.size(); ++i) {
    auto [k, v] = support[i];
    if (v == 0) fail(Errc::BadArgument, "zero entry in support");
    if (!dom.contains(k)) fail(Errc::BadArgument, "support point outside domain");
    if (i > 0 && support[i - 1].first == k)
      fail(Errc::BadArgument, "duplicate support point");
  }
  PartialIntFun f;
  f.carrier_ = c;
  f.dom_ = std::move(dom);
  f.supp_ = std::move(support);
  return f;
}

std::optional<std::int64_t> PartialIntFun::at(Index k) const {
  if (!dom_.contains(k)) return std::nullopt;
  auto it = std::lower_bound(supp_.begin(), supp_.end(), k,
                             [](const auto& e, Index v) { return e.first < v; });
  if (it != supp_.end() && it->first == k) return it->second;
  return 0;
}

PartialIntFun PartialIntFun::negated() const {
  PartialIntFun f = *this;
  for (auto& [k, v] : f.supp_) {
    if (v == std::numeric_limits<std::int64_t>::min())
      fail(Errc::Overflow, "negating INT64_MIN");
    v = -v;
  }
  return f;
}

PartialIntFun PartialIntFun::restricted_to(const IndexSet& dom) const {
  PartialIntFun f;
  f.carrier_ = carrier_;
  f.dom_ = dom_.intersect(dom);
  for (const auto& e : supp_)
    if (f.dom_.contains(e.first)) f.supp_.push_back(e);
  return f;
}

std::string PartialIntFun::str() const {
  std::string s = "dom=" + dom_.str() + " vals={";
  bool first = true;
  for (const auto& [k, v] : supp_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "}";
}

PartialIntFun add(const PartialIntFun& f, const PartialIntFun& g) {
  if (!(f.carrier() == g.carrier()))
    fail(Errc::BadArgument, "add over different carriers");
  IndexSet dom = f.domain().intersect(g.domain());
  std::vector<std::pair<Index, std::int64_t>> supp;
  const auto& a = f.support();
  const auto& b = g.support();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Index k;
    std::int64_t v = 0;
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      k = a[i].first; v = a[i].second; ++i;
    } else if (i >= a.size() || b[j].first < a[i].first) {
      k = b[j].first; v = b[j].second; ++j;
    } else {
      k = a[i].first;
      if (__builtin_add_overflow(a[i].second, b[j].second, &v))
        fail(Errc::Overflow, "sum exceeds 64-bit range at index " + std::to_string(k));
      ++i; ++j;
    }
    if (v != 0 && dom.contains(k)) supp.emplace_back(k, v);
  }
  return PartialIntFun::make(f.carrier(), std::move(dom), std::move(supp));
}

PartialIntFun act(const PartialBijection& tau, const PartialIntFun& f) {
  if (!(tau.carrier() == f.carrier()))
    fail(Errc::BadArgument, "act over different carriers");
  IndexSet dom = tau.image_of(tau.domain().intersect(f.domain()));
  std::vector<std::pair<Index, std::int64_t>> supp;
  supp.reserve(f.support().size());
  for (const auto& [k, v] : f.support()) {
    if (auto y = tau.apply(k)) supp.emplace_back(*y, v);
  }
  return PartialIntFun::make(f.carrier(), std::move(dom), std::move(supp));
}

PartialIntFun compose_fun(const PartialIntFun& f, const PartialBijection& tau) {
  return act(tau.inverse(), f);
}

}  // namespace ybp
