#include "ybp/index_set.hpp"

#include <algorithm>

#include "ybp/error.hpp"

namespace ybp {

namespace {

std::vector<Interval> normalized(std::vector<Interval> ivs) {
  for (const auto& iv : ivs) {
    if (iv.lo > iv.hi) fail(Errc::BadArgument, "interval with lo > hi");
  }
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& iv : ivs) {
    if (!out.empty()) {
      Interval& last = out.back();
      // merge overlapping or adjacent intervals
      if (last.unbounded() || iv.lo <= last.hi + 1) {
        if (!last.unbounded() && iv.hi > last.hi) last.hi = iv.hi;
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace

IndexSet::IndexSet(std::vector<Interval> ivs) : iv_(normalized(std::move(ivs))) {}

IndexSet IndexSet::full(const Carrier& c) {
  if (c.countable()) return all();
  if (c.size() == 0) return empty();
  return range(0, c.size() - 1);
}

IndexSet IndexSet::from_points(const std::vector<Index>& pts) {
  std::vector<Interval> ivs;
  ivs.reserve(pts.size());
  for (Index p : pts) ivs.push_back({p, p});
  return IndexSet(std::move(ivs));
}

bool IndexSet::contains(Index k) const {
  for (const auto& iv : iv_) {
    if (k < iv.lo) return false;
    if (k <= iv.hi) return true;
  }
  return false;
}

bool IndexSet::contains(const IndexSet& other) const {
  return other.minus(*this).is_empty();
}

std::optional<Index> IndexSet::size() const {
  if (unbounded()) return std::nullopt;
  Index n = 0;
  for (const auto& iv : iv_) n += iv.hi - iv.lo + 1;
  return n;
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < iv_.size() && j < o.iv_.size()) {
    const Interval& a = iv_[i];
    const Interval& b = o.iv_[j];
    Index lo = std::max(a.lo, b.lo);
    Index hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi <= b.hi) ++i; else ++j;
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  std::vector<Interval> both = iv_;
  both.insert(both.end(), o.iv_.begin(), o.iv_.end());
  return IndexSet(std::move(both));
}

IndexSet IndexSet::minus(const IndexSet& o) const {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& a : iv_) {
    Index lo = a.lo;
    while (j < o.iv_.size() && !o.iv_[j].unbounded() && o.iv_[j].hi < a.lo) ++j;
    std::size_t k = j;
    bool covered_to_end = false;
    while (k < o.iv_.size() && o.iv_[k].lo <= a.hi) {
      const Interval& b = o.iv_[k];
      if (b.lo > lo) out.push_back({lo, b.lo - 1});
      if (b.unbounded() || b.hi >= a.hi) { covered_to_end = true; break; }
      lo = std::max(lo, b.hi + 1);
      ++k;
    }
    if (!covered_to_end && lo <= a.hi) out.push_back({lo, a.hi});
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::shifted(std::int64_t s) const {
  if (s == 0 || iv_.empty()) return *this;
  std::vector<Interval> out;
  out.reserve(iv_.size());
  for (const auto& iv : iv_) {
    if (s < 0 && iv.lo < static_cast<Index>(-s))
      fail(Errc::Internal, "shift would leave the naturals");
    Index lo = iv.lo + static_cast<Index>(s);
    Index hi = iv.unbounded() ? kInf : iv.hi + static_cast<Index>(s);
    out.push_back({lo, hi});
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::clipped(Index window) const {
  if (window == 0) return empty();
  return intersect(range(0, window - 1));
}

std::vector<Index> IndexSet::members_below(Index window) const {
  std::vector<Index> out;
  for_each_below(window, [&](Index k) { out.push_back(k); });
  return out;
}

std::string IndexSet::str() const {
  if (iv_.empty()) return "empty";
  std::string s;
  for (const auto& iv : iv_) {
    if (!s.empty()) s += ",";
    s += std::to_string(iv.lo);
    if (iv.unbounded()) {
      s += "-";
    } else if (iv.hi != iv.lo) {
      s += "-" + std::to_string(iv.hi);
    }
  }
  return s;
}

}  // namespace ybp
