#include "ybp/partial_bijection.hpp"

#include <algorithm>

#include "ybp/error.hpp"

namespace ybp {

namespace {

Interval shifted_iv(const Interval& iv, std::int64_t s) {
  if (s < 0 && iv.lo < static_cast<Index>(-s))
    fail(Errc::BadArgument, "piece image would leave the naturals");
  Index lo = iv.lo + static_cast<Index>(s);
  Index hi = iv.unbounded() ? kInf : iv.hi + static_cast<Index>(s);
  return {lo, hi};
}

// Sort by domain, merge mergeable neighbours, then check both domain
// intervals and image intervals are pairwise disjoint.
std::vector<Piece> canonicalized(const Carrier& c, std::vector<Piece> ps) {
  for (const auto& p : ps) {
    if (p.iv.lo > p.iv.hi) fail(Errc::BadArgument, "piece with lo > hi");
    if (!c.countable()) {
      Index n = c.size();
      if (p.iv.unbounded() || p.iv.hi >= n)
        fail(Errc::BadArgument, "piece outside finite carrier");
      Interval img = shifted_iv(p.iv, p.shift);
      if (img.hi >= n) fail(Errc::BadArgument, "piece image outside finite carrier");
    } else {
      shifted_iv(p.iv, p.shift);  // validates image stays in the naturals
    }
  }
  std::sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) {
    return a.iv.lo < b.iv.lo;
  });
  std::vector<Piece> out;
  for (const auto& p : ps) {
    if (!out.empty()) {
      Piece& last = out.back();
      if (last.iv.unbounded() || p.iv.lo <= last.iv.hi)
        fail(Errc::BadArgument, "overlapping pieces");
      if (p.iv.lo == last.iv.hi + 1 && p.shift == last.shift) {
        last.iv.hi = p.iv.hi;
        continue;
      }
    }
    out.push_back(p);
  }
  std::vector<Interval> images;
  images.reserve(out.size());
  for (const auto& p : out) images.push_back(shifted_iv(p.iv, p.shift));
  std::sort(images.begin(), images.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i - 1].unbounded() || images[i].lo <= images[i - 1].hi)
      fail(Errc::NotInjective, "two pieces share an image point");
  }
  return out;
}

}  // namespace

PartialBijection::PartialBijection(Carrier c, std::vector<Piece> pieces)
    : carrier_(std::move(c)), pieces_(canonicalized(carrier_, std::move(pieces))) {
  std::vector<Interval> dom, ran;
  dom.reserve(pieces_.size());
  ran.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    dom.push_back(p.iv);
    ran.push_back(shifted_iv(p.iv, p.shift));
  }
  dom_ = IndexSet(std::move(dom));
  ran_ = IndexSet(std::move(ran));
}

PartialBijection PartialBijection::empty(const Carrier& c) {
  return PartialBijection(c, {});
}

PartialBijection PartialBijection::identity(const Carrier& c) {
  return identity_on(c, IndexSet::full(c));
}

PartialBijection PartialBijection::identity_on(const Carrier& c, const IndexSet& dom) {
  std::vector<Piece> ps;
  ps.reserve(dom.intervals().size());
  for (const auto& iv : dom.intervals()) ps.push_back({iv, 0});
  return PartialBijection(c, std::move(ps));
}

PartialBijection PartialBijection::from_pairs(
    const Carrier& c, const std::vector<std::pair<Index, Index>>& pairs) {
  std::vector<Piece> ps;
  ps.reserve(pairs.size());
  for (const auto& [k, v] : pairs) {
    if (!c.contains(k) || !c.contains(v))
      fail(Errc::BadArgument, "mapping outside carrier");
    std::int64_t shift = static_cast<std::int64_t>(v) - static_cast<std::int64_t>(k);
    ps.push_back({{k, k}, shift});
  }
  return PartialBijection(c, std::move(ps));
}

PartialBijection PartialBijection::from_pieces(const Carrier& c, std::vector<Piece> pieces) {
  return PartialBijection(c, std::move(pieces));
}

const Piece* PartialBijection::find_piece(Index k) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), k,
                             [](Index v, const Piece& p) { return v < p.iv.lo; });
  if (it == pieces_.begin()) return nullptr;
  --it;
  if (k <= it->iv.hi) return &*it;
  return nullptr;
}

std::optional<Index> PartialBijection::apply(Index k) const {
  const Piece* p = find_piece(k);
  if (!p) return std::nullopt;
  return k + static_cast<Index>(p->shift);
}

std::optional<Index> PartialBijection::preimage(Index v) const {
  for (const auto& p : pieces_) {
    Interval img = {p.iv.lo + static_cast<Index>(p.shift),
                    p.iv.unbounded() ? kInf : p.iv.hi + static_cast<Index>(p.shift)};
    if (v >= img.lo && v <= img.hi) return v - static_cast<Index>(p.shift);
  }
  return std::nullopt;
}

PartialBijection PartialBijection::inverse() const {
  std::vector<Piece> ps;
  ps.reserve(pieces_.size());
  for (const auto& p : pieces_) ps.push_back({shifted_iv(p.iv, p.shift), -p.shift});
  return PartialBijection(carrier_, std::move(ps));
}

PartialBijection PartialBijection::restricted_to(const IndexSet& dom) const {
  std::vector<Piece> ps;
  for (const auto& p : pieces_) {
    IndexSet cut = IndexSet({p.iv}).intersect(dom);
    for (const auto& iv : cut.intervals()) ps.push_back({iv, p.shift});
  }
  return PartialBijection(carrier_, std::move(ps));
}

IndexSet PartialBijection::image_of(const IndexSet& s) const {
  IndexSet out;
  for (const auto& p : pieces_) {
    IndexSet cut = IndexSet({p.iv}).intersect(s);
    out = out.unite(cut.shifted(p.shift));
  }
  return out;
}

IndexSet PartialBijection::preimage_of(const IndexSet& s) const {
  return inverse().image_of(s);
}

bool PartialBijection::is_partial_identity() const {
  for (const auto& p : pieces_)
    if (p.shift != 0) return false;
  return true;
}

std::string PartialBijection::str() const {
  if (pieces_.empty()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& p : pieces_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(p.iv.lo);
    if (p.iv.unbounded()) s += "-";
    else if (p.iv.hi != p.iv.lo) s += "-" + std::to_string(p.iv.hi);
    s += (p.shift >= 0 ? ":+" : ":") + std::to_string(p.shift);
  }
  return s + "}";
}

PartialBijection compose(const PartialBijection& outer, const PartialBijection& inner) {
  if (!(outer.carrier() == inner.carrier()))
    fail(Errc::BadArgument, "compose over different carriers");
  std::vector<Piece> ps;
  for (const auto& pi : inner.pieces()) {
    Interval mid = {pi.iv.lo + static_cast<Index>(pi.shift),
                    pi.iv.unbounded() ? kInf : pi.iv.hi + static_cast<Index>(pi.shift)};
    for (const auto& po : outer.pieces()) {
      Index lo = std::max(mid.lo, po.iv.lo);
      Index hi = std::min(mid.hi, po.iv.hi);
      if (lo > hi) continue;
      Interval back = {lo - static_cast<Index>(pi.shift),
                       hi == kInf ? kInf : hi - static_cast<Index>(pi.shift)};
      ps.push_back({back, pi.shift + po.shift});
    }
  }
  return PartialBijection::from_pieces(outer.carrier(), std::move(ps));
}

}  // namespace ybp
