#ifndef YBP_TESTS_PL_ORACLE_HPP
#define YBP_TESTS_PL_ORACLE_HPP

// Exact model of F as piecewise-linear homeomorphisms of [0,1] with
// dyadic breakpoints and power-of-two slopes.  x_n is the identity up
// to 1 - 2^-n and squeezes the tail by the usual doubling pattern.
// Words act first letter first.  All arithmetic is exact, so map
// equality is decidable and the model can referee the normal form.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "ybp/thompson.hpp"

namespace plmodel {

struct Dyadic {
  std::int64_t num = 0;  // value = num / 2^k, num odd unless k == 0
  int k = 0;
};

inline Dyadic norm(std::int64_t num, int k) {
  while (k > 0 && num % 2 == 0) {
    num /= 2;
    --k;
  }
  return {num, k};
}

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("dyadic overflow");
  return static_cast<std::int64_t>(v);
}

inline int cmp(const Dyadic& a, const Dyadic& b) {
  int K = std::max(a.k, b.k);
  __int128 an = static_cast<__int128>(a.num) << (K - a.k);
  __int128 bn = static_cast<__int128>(b.num) << (K - b.k);
  return an < bn ? -1 : an > bn ? 1 : 0;
}

inline bool operator==(const Dyadic& a, const Dyadic& b) {
  return cmp(a, b) == 0;
}
inline bool operator<(const Dyadic& a, const Dyadic& b) {
  return cmp(a, b) < 0;
}

inline Dyadic add(const Dyadic& a, const Dyadic& b) {
  int K = std::max(a.k, b.k);
  __int128 v = (static_cast<__int128>(a.num) << (K - a.k)) +
               (static_cast<__int128>(b.num) << (K - b.k));
  return norm(narrow(v), K);
}

inline Dyadic sub(const Dyadic& a, const Dyadic& b) {
  return add(a, {-b.num, b.k});
}

// exponent e with a = b * 2^e; both positive by construction
inline int pow2_ratio(const Dyadic& a, const Dyadic& b) {
  if (a.num != b.num) throw std::logic_error("slope is not a power of two");
  return b.k - a.k;
}

inline Dyadic mul_pow2(const Dyadic& a, int e) {
  if (e >= 0) return norm(narrow(static_cast<__int128>(a.num) << e), a.k);
  return norm(a.num, a.k - e);
}

struct PLMap {
  // breakpoints including both endpoints, strictly increasing in x and y
  std::vector<std::pair<Dyadic, Dyadic>> pts;

  bool operator==(const PLMap& o) const {
    if (pts.size() != o.pts.size()) return false;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (!(pts[i].first == o.pts[i].first && pts[i].second == o.pts[i].second))
        return false;
    return true;
  }
};

inline int slope_exp(const PLMap& f, std::size_t seg) {
  return pow2_ratio(sub(f.pts[seg + 1].second, f.pts[seg].second),
                    sub(f.pts[seg + 1].first, f.pts[seg].first));
}

inline PLMap canonical(PLMap f) {
  std::vector<std::pair<Dyadic, Dyadic>> out;
  for (const auto& p : f.pts) {
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      int left = pow2_ratio(sub(b.second, a.second), sub(b.first, a.first));
      int right = pow2_ratio(sub(p.second, b.second), sub(p.first, b.first));
      if (left != right) break;
      out.pop_back();
    }
    if (!out.empty() && out.back().first == p.first) continue;
    out.push_back(p);
  }
  f.pts = std::move(out);
  return f;
}

inline Dyadic eval(const PLMap& f, const Dyadic& x) {
  std::size_t seg = 0;
  while (seg + 2 < f.pts.size() && !(x < f.pts[seg + 1].first)) ++seg;
  const auto& [x0, y0] = f.pts[seg];
  return add(y0, mul_pow2(sub(x, x0), slope_exp(f, seg)));
}

inline Dyadic inv_eval(const PLMap& f, const Dyadic& y) {
  std::size_t seg = 0;
  while (seg + 2 < f.pts.size() && !(y < f.pts[seg + 1].second)) ++seg;
  const auto& [x0, y0] = f.pts[seg];
  return add(x0, mul_pow2(sub(y, y0), -slope_exp(f, seg)));
}

inline PLMap identity_map() {
  return {{{{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}}};
}

inline PLMap inverse(PLMap f) {
  for (auto& p : f.pts) std::swap(p.first, p.second);
  return f;
}

// g after f
inline PLMap compose(const PLMap& g, const PLMap& f) {
  auto less = [](const Dyadic& a, const Dyadic& b) { return a < b; };
  std::set<Dyadic, decltype(less)> xs(less);
  for (const auto& p : f.pts) xs.insert(p.first);
  for (const auto& p : g.pts) xs.insert(inv_eval(f, p.first));
  PLMap h;
  for (const Dyadic& x : xs) h.pts.push_back({x, eval(g, eval(f, x))});
  return canonical(std::move(h));
}

inline PLMap generator_map(ybp::Index n) {
  int ni = static_cast<int>(n);
  Dyadic c = sub({1, 0}, {1, ni});  // 1 - 2^-n
  PLMap f;
  f.pts.push_back({{0, 0}, {0, 0}});
  if (c.num != 0) f.pts.push_back({c, c});
  f.pts.push_back({add(c, {1, ni + 2}), add(c, {1, ni + 1})});
  f.pts.push_back({add(c, {1, ni + 1}), add(c, {3, ni + 2})});
  f.pts.push_back({{1, 0}, {1, 0}});
  return canonical(std::move(f));
}

inline PLMap word_map(const ybp::FWord& w) {
  PLMap cur = identity_map();
  for (const ybp::FEntry& e : w) {
    PLMap g = generator_map(e.idx);
    if (e.exp < 0) g = inverse(g);
    std::int64_t mag = e.exp < 0 ? -e.exp : e.exp;
    for (std::int64_t i = 0; i < mag; ++i) cur = compose(g, cur);
  }
  return cur;
}

}  // namespace plmodel

#endif
