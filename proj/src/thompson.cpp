#include "ybp/thompson.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

#include "ybp/error.hpp"
#include "ybp/solution.hpp"

namespace ybp {

namespace {

struct FLetter {
  Index idx;
  bool neg;
};

// Expansion bound so a huge exponent cannot wedge the rewriter.
constexpr std::uint64_t kMaxLetters = 100000;

std::vector<FLetter> expand(const FWord& w) {
  std::vector<FLetter> out;
  std::uint64_t total = 0;
  for (const FEntry& e : w) {
    std::uint64_t mag = e.exp < 0 ? ~static_cast<std::uint64_t>(e.exp) + 1
                                  : static_cast<std::uint64_t>(e.exp);
    total += mag;
    if (total > kMaxLetters)
      fail(Errc::TooLarge, "f word expands past the letter limit");
    for (std::uint64_t i = 0; i < mag; ++i) out.push_back({e.idx, e.exp < 0});
  }
  return out;
}

// x_i^-1 x_j rewrites: cancel on i=j, otherwise push the positive
// letter left, bumping whichever index sits above the other.
void sort_neg_pos(std::vector<FLetter>& ls) {
  std::size_t i = 0;
  while (i + 1 < ls.size()) {
    if (!(ls[i].neg && !ls[i + 1].neg)) {
      ++i;
      continue;
    }
    Index a = ls[i].idx, b = ls[i + 1].idx;
    if (a == b) {
      ls.erase(ls.begin() + i, ls.begin() + i + 2);
    } else if (a < b) {
      ls[i] = {b + 1, false};
      ls[i + 1] = {a, true};
    } else {
      ls[i] = {b, false};
      ls[i + 1] = {a + 1, true};
    }
    i = i > 0 ? i - 1 : 0;
  }
}

// Leftmost-descent sorting by x_n x_k -> x_k x_{n+1}; the sequence
// drops lexicographically at each step, so this terminates.
void sort_with_bumps(std::vector<Index>& v) {
  std::size_t i = 0;
  while (i + 1 < v.size()) {
    if (v[i] <= v[i + 1]) {
      ++i;
      continue;
    }
    Index n = v[i], k = v[i + 1];
    v[i] = k;
    v[i + 1] = n + 1;
    i = i > 0 ? i - 1 : 0;
  }
}

}  // namespace

FWord canonical_f_word(FWord w) {
  FWord out;
  for (const FEntry& e : w) {
    if (e.exp == 0) continue;
    if (!out.empty() && out.back().idx == e.idx) {
      std::int64_t a = out.back().exp, b = e.exp;
      if ((b > 0 && a > INT64_MAX - b) || (b < 0 && a < INT64_MIN - b))
        fail(Errc::Overflow, "f word exponent overflow");
      out.back().exp = a + b;
      if (out.back().exp == 0) out.pop_back();
      continue;
    }
    out.push_back(e);
  }
  return out;
}

FWord parse_f_word(const std::string& text) {
  FWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t caret = tok.find('^');
    std::string ip = tok.substr(0, caret);
    if (ip.empty() || ip.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::BadWord, "bad f generator index in '" + tok + "'");
    Index idx;
    std::int64_t exp = 1;
    try {
      std::size_t used = 0;
      idx = std::stoull(ip, &used);
      if (caret != std::string::npos) {
        std::string ep = tok.substr(caret + 1);
        exp = std::stoll(ep, &used);
        if (used != ep.size())
          fail(Errc::BadWord, "bad f exponent in '" + tok + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::BadWord, "unparsable f token '" + tok + "'");
    }
    if (exp == 0) fail(Errc::BadWord, "zero exponent in '" + tok + "'");
    w.push_back({idx, exp});
  }
  return canonical_f_word(std::move(w));
}

std::string f_word_str(const FWord& w) {
  std::string out;
  for (const FEntry& e : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.idx);
    if (e.exp != 1) out += '^' + std::to_string(e.exp);
  }
  return out;
}

FWord FNormalForm::to_word() const {
  FWord w;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] > 0) w.push_back({i, static_cast<std::int64_t>(a[i])});
  for (Index i = b.size(); i-- > 0;)
    if (b[i] > 0) w.push_back({i, -static_cast<std::int64_t>(b[i])});
  return w;
}

FNormalForm f_normal_form(const FWord& w) {
  std::vector<FLetter> ls = expand(w);
  sort_neg_pos(ls);

  std::vector<Index> pos, neg;
  for (const FLetter& l : ls) (l.neg ? neg : pos).push_back(l.idx);
  // negatives read right-to-left follow the same sorting rule as the
  // positives read left-to-right
  std::reverse(neg.begin(), neg.end());
  sort_with_bumps(pos);
  sort_with_bumps(neg);

  Index top = 0;
  if (!pos.empty()) top = pos.back() + 1;
  if (!neg.empty()) top = std::max(top, neg.back() + 1);
  FNormalForm nf;
  nf.a.assign(top, 0);
  nf.b.assign(top, 0);
  for (Index i : pos) ++nf.a[i];
  for (Index i : neg) ++nf.b[i];

  // x_i g x_i^-1 = (g shifted down) once nothing between the matched
  // pair mentions x_i or x_{i+1}
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = 0; i < nf.a.size(); ++i) {
      if (nf.a[i] == 0 || nf.b[i] == 0) continue;
      bool clear_above = i + 1 >= nf.a.size() ||
                         (nf.a[i + 1] == 0 && nf.b[i + 1] == 0);
      if (!clear_above) continue;
      --nf.a[i];
      --nf.b[i];
      if (i + 1 < nf.a.size()) {
        nf.a.erase(nf.a.begin() + i + 1);
        nf.b.erase(nf.b.begin() + i + 1);
      }
      changed = true;
      break;
    }
  }
  while (!nf.a.empty() && nf.a.back() == 0 && nf.b.back() == 0) {
    nf.a.pop_back();
    nf.b.pop_back();
  }
  return nf;
}

bool f_words_equal(const FWord& w1, const FWord& w2) {
  return f_normal_form(w1) == f_normal_form(w2);
}

WindowReport window_checks(Index window) {
  if (window < 3) fail(Errc::BadArgument, "window_checks needs a window >= 3");
  PartialSolution S = PartialSolution::thompson();

  WindowReport rep;
  rep.window = window;
  rep.presentation_match = true;

  // Every defined pair induces x_x x_y = x_{sigma_x(y)} x_{gamma_y(x)};
  // off the diagonal that is an instance of x_n x_k = x_k x_{n+1}.
  std::set<std::pair<Index, Index>> found;
  for (Index x = 0; x < window; ++x) {
    for (Index y = 0; y < window; ++y) {
      auto v = S.r(x, y);
      if (y == x + 1) {
        if (v) rep.presentation_match = false;
        continue;
      }
      if (!v) {
        rep.presentation_match = false;
        continue;
      }
      if (x == y) {
        if (*v != std::make_pair(x, y)) rep.presentation_match = false;
        continue;
      }
      std::pair<Index, Index> nk = x > y ? std::make_pair(x, y)
                                         : std::make_pair(y - 1, x);
      std::pair<Index, Index> want =
          x > y ? std::make_pair(y, x + 1) : std::make_pair(y - 1, x);
      if (*v != want) rep.presentation_match = false;
      found.insert(nk);
    }
  }
  rep.relation_count = found.size();

  std::set<std::pair<Index, Index>> expected;
  for (Index n = 1; n < window; ++n)
    for (Index k = 0; k < n; ++k) expected.insert({n, k});
  rep.relations_match = found == expected;

  rep.irretractable = true;
  std::vector<PartialBijection> sig;
  for (Index n = 0; n < window; ++n) sig.push_back(S.sigma(n));
  for (Index n = 0; n < window && rep.irretractable; ++n)
    for (Index m = n + 1; m < window; ++m)
      if (sig[n] == sig[m]) {
        rep.irretractable = false;
        break;
      }

  rep.invariant_x0 = S.r(0, 0) == std::make_pair(Index{0}, Index{0});
  rep.invariant_tail = true;
  for (Index x = 1; x < window; ++x)
    for (Index y = 1; y < window; ++y)
      if (auto v = S.r(x, y); v && (v->first == 0 || v->second == 0))
        rep.invariant_tail = false;
  return rep;
}

}  // namespace ybp
