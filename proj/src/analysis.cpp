#include "ybp/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "ybp/error.hpp"

namespace ybp {

namespace {

void require_finite(const PartialSolution& S, const char* op) {
  if (S.carrier().countable())
    fail(Errc::BadArgument, std::string(op) + " needs a finite carrier");
}

std::string class_pair_str(Index i, Index j) {
  return "classes [" + std::to_string(i) + "],[" + std::to_string(j) + "]";
}

}  // namespace

RetractResult retract(const PartialSolution& S) {
  require_finite(S, "retract");
  if (!S.certified(Axiom::NonDegenerate) || !S.certified(Axiom::Involutive))
    fail(Errc::BadArgument,
         "retract expects a non-degenerate involutive solution");

  Index n = S.carrier().size();
  std::vector<PartialBijection> sig;
  sig.reserve(n);
  for (Index x = 0; x < n; ++x) sig.push_back(S.sigma(x));

  std::vector<Index> class_of(n);
  std::vector<Index> rep;  // class -> first element
  for (Index x = 0; x < n; ++x) {
    Index c = rep.size();
    for (Index k = 0; k < rep.size(); ++k) {
      if (sig[rep[k]] == sig[x]) {
        c = k;
        break;
      }
    }
    if (c == rep.size()) rep.push_back(x);
    class_of[x] = c;
  }

  Index m = rep.size();
  std::vector<std::vector<Index>> members(m);
  for (Index x = 0; x < n; ++x) members[class_of[x]].push_back(x);

  // Every representative pair of a class pair must agree on whether r
  // is defined and on the classes of its output.
  Carrier qc = Carrier::finite(m);
  std::vector<std::vector<std::pair<Index, Index>>> sig_pairs(m), gam_pairs(m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      bool any = false, all = true;
      std::optional<std::pair<Index, Index>> image;
      for (Index x : members[i]) {
        for (Index y : members[j]) {
          auto v = S.r(x, y);
          if (!v) {
            all = false;
            continue;
          }
          any = true;
          std::pair<Index, Index> cls = {class_of[v->first],
                                         class_of[v->second]};
          if (!image) {
            image = cls;
          } else if (*image != cls) {
            fail(Errc::QuotientNotWellDefined,
                 "representatives of " + class_pair_str(i, j) +
                     " map to different classes");
          }
        }
      }
      if (!any) continue;
      if (!all)
        fail(Errc::QuotientNotWellDefined,
             "representatives of " + class_pair_str(i, j) +
                 " disagree on definedness");
      sig_pairs[i].push_back({j, image->first});
      gam_pairs[j].push_back({i, image->second});
    }
  }

  std::vector<PartialBijection> qsig, qgam;
  for (Index i = 0; i < m; ++i) {
    try {
      qsig.push_back(PartialBijection::from_pairs(qc, sig_pairs[i]));
      qgam.push_back(PartialBijection::from_pairs(qc, gam_pairs[i]));
    } catch (const Error&) {
      fail(Errc::QuotientNotWellDefined,
           "induced map of class [" + std::to_string(i) +
               "] is not injective");
    }
  }

  RetractResult out{PartialSolution::finite(std::move(qsig), std::move(qgam)),
                    std::move(class_of),
                    {}};
  out.quotient_reports = verify_all(out.quotient);
  return out;
}

MplResult multipermutation_level(const PartialSolution& S, Index max_iter) {
  require_finite(S, "multipermutation_level");

  MplResult res;
  PartialSolution cur = S;
  if (cur.carrier().size() == 1) {
    res.outcome = MplResult::Outcome::Reached;
    res.level = 0;
    res.final_size = 1;
    return res;
  }
  for (Index k = 1; k <= max_iter; ++k) {
    RetractResult step = retract(cur);
    if (step.size() == 1) {
      res.outcome = MplResult::Outcome::Reached;
      res.level = k;
      res.final_size = 1;
      return res;
    }
    if (step.size() == cur.carrier().size()) {
      res.outcome = MplResult::Outcome::FixedPoint;
      res.final_size = step.size();
      return res;
    }
    cur = std::move(step.quotient);
  }
  res.outcome = MplResult::Outcome::MaxIter;
  res.final_size = cur.carrier().size();
  return res;
}

namespace {

// Restriction of S to the members list; requires that r already maps
// defined pairs inside the part into it.
PartialSolution restrict_to(const PartialSolution& S,
                            const std::vector<Index>& part) {
  Index nn = part.size();
  Carrier c = Carrier::finite(nn);
  std::vector<Index> pos(S.carrier().size(), kInf);
  for (Index a = 0; a < nn; ++a) pos[part[a]] = a;

  std::vector<std::vector<std::pair<Index, Index>>> sp(nn), gp(nn);
  for (Index a = 0; a < nn; ++a) {
    for (Index b = 0; b < nn; ++b) {
      auto v = S.r(part[a], part[b]);
      if (!v) continue;
      sp[a].push_back({b, pos[v->first]});
      gp[b].push_back({a, pos[v->second]});
    }
  }
  std::vector<PartialBijection> sig, gam;
  for (Index a = 0; a < nn; ++a) {
    sig.push_back(PartialBijection::from_pairs(c, sp[a]));
    gam.push_back(PartialBijection::from_pairs(c, gp[a]));
  }
  return PartialSolution::finite(std::move(sig), std::move(gam));
}

bool part_invariant(const PartialSolution& S, const std::vector<Index>& part,
                    const std::vector<char>& in_part) {
  for (Index a : part) {
    for (Index b : part) {
      auto v = S.r(a, b);
      if (!v) continue;
      if (!in_part[v->first] || !in_part[v->second]) return false;
    }
  }
  return true;
}

bool part_admissible(const PartialSolution& S, const std::vector<Index>& part,
                     const std::vector<char>& in_part) {
  if (!part_invariant(S, part, in_part)) return false;
  PartialSolution R = restrict_to(S, part);
  return R.certified(Axiom::NonDegenerate) && R.certified(Axiom::Involutive);
}

}  // namespace

std::optional<Partition2> decompose(const PartialSolution& S, Index limit) {
  require_finite(S, "decompose");
  Index n = S.carrier().size();
  if (n > limit) fail(Errc::TooLarge, "carrier exceeds the decompose limit");
  if (n < 2) return std::nullopt;

  // Index 0 always goes to the first part, so each unordered
  // bipartition shows up exactly once.
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; mask += 2) {
    std::vector<Index> ys, zs;
    std::vector<char> in_y(n, 0), in_z(n, 0);
    for (Index k = 0; k < n; ++k) {
      if (mask >> k & 1) {
        ys.push_back(k);
        in_y[k] = 1;
      } else {
        zs.push_back(k);
        in_z[k] = 1;
      }
    }
    if (!part_admissible(S, ys, in_y)) continue;
    if (!part_admissible(S, zs, in_z)) continue;
    return Partition2{IndexSet::from_points(ys), IndexSet::from_points(zs)};
  }
  return std::nullopt;
}

bool is_isomorphism(const PartialSolution& S1, const PartialSolution& S2,
                    const std::vector<Index>& perm) {
  Index n = S1.carrier().size();
  if (S2.carrier().size() != n || perm.size() != n) return false;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      auto v1 = S1.r(x, y);
      auto v2 = S2.r(perm[x], perm[y]);
      if (v1.has_value() != v2.has_value()) return false;
      if (!v1) continue;
      if (perm[v1->first] != v2->first || perm[v1->second] != v2->second)
        return false;
    }
  }
  return true;
}

std::optional<std::vector<Index>> are_isomorphic(const PartialSolution& S1,
                                                 const PartialSolution& S2,
                                                 Index limit) {
  require_finite(S1, "are_isomorphic");
  require_finite(S2, "are_isomorphic");
  Index n = S1.carrier().size();
  if (S2.carrier().size() != n) return std::nullopt;
  if (n > limit) fail(Errc::TooLarge, "carrier exceeds the isomorphism limit");

  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_isomorphism(S1, S2, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace ybp
