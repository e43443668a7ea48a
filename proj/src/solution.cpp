#include "ybp/solution.hpp"

#include <future>
#include <thread>

#include "ybp/error.hpp"

namespace ybp {

std::optional<Axiom> axiom_from_name(const std::string& s) {
  if (s == "NonDegenerate" || s == "nondegenerate") return Axiom::NonDegenerate;
  if (s == "Involutive" || s == "involutive") return Axiom::Involutive;
  if (s == "Braided" || s == "braided") return Axiom::Braided;
  if (s == "SquareFree" || s == "squarefree") return Axiom::SquareFree;
  return std::nullopt;
}

bool witness_less(const Witness& a, const Witness& b) {
  if (a.tuple != b.tuple) return a.tuple < b.tuple;
  return a.equation < b.equation;
}

namespace {

struct ScanResult {
  std::optional<Witness> witness;
  std::uint64_t skipped = 0;

  void note(Witness w) {
    if (!witness || witness_less(w, *witness)) witness = std::move(w);
  }
  void merge(const ScanResult& o) {
    if (o.witness) note(*o.witness);
    skipped += o.skipped;
  }
};

std::optional<Index> ap(const PartialBijection& m, std::optional<Index> k) {
  if (!k) return std::nullopt;
  return m.apply(*k);
}

void check_nondegenerate(const PartialSolution& S, Index lo, Index hi, Index w,
                         ScanResult& out) {
  // The piece representation already forbids non-injective maps, so
  // this re-checks by evaluation, catching family-rule mistakes.
  for (Index x = lo; x < hi; ++x) {
    for (int fam = 0; fam < 2; ++fam) {
      PartialBijection m = fam == 0 ? S.sigma(x) : S.gamma(x);
      std::vector<std::pair<Index, Index>> seen;
      for (Index y : m.domain().members_below(w)) {
        Index v = *m.apply(y);
        if (!m.range().contains(v))
          out.note({{x, y}, fam == 0 ? "range(sigma_x) misses sigma_x(y)"
                                     : "range(gamma_x) misses gamma_x(y)"});
        for (const auto& [y0, v0] : seen) {
          if (v0 == v) {
            out.note({{x, y0, y}, fam == 0 ? "sigma_x injective"
                                           : "gamma_x injective"});
            break;
          }
        }
        seen.emplace_back(y, v);
      }
    }
  }
}

void check_involutive(const PartialSolution& S, Index lo, Index hi, Index w,
                      ScanResult& out) {
  for (Index x = lo; x < hi; ++x) {
    PartialBijection sx = S.sigma(x);
    for (Index y = 0; y < w; ++y) {
      bool in_s = sx.defined_at(y);
      bool in_g = S.gamma(y).defined_at(x);
      if (in_s != in_g) {
        out.note({{x, y}, "y in dom(sigma_x) iff x in dom(gamma_y)"});
        continue;
      }
      if (!(in_s && in_g)) continue;
      Index xp = *sx.apply(y);
      Index yp = *S.gamma(y).apply(x);
      auto back_x = S.sigma(xp).apply(yp);
      if (!back_x || *back_x != x)
        out.note({{x, y}, "sigma_{sigma_x(y)}(gamma_y(x)) = x"});
      auto back_y = S.gamma(yp).apply(xp);
      if (!back_y || *back_y != y)
        out.note({{x, y}, "gamma_{gamma_y(x)}(sigma_x(y)) = y"});
    }
  }
}

void check_braided(const PartialSolution& S, Index lo, Index hi, Index w,
                   ScanResult& out) {
  for (Index x = lo; x < hi; ++x) {
    PartialBijection sx = S.sigma(x);
    for (Index y = 0; y < w; ++y) {
      PartialBijection sy = S.sigma(y);
      PartialBijection gy = S.gamma(y);
      std::optional<Index> sxy = sx.apply(y);
      std::optional<Index> gyx = gy.apply(x);
      for (Index z = 0; z < w; ++z) {
        PartialBijection gz = S.gamma(z);

        // sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{gamma_y(x)}
        {
          std::optional<Index> lhs = ap(sx, sy.apply(z));
          std::optional<Index> rhs;
          if (sxy && gyx) rhs = ap(S.sigma(*sxy), S.sigma(*gyx).apply(z));
          if (lhs && rhs) {
            if (*lhs != *rhs)
              out.note({{x, y, z},
                        "sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{gamma_y(x)}"});
          } else if (lhs.has_value() != rhs.has_value()) {
            ++out.skipped;
          }
        }

        // gamma_z gamma_y = gamma_{gamma_z(y)} gamma_{sigma_y(z)}
        {
          std::optional<Index> lhs = ap(gz, gy.apply(x));
          std::optional<Index> rhs;
          std::optional<Index> gzy = gz.apply(y);
          std::optional<Index> syz = sy.apply(z);
          if (gzy && syz) rhs = ap(S.gamma(*gzy), S.gamma(*syz).apply(x));
          if (lhs && rhs) {
            if (*lhs != *rhs)
              out.note({{x, y, z},
                        "gamma_z gamma_y = gamma_{gamma_z(y)} gamma_{sigma_y(z)}"});
          } else if (lhs.has_value() != rhs.has_value()) {
            ++out.skipped;
          }
        }

        // gamma_{sigma_{gamma_y(x)}(z)}(sigma_x(y)) =
        //   sigma_{gamma_{sigma_y(z)}(x)}(gamma_z(y))
        {
          std::optional<Index> lhs;
          if (gyx && sxy) {
            if (auto mid = S.sigma(*gyx).apply(z)) lhs = S.gamma(*mid).apply(*sxy);
          }
          std::optional<Index> rhs;
          std::optional<Index> syz = sy.apply(z);
          std::optional<Index> gzy = gz.apply(y);
          if (syz && gzy) {
            if (auto mid = S.gamma(*syz).apply(x)) rhs = S.sigma(*mid).apply(*gzy);
          }
          if (lhs && rhs) {
            if (*lhs != *rhs)
              out.note({{x, y, z},
                        "gamma_{sigma_{gamma_y(x)}(z)}(sigma_x(y)) = "
                        "sigma_{gamma_{sigma_y(z)}(x)}(gamma_z(y))"});
          } else if (lhs.has_value() != rhs.has_value()) {
            ++out.skipped;
          }
        }
      }
    }
  }
}

void check_square_free(const PartialSolution& S, Index lo, Index hi, Index,
                       ScanResult& out) {
  for (Index x = lo; x < hi; ++x) {
    auto img = S.r(x, x);
    if (!img)
      out.note({{x}, "(x,x) in D"});
    else if (img->first != x || img->second != x)
      out.note({{x}, "r(x,x) = (x,x)"});
  }
}

void check_axiom_range(const PartialSolution& S, Axiom axiom, Index lo, Index hi,
                       Index w, ScanResult& out) {
  switch (axiom) {
    case Axiom::NonDegenerate: check_nondegenerate(S, lo, hi, w, out); break;
    case Axiom::Involutive: check_involutive(S, lo, hi, w, out); break;
    case Axiom::Braided: check_braided(S, lo, hi, w, out); break;
    case Axiom::SquareFree: check_square_free(S, lo, hi, w, out); break;
  }
}

ScanResult run_scan(const PartialSolution& S, Axiom axiom, Index w, bool parallel) {
  ScanResult total;
  if (!parallel || w < 4) {
    check_axiom_range(S, axiom, 0, w, w, total);
    return total;
  }
  unsigned threads = std::max(2u, std::thread::hardware_concurrency());
  Index chunk = (w + threads - 1) / threads;
  std::vector<std::future<ScanResult>> parts;
  for (Index lo = 0; lo < w; lo += chunk) {
    Index hi = std::min(w, lo + chunk);
    parts.push_back(std::async(std::launch::async, [&S, axiom, lo, hi, w] {
      ScanResult part;
      check_axiom_range(S, axiom, lo, hi, w, part);
      return part;
    }));
  }
  for (auto& p : parts) total.merge(p.get());
  return total;
}

}  // namespace

PartialSolution PartialSolution::finite(std::vector<PartialBijection> sigma,
                                        std::vector<PartialBijection> gamma) {
  if (sigma.size() != gamma.size())
    fail(Errc::BadArgument, "sigma and gamma families differ in length");
  Carrier c = Carrier::finite(sigma.size());
  for (const auto& m : sigma)
    if (!(m.carrier() == c)) fail(Errc::BadArgument, "sigma map over wrong carrier");
  for (const auto& m : gamma)
    if (!(m.carrier() == c)) fail(Errc::BadArgument, "gamma map over wrong carrier");

  PartialSolution S;
  S.family_ = Family::Explicit;
  S.carrier_ = c;
  S.sigma_ = std::move(sigma);
  S.gamma_ = std::move(gamma);
  for (Axiom a : {Axiom::NonDegenerate, Axiom::Involutive, Axiom::Braided,
                  Axiom::SquareFree}) {
    ScanResult res;
    check_axiom_range(S, a, 0, S.carrier_.size(), S.carrier_.size(), res);
    S.certified_[static_cast<int>(a)] = !res.witness.has_value();
  }
  return S;
}

PartialSolution PartialSolution::thompson() {
  PartialSolution S;
  S.family_ = Family::Thompson;
  S.carrier_ = Carrier::naturals();
  for (int i = 0; i < 4; ++i) S.certified_[i] = true;
  return S;
}

PartialBijection PartialSolution::sigma(Index x) const {
  if (family_ == Family::Explicit) {
    if (x >= sigma_.size()) fail(Errc::BadArgument, "generator index out of range");
    return sigma_[x];
  }
  // fix 0..x, skip x+1, shift the tail down by one
  std::vector<Piece> ps;
  ps.push_back({{0, x}, 0});
  ps.push_back({{x + 2, kInf}, -1});
  return PartialBijection::from_pieces(carrier_, std::move(ps));
}

PartialBijection PartialSolution::gamma(Index y) const {
  if (family_ == Family::Explicit) {
    if (y >= gamma_.size()) fail(Errc::BadArgument, "generator index out of range");
    return gamma_[y];
  }
  // fix 0..y-2 and y, skip y-1, shift the tail up by one
  std::vector<Piece> ps;
  if (y >= 2) ps.push_back({{0, y - 2}, 0});
  ps.push_back({{y, y}, 0});
  ps.push_back({{y + 1, kInf}, 1});
  return PartialBijection::from_pieces(carrier_, std::move(ps));
}

bool PartialSolution::in_domain(Index x, Index y) const {
  if (family_ == Family::Thompson) return y != x + 1;
  return sigma(x).defined_at(y) && gamma(y).defined_at(x);
}

std::optional<std::pair<Index, Index>> PartialSolution::r(Index x, Index y) const {
  auto sv = sigma(x).apply(y);
  if (!sv) return std::nullopt;
  auto gv = gamma(y).apply(x);
  if (!gv) return std::nullopt;
  return std::make_pair(*sv, *gv);
}

bool PartialSolution::operator==(const PartialSolution& o) const {
  if (family_ != o.family_ || !(carrier_ == o.carrier_)) return false;
  return sigma_ == o.sigma_ && gamma_ == o.gamma_;
}

AxiomReport verify(const PartialSolution& S, Axiom axiom, std::optional<Index> window,
                   bool parallel) {
  Index w;
  if (S.carrier().countable()) {
    if (!window)
      fail(Errc::MissingWindow,
           "verify on a countable carrier needs an explicit window");
    w = *window;
  } else {
    w = S.carrier().size();
  }
  ScanResult res = run_scan(S, axiom, w, parallel);
  AxiomReport rep;
  rep.axiom = axiom_name(axiom);
  rep.holds = !res.witness.has_value();
  rep.witness = std::move(res.witness);
  rep.skipped = res.skipped;
  return rep;
}

std::vector<AxiomReport> verify_all(const PartialSolution& S,
                                    std::optional<Index> window, bool parallel) {
  std::vector<AxiomReport> out;
  for (Axiom a : {Axiom::NonDegenerate, Axiom::Involutive, Axiom::Braided,
                  Axiom::SquareFree})
    out.push_back(verify(S, a, window, parallel));
  return out;
}

}  // namespace ybp
