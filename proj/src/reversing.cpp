#include "ybp/reversing.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ybp/error.hpp"

namespace ybp {

std::optional<std::pair<Index, Index>> RelationTable::lookup(Index a, Index b) const {
  auto u = S_->sigma(a).preimage(b);
  if (!u) return std::nullopt;
  if (!S_->in_domain(a, *u)) return std::nullopt;
  auto v = S_->gamma(*u).apply(a);
  if (!v) return std::nullopt;
  return std::make_pair(*u, *v);
}

namespace {

struct FrontierEdge {
  bool neg;
  Letter letter;
};

// Grid position of the corner formed by frontier[i] (negative) and
// frontier[i+1] (positive): row counts negative edges above it, column
// counts positive edges to its left.
std::pair<Index, Index> corner_position(const std::vector<FrontierEdge>& f, std::size_t i) {
  Index row = 0, col = 0;
  for (std::size_t k = i + 1; k < f.size(); ++k)
    if (f[k].neg) ++row;
  for (std::size_t k = 0; k < i; ++k)
    if (!f[k].neg) ++col;
  return {row, col};
}

std::string word_or_dash(const MonoidWord& w) {
  return w.empty() ? std::string("-") : word_str(w);
}

}  // namespace

std::string ReversingDiagram::dump() const {
  std::ostringstream os;
  for (const auto& sq : squares) {
    os << '(' << sq.row << ',' << sq.col << ") v=" << letter_str(sq.vletter)
       << " h=" << letter_str(sq.hletter) << " -> u=" << word_or_dash(sq.closing_u)
       << " v=" << word_or_dash(sq.closing_v) << '\n';
  }
  return os.str();
}

std::string ReversingDiagram::dot() const {
  std::ostringstream os;
  os << "digraph reversing {\n  rankdir=TB;\n  node [shape=point];\n";
  std::set<std::string> emitted;
  auto edge = [&](Index r1, Index c1, Index r2, Index c2, const std::string& label,
                  bool dashed) {
    std::ostringstream line;
    line << "  \"" << r1 << ',' << c1 << "\" -> \"" << r2 << ',' << c2 << "\" [label=\""
         << label << '"';
    if (dashed) line << ", style=dashed";
    line << "];\n";
    if (emitted.insert(line.str()).second) os << line.str();
  };
  for (const auto& sq : squares) {
    edge(sq.row, sq.col, sq.row + 1, sq.col, letter_str(sq.vletter), false);
    edge(sq.row, sq.col, sq.row, sq.col + 1, letter_str(sq.hletter), false);
    if (sq.closing_u.empty() && sq.closing_v.empty()) {
      edge(sq.row + 1, sq.col, sq.row, sq.col + 1, "", true);
    } else {
      edge(sq.row, sq.col + 1, sq.row + 1, sq.col + 1, word_str(sq.closing_u), false);
      edge(sq.row + 1, sq.col, sq.row + 1, sq.col + 1, word_str(sq.closing_v), false);
    }
  }
  os << "}\n";
  return os.str();
}

ReversingOutcome reverse_words(const PartialSolution& S, const MonoidWord& w1,
                               const MonoidWord& w2,
                               std::optional<std::uint64_t> max_steps) {
  if (!S.certified(Axiom::NonDegenerate) || !S.certified(Axiom::Involutive))
    fail(Errc::BadArgument, "reversing needs a non-degenerate involutive solution");
  for (const auto& l : w1)
    if (!S.carrier().contains(l.idx)) fail(Errc::BadWord, "letter outside carrier");
  for (const auto& l : w2)
    if (!S.carrier().contains(l.idx)) fail(Errc::BadWord, "letter outside carrier");

  const std::uint64_t limit = max_steps
      ? *max_steps
      : 10 * static_cast<std::uint64_t>(w1.size() + 1) * static_cast<std::uint64_t>(w2.size() + 1);

  RelationTable table(S);

  std::vector<FrontierEdge> frontier;
  frontier.reserve(w1.size() + w2.size());
  for (auto it = w2.rbegin(); it != w2.rend(); ++it) frontier.push_back({true, *it});
  for (const auto& l : w1) frontier.push_back({false, l});

  ReversingOutcome out;
  out.diagram.w1 = w1;
  out.diagram.w2 = w2;

  auto finish_closed = [&]() {
    for (const auto& e : frontier) {
      if (e.neg)
        out.u.push_back(e.letter);
      else
        out.v.push_back(e.letter);
    }
    std::reverse(out.u.begin(), out.u.end());
    out.kind = ReversingOutcome::Kind::Closed;
    out.diagram.final_u = out.u;
    out.diagram.final_v = out.v;
  };

  std::size_t scan = 0;
  for (;;) {
    // The frontier left of `scan` was already corner-free, so the
    // leftmost corner can only sit at `scan` or beyond.
    std::size_t i = scan;
    while (i + 1 < frontier.size() && !(frontier[i].neg && !frontier[i + 1].neg)) ++i;
    if (i + 1 >= frontier.size()) {
      finish_closed();
      return out;
    }

    auto [row, col] = corner_position(frontier, i);
    const Letter A = frontier[i].letter;      // vertical edge
    const Letter B = frontier[i + 1].letter;  // horizontal edge

    if (out.steps >= limit) {
      out.kind = ReversingOutcome::Kind::StepLimit;
      return out;
    }

    SquareLog sq;
    sq.row = row;
    sq.col = col;
    sq.vletter = A;
    sq.hletter = B;

    if (A.idx == B.idx && A.star == B.star) {
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i),
                     frontier.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else {
      std::optional<Letter> new_u, new_v;  // vertical, horizontal
      if (!A.star && !B.star) {
        if (auto e = table.lookup(B.idx, A.idx)) {
          new_u = gen(e->first);
          new_v = gen(e->second);
        }
      } else if (A.star && !B.star) {
        if (S.in_domain(A.idx, B.idx)) {
          new_u = inv(*S.gamma(B.idx).apply(A.idx));
          new_v = gen(*S.sigma(A.idx).apply(B.idx));
        }
      } else if (!A.star && B.star) {
        if (S.in_domain(B.idx, A.idx)) {
          new_u = gen(*S.sigma(B.idx).apply(A.idx));
          new_v = inv(*S.gamma(A.idx).apply(B.idx));
        }
      } else {
        auto x = S.gamma(B.idx).preimage(A.idx);
        if (x && S.in_domain(*x, B.idx)) {
          new_u = inv(*x);
          new_v = inv(*S.sigma(*x).apply(B.idx));
        }
      }
      if (!new_u) {
        out.kind = ReversingOutcome::Kind::NoRelation;
        out.row = row;
        out.col = col;
        out.letters = std::make_pair(A, B);
        return out;
      }
      frontier[i] = {false, *new_v};
      frontier[i + 1] = {true, *new_u};
      sq.closing_u = {*new_u};
      sq.closing_v = {*new_v};
    }

    out.diagram.squares.push_back(std::move(sq));
    ++out.steps;
    scan = i > 0 ? i - 1 : 0;
  }
}

std::optional<MonoidWord> oplus(const PartialSolution& S, const MonoidWord& g,
                                const MonoidWord& h,
                                std::optional<std::uint64_t> max_steps) {
  if (!S.certified(Axiom::SquareFree))
    fail(Errc::NotSquareFree, "join is only defined over square-free solutions");
  auto out = reverse_words(S, g, h, max_steps);
  if (!out.closed()) return std::nullopt;
  return concat(g, out.u);
}

Tri check_left_distributivity(const PartialSolution& S, const MonoidWord& a,
                              const MonoidWord& g, const MonoidWord& h,
                              std::optional<std::uint64_t> max_steps) {
  auto gh = oplus(S, g, h, max_steps);
  if (!gh) return Tri::Skipped;
  auto agh = oplus(S, concat(a, g), concat(a, h), max_steps);
  if (!agh) return Tri::Skipped;
  return words_equal(S, concat(a, *gh), *agh) ? Tri::True : Tri::False;
}

}  // namespace ybp
