#include "ybp/monoid.hpp"

#include "ybp/error.hpp"

namespace ybp {

namespace {

PartialBijection letter_map(const PartialSolution& S, const Letter& l) {
  PartialBijection m = S.sigma(l.idx);
  return l.star ? m.inverse() : m;
}

PartialIntFun letter_fun(const PartialSolution& S, const Letter& l) {
  PartialIntFun d = delta(S, l.idx);
  if (!l.star) return d;
  return compose_fun(d, S.sigma(l.idx)).negated();
}

void require_word_problem_preconditions(const PartialSolution& S) {
  for (Axiom a : {Axiom::SquareFree, Axiom::NonDegenerate, Axiom::Involutive,
                  Axiom::Braided}) {
    if (!S.certified(a))
      fail(Errc::NotSquareFree,
           std::string("word comparison needs a square-free solution; axiom ") +
               axiom_name(a) + " does not hold here");
  }
}

}  // namespace

PartialBijection sigma_of_word(const PartialSolution& S, const MonoidWord& w) {
  PartialBijection acc = PartialBijection::identity(S.carrier());
  for (const Letter& l : w) acc = compose(acc, letter_map(S, l));
  return acc;
}

PartialIntFun delta(const PartialSolution& S, Index x) {
  IndexSet dom = S.sigma(x).range();
  if (!dom.contains(x))
    fail(Errc::XNotInRange,
         "generator " + std::to_string(x) + " is not in range(sigma_" +
             std::to_string(x) + ")");
  return PartialIntFun::make(S.carrier(), dom, {{x, 1}});
}

PiTrace pi_trace(const PartialSolution& S, const MonoidWord& w) {
  PiTrace t;
  t.steps.reserve(w.size());
  PartialBijection sig = PartialBijection::identity(S.carrier());
  for (const Letter& l : w) {
    PartialIntFun inc = act(sig, letter_fun(S, l));
    t.steps.push_back({l, inc, sig});
    sig = compose(sig, letter_map(S, l));
  }
  return t;
}

PartialIntFun pi(const PartialSolution& S, const MonoidWord& w) {
  PartialIntFun f = PartialIntFun::zero_all(S.carrier());
  PartialBijection sig = PartialBijection::identity(S.carrier());
  for (const Letter& l : w) {
    f = add(f, act(sig, letter_fun(S, l)));
    sig = compose(sig, letter_map(S, l));
  }
  return f;
}

EmbeddedElement psi(const PartialSolution& S, const MonoidWord& w) {
  return EmbeddedElement(pi(S, w), sigma_of_word(S, w));
}

bool words_equal(const PartialSolution& S, const MonoidWord& w1,
                 const MonoidWord& w2) {
  require_word_problem_preconditions(S);
  return psi(S, w1) == psi(S, w2);
}

MonoidWord reconstruct(const PartialSolution& S, const PiTrace& t) {
  MonoidWord w;
  w.reserve(t.steps.size());
  PartialBijection sig = PartialBijection::identity(S.carrier());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const PiTraceStep& step = t.steps[i];
    if (!(step.prefix_sigma == sig))
      fail(Errc::MalformedTrace,
           "step " + std::to_string(i) + ": prefix map does not match the "
           "letters before it");
    PartialIntFun expected = act(sig, letter_fun(S, step.letter));
    if (!(expected == step.increment))
      fail(Errc::MalformedTrace,
           "step " + std::to_string(i) + ": increment does not match letter " +
               letter_str(step.letter));
    // When the contribution kept its support point, it pins the letter
    // on its own; cross-check the stored one against it.
    const auto& supp = step.increment.support();
    if (!supp.empty()) {
      auto [point, value] = supp.front();
      auto pre = sig.preimage(point);
      if (supp.size() != 1 || (value != 1 && value != -1) || !pre ||
          *pre != step.letter.idx || (value == -1) != step.letter.star)
        fail(Errc::MalformedTrace,
             "step " + std::to_string(i) + ": contribution support points at a "
             "different letter");
    }
    w.push_back(step.letter);
    sig = compose(sig, letter_map(S, step.letter));
  }
  return w;
}

bool is_idempotent(const PartialSolution& S, const MonoidWord& w) {
  return psi(S, w).is_idempotent();
}

}  // namespace ybp
