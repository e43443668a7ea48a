#ifndef YBP_MONOID_HPP
#define YBP_MONOID_HPP

#include "ybp/embedded.hpp"
#include "ybp/solution.hpp"
#include "ybp/word.hpp"

namespace ybp {

// Composite of the letter maps, first letter outermost: for w =
// l1 l2 ... lk this is map(l1) . map(l2) ... map(lk) with the
// rightmost applied first; a starred letter contributes the inverse
// map.  The empty word gives the identity on the whole carrier.
PartialBijection sigma_of_word(const PartialSolution& S, const MonoidWord& w);

// Counting function of a generator: 1 at x, 0 elsewhere on
// range(sigma_x).  Errc::XNotInRange when x is missing from that range
// (cannot happen for square-free solutions).
PartialIntFun delta(const PartialSolution& S, Index x);

// One accumulation step of the cocycle: the letter, the contribution
// it added (already translated along the prefix), and the prefix map
// before the letter.
struct PiTraceStep {
  Letter letter;
  PartialIntFun increment;
  PartialBijection prefix_sigma;
};

struct PiTrace {
  std::vector<PiTraceStep> steps;
};

// Cocycle over the word: starts at the zero function on the whole
// carrier and adds per-letter contributions delta_x for x and
// -(delta_x after sigma_x) for x', each translated along the map of
// the prefix read so far.
PartialIntFun pi(const PartialSolution& S, const MonoidWord& w);
PiTrace pi_trace(const PartialSolution& S, const MonoidWord& w);

// psi(w) = (pi(w), sigma_of_word(w)); lands in the restricted-product
// monoid, i.e. dom(pi(w)) = range(sigma_of_word(w)).
EmbeddedElement psi(const PartialSolution& S, const MonoidWord& w);

// Decides equality of the images in the structure inverse monoid by
// comparing psi components.  Sound and complete only when S is
// square-free (plus non-degenerate, involutive, braided); refuses
// otherwise with Errc::NotSquareFree.
bool words_equal(const PartialSolution& S, const MonoidWord& w1, const MonoidWord& w2);

// Rebuilds a word from trace data, validating each step against the
// solution; Errc::MalformedTrace when the steps are inconsistent.
MonoidWord reconstruct(const PartialSolution& S, const PiTrace& t);

bool is_idempotent(const PartialSolution& S, const MonoidWord& w);

}  // namespace ybp

#endif
