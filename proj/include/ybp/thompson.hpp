#ifndef YBP_THOMPSON_HPP
#define YBP_THOMPSON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ybp/carrier.hpp"

namespace ybp {

// One syllable of a word in F: generator index and a nonzero exponent.
struct FEntry {
  Index idx;
  std::int64_t exp;

  bool operator==(const FEntry&) const = default;
};

// Adjacent syllables with the same index are merged on construction
// through parse_f_word / canonical_f_word.
using FWord = std::vector<FEntry>;

// Text form: whitespace-separated "n" or "n^e" tokens, e.g. "0 1 0^-1".
FWord parse_f_word(const std::string& text);
std::string f_word_str(const FWord& w);
FWord canonical_f_word(FWord w);

// x_0^{a_0}..x_n^{a_n} x_n^{-b_n}..x_0^{-b_0} with the usual
// uniqueness conditions: the top slot is one-sided, and a common
// a_i/b_i pair forces a_{i+1} or b_{i+1} to be nonzero.
struct FNormalForm {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;  // same length as a

  bool operator==(const FNormalForm&) const = default;
  bool is_identity() const { return a.empty(); }

  FWord to_word() const;
  std::string str() const { return f_word_str(to_word()); }
};

FNormalForm f_normal_form(const FWord& w);
bool f_words_equal(const FWord& w1, const FWord& w2);

// Finite-window evidence for the group-level claims about the
// countable solution: which relations r induces on indices < window,
// whether the sigma maps stay pairwise distinct, and whether {x_0} and
// {x_1, x_2, ...} are closed under r there.
struct WindowReport {
  Index window = 0;
  std::uint64_t relation_count = 0;  // distinct x_n x_k = x_k x_{n+1} found
  bool relations_match = false;      // found set == {(n,k) : k < n < window}
  bool presentation_match = false;   // every defined r value fits the relation
  bool irretractable = false;
  bool invariant_x0 = false;
  bool invariant_tail = false;

  bool all_hold() const {
    return relations_match && presentation_match && irretractable &&
           invariant_x0 && invariant_tail;
  }
};

// window must be at least 3.
WindowReport window_checks(Index window);

}  // namespace ybp

#endif
