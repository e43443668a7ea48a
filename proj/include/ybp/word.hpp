#ifndef YBP_WORD_HPP
#define YBP_WORD_HPP

#include <string>
#include <vector>

#include "ybp/carrier.hpp"

namespace ybp {

// Signed generator: x_idx, or its inverse when star is set.
struct Letter {
  Index idx;
  bool star = false;

  bool operator==(const Letter&) const = default;
};

inline Letter gen(Index i) { return {i, false}; }
inline Letter inv(Index i) { return {i, true}; }

using MonoidWord = std::vector<Letter>;

// Token format: whitespace-separated indices, a trailing apostrophe
// marks an inverse ("0 2' 1"); the empty string is the unit.
MonoidWord parse_word(const std::string& text, const Carrier& c);
std::string word_str(const MonoidWord& w);
std::string letter_str(const Letter& l);

MonoidWord word_inverse(const MonoidWord& w);
MonoidWord concat(const MonoidWord& a, const MonoidWord& b);

}  // namespace ybp

#endif
