#include "ybp/word.hpp"

#include <sstream>

#include "ybp/error.hpp"

namespace ybp {

MonoidWord parse_word(const std::string& text, const Carrier& c) {
  MonoidWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool star = false;
    if (tok.size() > 1 && tok.back() == '\'') {
      star = true;
      tok.pop_back();
    }
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::BadWord, "bad token '" + tok + "'");
    Index idx;
    try {
      idx = std::stoull(tok);
    } catch (const std::exception&) {
      fail(Errc::BadWord, "bad token '" + tok + "'");
    }
    if (!c.contains(idx))
      fail(Errc::BadWord, "generator " + std::to_string(idx) + " outside carrier");
    w.push_back({idx, star});
  }
  return w;
}

std::string letter_str(const Letter& l) {
  return std::to_string(l.idx) + (l.star ? "'" : "");
}

std::string word_str(const MonoidWord& w) {
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += " ";
    s += letter_str(l);
  }
  return s;
}

MonoidWord word_inverse(const MonoidWord& w) {
  MonoidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->idx, !it->star});
  return out;
}

MonoidWord concat(const MonoidWord& a, const MonoidWord& b) {
  MonoidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace ybp
