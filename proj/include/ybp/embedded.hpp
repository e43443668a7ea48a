#ifndef YBP_EMBEDDED_HPP
#define YBP_EMBEDDED_HPP

#include <string>

#include "ybp/partial_bijection.hpp"
#include "ybp/partial_int_fun.hpp"

namespace ybp {

// Pair (f, tau) subject to the membership law dom(f) = range(tau);
// these pairs form an inverse monoid under restricted_mul /
// restricted_inv below.
struct EmbeddedElement {
  PartialIntFun fun;
  PartialBijection bij;

  EmbeddedElement(PartialIntFun f, PartialBijection b);

  static EmbeddedElement unit(const Carrier& c);

  bool is_idempotent() const {
    return fun.zero_on_domain() && bij.is_partial_identity();
  }

  bool operator==(const EmbeddedElement&) const = default;

  std::string str() const;
};

// (f, tau) * (g, nu) = (f + tau.g, tau nu)
EmbeddedElement restricted_mul(const EmbeddedElement& a, const EmbeddedElement& b);

// (f, tau)^-1 = (-(f after tau), tau^-1)
EmbeddedElement restricted_inv(const EmbeddedElement& a);

}  // namespace ybp

#endif
