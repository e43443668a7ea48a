#include "ybp/embedded.hpp"

#include "ybp/error.hpp"

namespace ybp {

EmbeddedElement::EmbeddedElement(PartialIntFun f, PartialBijection b)
    : fun(std::move(f)), bij(std::move(b)) {
  if (!(fun.carrier() == bij.carrier()))
    fail(Errc::BadArgument, "pair components over different carriers");
  if (!(fun.domain() == bij.range()))
    fail(Errc::BadArgument,
         "membership law violated: dom(fun) = " + fun.domain().str() +
             " but range(bij) = " + bij.range().str());
}

EmbeddedElement EmbeddedElement::unit(const Carrier& c) {
  return EmbeddedElement(PartialIntFun::zero_all(c), PartialBijection::identity(c));
}

std::string EmbeddedElement::str() const {
  return "(fun: " + fun.str() + "; bij: " + bij.str() + ")";
}

EmbeddedElement restricted_mul(const EmbeddedElement& a, const EmbeddedElement& b) {
  return EmbeddedElement(add(a.fun, act(a.bij, b.fun)), compose(a.bij, b.bij));
}

EmbeddedElement restricted_inv(const EmbeddedElement& a) {
  return EmbeddedElement(compose_fun(a.fun, a.bij).negated(), a.bij.inverse());
}

}  // namespace ybp
