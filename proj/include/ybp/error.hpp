#ifndef YBP_ERROR_HPP
#define YBP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ybp {

enum class Errc {
  SchemaError,
  NonInjectiveSigma,
  NotInjective,
  MissingWindow,
  UnknownExample,
  XNotInRange,
  NotSquareFree,
  MalformedTrace,
  QuotientNotWellDefined,
  TooLarge,
  Overflow,
  BadWord,
  BadArgument,
  Internal,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SchemaError: return "SchemaError";
    case Errc::NonInjectiveSigma: return "NonInjectiveSigma";
    case Errc::NotInjective: return "NotInjective";
    case Errc::MissingWindow: return "MissingWindow";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::XNotInRange: return "XNotInRange";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::MalformedTrace: return "MalformedTrace";
    case Errc::QuotientNotWellDefined: return "QuotientNotWellDefined";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Overflow: return "Overflow";
    case Errc::BadWord: return "BadWord";
    case Errc::BadArgument: return "BadArgument";
    case Errc::Internal: return "Internal";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ybp

#endif
