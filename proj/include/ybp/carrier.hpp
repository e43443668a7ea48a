#ifndef YBP_CARRIER_HPP
#define YBP_CARRIER_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace ybp {

using Index = std::uint64_t;

// Index universe a map family lives on: either {0,...,n-1} or all naturals.
class Carrier {
public:
  static Carrier finite(Index n) { return Carrier(n); }
  static Carrier naturals() { return Carrier(); }

  bool countable() const { return !size_.has_value(); }
  Index size() const { return *size_; }  // only for finite carriers
  std::optional<Index> size_opt() const { return size_; }
  bool contains(Index k) const { return countable() || k < *size_; }

  bool operator==(const Carrier&) const = default;

  std::string str() const {
    return countable() ? "naturals" : "finite(" + std::to_string(*size_) + ")";
  }

private:
  Carrier() = default;
  explicit Carrier(Index n) : size_(n) {}

  std::optional<Index> size_;
};

}  // namespace ybp

#endif
