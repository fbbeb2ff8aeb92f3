#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittcurve {

/// Rejected curve parameters (dyadic residue field, negative or oversized rank).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands built for different curves, or a generator that does not fit its curve.
class ConfigMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Witt invariant was requested for a form outside I^2.
class NotInISquared : public std::domain_error {
 public:
  NotInISquared() : std::domain_error("not in I-squared") {}
};

/// An exhaustive routine was asked to run beyond its configured Picard-rank bound.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  /// Byte offset into the source text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wittcurve
