#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparse_ramsey {

/// Malformed external input (graph6 strings, family specs, files).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  /// Byte offset of the offending character, or npos when not applicable.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called on a graph that violates its stated premise
/// (disconnected input, star given to the dichotomy reduction, ...).
class PremiseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction cannot be realised for the requested parameters.
class InfeasibleConstruction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact search hit its configured node or size budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparse_ramsey
