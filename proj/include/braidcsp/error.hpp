#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcsp {

/// Malformed or out-of-range input (bad letters, bad indices, schema errors).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A group-theoretic identity that must hold did not (e.g. keys differ).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frame or peer protocol violation on a session byte stream.
class WireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::size_t steps)
      : std::runtime_error(what), steps_(steps) {}
  std::size_t steps() const noexcept { return steps_; }

 private:
  std::size_t steps_;
};

}  // namespace braidcsp
