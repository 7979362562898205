#ifndef CUTTREES_ERRORS_HPP
#define CUTTREES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cuttrees {

// Bad user-facing input: malformed files, foreign ids, invalid parameters.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified mathematical postcondition failed. Callers should not try to
// recover; the CLI maps this to its own exit code.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace cuttrees

#endif
