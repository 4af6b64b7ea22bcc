#pragma once

#include <stdexcept>
#include <string>

namespace nimrep {

/// Caller supplied arguments that violate an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text or JSON input that could not be parsed. `position` is a byte offset
/// into the offending input, or npos when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A pair of matrices does not satisfy the defining relations of D_n.
class NotAModuleError : public std::runtime_error {
 public:
  NotAModuleError(const std::string& relation)
      : std::runtime_error("not a D_n-module: relation " + relation + " fails"),
        relation_(relation) {}
  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string relation_;
};

/// Two independent computations disagreed, or an asserted mathematical
/// invariant was violated. Always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nimrep
