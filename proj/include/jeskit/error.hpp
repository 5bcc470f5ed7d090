#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jeskit {

enum class ErrorKind {
  InvalidArgument,
  Domain,
  NotOrdered,
  NotCoprime,
  SameParity,
  ProfileUndefined,
  NotInvertible,
  FactorizationLimit,
  NoPythagoreanStructure,
  MiddleIdentityFails,
  NotAPower,
  Precondition,
  Inapplicable,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the toolkit. `kind()` lets callers (notably the
// CLI) map a failure onto an exit code without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace jeskit
