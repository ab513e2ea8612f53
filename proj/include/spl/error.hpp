#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spl {

enum class Errc {
  NoSink,
  MultipleSinks,
  Unreachable,
  UnknownVertex,
  DuplicateVertex,
  DuplicateEdge,
  SyntaxError,
  NotHereditary,
  NotSaturated,
  CapExceeded,
  NotFireable,
  BudgetExceeded,
  GraphMismatch,
  NotAGroup,
  WeightMismatch,
  SearchCapExceeded,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the Errc codes so the
/// CLI can map it onto an exit status and callers can branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace spl
