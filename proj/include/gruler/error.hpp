#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gruler {

enum class ErrorCode {
  MalformedInput,
  UnknownVertex,
  DuplicateVertex,
  NotNoExit,
  NotOnCycle,
  NotASink,
  WrongKind,
  ComponentTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gruler
