#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phantomkit {

enum class ErrorKind {
  InvalidField,
  ShapeMismatch,
  SideMismatch,
  NonAssociative,
  BadUnit,
  UnknownKey,
  BadParams,
  InvalidModule,
  NotIntertwining,
  NotReflexive,
  NoCertificate,
  NoMonoIntoProjective,
  NotGP,
  DegreeTooLow,
  HullVerificationFailed,
  ConfigError,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal invariant check; a failure means a bug, never bad input.
#define PHANTOMKIT_ENSURE(cond, msg)                                               \
  do {                                                                             \
    if (!(cond)) throw ::phantomkit::Error(::phantomkit::ErrorKind::Internal, msg); \
  } while (0)

}  // namespace phantomkit
