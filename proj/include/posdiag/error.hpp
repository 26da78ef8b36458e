#pragma once

#include <stdexcept>
#include <string>

namespace posdiag {

/// How a failure should be reported by callers such as the CLI.
enum class ErrorKind {
  Parse,         // malformed input document
  Precondition,  // well-formed input outside an operation's domain
  Internal       // a self-check failed; indicates a bug
};

/// Every library failure carries a stable, machine-readable code
/// (e.g. "InvalidInvariant", "Incompatible") next to the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, ErrorKind kind, const std::string& message);

  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string code_;
  ErrorKind kind_;
};

[[noreturn]] void throw_precondition(const std::string& code,
                                     const std::string& message);
[[noreturn]] void throw_parse(const std::string& message);
[[noreturn]] void throw_internal(const std::string& code,
                                 const std::string& message);

}  // namespace posdiag
