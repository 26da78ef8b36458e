#include "posdiag/error.hpp"

#include <utility>

namespace posdiag {

Error::Error(std::string code, ErrorKind kind, const std::string& message)
    : std::runtime_error(message), code_(std::move(code)), kind_(kind) {}

void throw_precondition(const std::string& code, const std::string& message) {
  throw Error(code, ErrorKind::Precondition, message);
}

void throw_parse(const std::string& message) {
  throw Error("ParseError", ErrorKind::Parse, message);
}

void throw_internal(const std::string& code, const std::string& message) {
  throw Error(code, ErrorKind::Internal, message);
}

}  // namespace posdiag
