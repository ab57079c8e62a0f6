#ifndef GROSSONE_ERROR_HPP
#define GROSSONE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grossone {

enum class ErrorKind {
  kDivisionByZero,
  kInexactDivision,
  kInexactRoot,
  kUnsupportedShape,
  kNotInteger,
  kUnsupported,
  kUnsupportedForm,
  kUnsupportedLevel,
  kUnsupportedPow,
  kDegreeTooHigh,
  kRatioOne,
  kInvalidArgument,
  kSyntaxError,
  kUnboundVariable,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (tests, the
// calculator) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parser failure; position is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::kSyntaxError, "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace grossone

#endif  // GROSSONE_ERROR_HPP
