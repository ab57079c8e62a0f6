#include "grossone/error.hpp"

namespace grossone {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kInexactDivision: return "InexactDivision";
    case ErrorKind::kInexactRoot: return "InexactRoot";
    case ErrorKind::kUnsupportedShape: return "UnsupportedShape";
    case ErrorKind::kNotInteger: return "NotInteger";
    case ErrorKind::kUnsupported: return "Unsupported";
    case ErrorKind::kUnsupportedForm: return "UnsupportedForm";
    case ErrorKind::kUnsupportedLevel: return "UnsupportedLevel";
    case ErrorKind::kUnsupportedPow: return "UnsupportedPow";
    case ErrorKind::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::kRatioOne: return "RatioOne";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnboundVariable: return "UnboundVariable";
  }
  return "Error";
}

}  // namespace grossone
