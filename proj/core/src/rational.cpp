#include "turanl2/rational.hpp"

#include <cctype>

#include "turanl2/errors.hpp"

namespace turanl2 {

const char* errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::CrossPartClasses: return "CrossPartClasses";
    case ErrorCode::SameClass: return "SameClass";
    case ErrorCode::NotLocallySymmetrized: return "NotLocallySymmetrized";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::EdgeNotInternal: return "EdgeNotInternal";
    case ErrorCode::EdgeNotCrossing: return "EdgeNotCrossing";
    case ErrorCode::EdgeNotInShadow: return "EdgeNotInShadow";
    case ErrorCode::EdgePhaseMismatch: return "EdgePhaseMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

BigInt parseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw TuranError(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  std::size_t start = (digits.front() == '-' || digits.front() == '+') ? 1 : 0;
  if (start == digits.size()) throw TuranError(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw TuranError(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  }
  return BigInt(std::string(digits[0] == '+' ? digits.substr(1) : digits));
}

}  // namespace

Rational parseRational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text, text));
  BigInt num = parseInteger(text.substr(0, slash), text);
  BigInt den = parseInteger(text.substr(slash + 1), text);
  if (den == 0) throw TuranError(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string toString(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

std::string toString(const BigInt& value) { return value.str(); }

}  // namespace turanl2
