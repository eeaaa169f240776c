#include "confembed/rational.hpp"

#include <cctype>
#include <limits>

#include "confembed/error.hpp"

namespace confembed {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Construction: return "construction error";
    case ErrorKind::Usage: return "usage error";
    case ErrorKind::Resource: return "resource error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Unsupported: return "unsupported configuration";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::UnknownSpec: return "unknown spec";
  }
  return "error";
}

std::string to_string(const Rational& q) {
  const BigInt num = numerator_of(q);
  const BigInt den = denominator_of(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) fail(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  const BigInt den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) fail(ErrorKind::Usage, "expected an integer, got " + to_string(q));
  const BigInt n = numerator_of(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorKind::Usage, "integer out of range: " + n.str());
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace confembed
