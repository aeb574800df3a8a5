#include "reebforge/rational.hpp"

#include <cctype>

#include "reebforge/error.hpp"

namespace reebforge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Rational value;
  value.get_num().set_str(std::string(num), 10);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
    return value;
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-') {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  value.get_den().set_str(std::string(den), 10);
  if (value.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

}  // namespace reebforge
