#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reebforge {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or an integer literal with an optional leading '-'.
/// Whitespace, '+', zero denominators and any trailing characters are
/// rejected with ErrorKind::ParseError. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace reebforge
