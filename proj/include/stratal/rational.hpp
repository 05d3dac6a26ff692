#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stratal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign, no whitespace inside). The result is
/// canonicalized. Throws ConfigError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// floor(x) as a machine integer. Throws DomainError if it does not fit.
long floor_to_long(const Rational& value);

}  // namespace stratal
