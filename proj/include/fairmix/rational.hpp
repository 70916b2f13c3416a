#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fairmix {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or an integer literal (optional leading sign). Throws
/// InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// num/den in lowest terms. Prefer this over mpq_class's two-argument
/// constructor, which does not reduce.
inline Rational make_rational(long num, long den) {
  Rational value{mpz_class(num), mpz_class(den)};
  value.canonicalize();
  return value;
}

}  // namespace fairmix
