#include "fairmix/rational.hpp"

#include <cctype>

#include "fairmix/error.hpp"

namespace fairmix {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return std::string(text);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class numerator(strip_plus(num), 10);
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den)) {
      throw InputError("not a rational literal: '" + std::string(text) + "'");
    }
    denominator = mpz_class(strip_plus(den), 10);
    if (denominator == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace fairmix
