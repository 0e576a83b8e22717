#include "derham/rational.hpp"

#include <cctype>

namespace derham {

namespace {

bool parse_integer(std::string_view text, Integer* out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value *= 10;
    value += text[i] - '0';
  }
  *out = negative ? -value : value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  const auto slash = text.find('/');
  Integer num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, &num)) return std::nullopt;
    return Rational(num);
  }
  Integer den;
  if (!parse_integer(text.substr(0, slash), &num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), &den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<RationalVector> parse_rational_csv(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto piece = text.substr(start, comma - start);
    const auto value = parse_rational(piece);
    if (!value) return std::nullopt;
    out.push_back(*value);
    start = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

Integer magnitude_key(const Rational& value) {
  Integer num = numerator(value);
  if (num < 0) num = -num;
  return num * denominator(value);
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace derham
