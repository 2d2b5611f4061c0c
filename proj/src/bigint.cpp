#include "newman/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "newman/errors.hpp"

namespace newman {

namespace {

BigInt parse_decimal(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidArgument("not a natural number: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

BigInt parse_natural(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_decimal(text, text);
  const BigInt base = parse_decimal(text.substr(0, caret), text);
  const std::string_view rest = text.substr(caret + 1);
  const auto star = rest.find('*');
  const BigInt exponent = parse_decimal(rest.substr(0, star), text);
  if (bit_length(exponent) > 24) throw InvalidArgument("exponent too large: '" + std::string(text) + "'");
  BigInt value;
  mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), to_u64(exponent));
  if (star != std::string_view::npos) value *= parse_decimal(rest.substr(star + 1), text);
  return value;
}

}  // namespace newman
