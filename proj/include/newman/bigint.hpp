#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace newman {

using BigInt = mpz_class;

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt from_i64(std::int64_t v) {
  BigInt r = from_u64(v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v));
  if (v < 0) r = -r;
  return r;
}

inline BigInt pow2(std::size_t k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline BigInt pow_big(std::uint64_t base, std::uint64_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), from_u64(base).get_mpz_t(), e);
  return r;
}

// Number of binary digits; zero has none.
inline std::size_t bit_length(const BigInt& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline bool test_bit(const BigInt& x, std::size_t b) { return mpz_tstbit(x.get_mpz_t(), b) != 0; }

inline bool fits_u64(const BigInt& x) { return sgn(x) >= 0 && bit_length(x) <= 64; }

inline std::uint64_t to_u64(const BigInt& x) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, x.get_mpz_t());
  return v;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

// Accepts decimal digits, "B^K" or "B^K*D" (e.g. 2^61, 10^6, 2^5*3).
BigInt parse_natural(std::string_view text);

}  // namespace newman
