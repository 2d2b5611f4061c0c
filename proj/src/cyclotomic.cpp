#include "newman/cyclotomic.hpp"

#include <cmath>
#include <string>

#include "newman/errors.hpp"
#include "newman/primes.hpp"

namespace newman {

CycloPoly::CycloPoly(std::uint64_t p) : coeffs_(p, 0) {
  if (p == 0) throw InvalidArgument("ring modulus must be at least 1");
  coeffs_[0] = 1;
}

CycloPoly::CycloPoly(std::uint64_t p, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (p == 0 || coeffs_.size() != p) {
    throw InvalidArgument("coefficient vector length " + std::to_string(coeffs_.size()) + " does not match modulus " +
                          std::to_string(p));
  }
}

BigInt CycloPoly::sum() const {
  BigInt total = 0;
  for (const BigInt& c : coeffs_) total += c;
  return total;
}

BigInt CycloPoly::l1_norm() const {
  BigInt total = 0;
  for (const BigInt& c : coeffs_) total += abs(c);
  return total;
}

CycloPoly mul_one_minus_xpow(const CycloPoly& poly, std::uint64_t e) {
  const std::uint64_t p = poly.modulus();
  if (e >= p) throw InvalidArgument("exponent " + std::to_string(e) + " is not reduced modulo " + std::to_string(p));
  const auto in = poly.coeffs();
  std::vector<BigInt> out(p);
  for (std::uint64_t t = 0; t < p; ++t) {
    const std::uint64_t from = t >= e ? t - e : t + p - e;
    mpz_sub(out[t].get_mpz_t(), in[t].get_mpz_t(), in[from].get_mpz_t());
  }
  return CycloPoly(p, std::move(out));
}

std::vector<std::uint64_t> orbit_exponents(std::uint64_t p) {
  require_odd_prime(p, "orbit_exponents");
  std::vector<std::uint64_t> out;
  out.reserve(p);
  std::uint64_t e = 1;
  for (std::uint64_t j = 0; j < p; ++j) {
    out.push_back(e);
    e = mul_mod(e, 2, p);
  }
  return out;
}

CycloPoly newman_product(std::uint64_t p, std::size_t k) {
  require_odd_prime(p, "newman_product");
  CycloPoly poly(p);
  std::uint64_t e = 1;
  for (std::size_t j = 0; j < k; ++j) {
    poly = mul_one_minus_xpow(poly, e);
    e = mul_mod(e, 2, p);
  }
  // The trivial character's term P(1) must vanish for the coefficient
  // extraction to agree with a sum over l = 1 .. p-1 only.
  if (k >= 1 && sgn(poly.sum()) != 0) {
    throw ArithmeticMismatch("product does not vanish at x = 1 for p = " + std::to_string(p));
  }
  return poly;
}

std::vector<BigInt> s_cyclotomic_vector(std::uint64_t p, std::size_t k) {
  if (k == 0) throw InvalidArgument("s_cyclotomic_vector needs k >= 1");
  const CycloPoly poly = newman_product(p, k);
  return {poly.coeffs().begin(), poly.coeffs().end()};
}

BigInt s_cyclotomic(std::uint64_t p, std::size_t k) {
  if (k == 0) throw InvalidArgument("s_cyclotomic needs k >= 1");
  return newman_product(p, k)[0];
}

unsigned default_precision_digits(std::size_t k) {
  const auto needed = static_cast<unsigned>(std::ceil(static_cast<double>(k) * std::log10(2.0))) + 20U;
  return needed > 40U ? needed : 40U;
}

}  // namespace newman
