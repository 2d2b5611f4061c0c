// Floating realization of the character sum, used only as a cross-check of
// the exact engines.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mpfr_complex.hpp"
#include "newman/cyclotomic.hpp"
#include "newman/errors.hpp"
#include "newman/primes.hpp"

namespace newman {

namespace {

using detail::Complex;
using detail::Real;

mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

// (1 - w^t) for t = 0 .. p-1, w = e^{2 pi i / p}.
std::vector<Complex> one_minus_roots(std::uint64_t p, mpfr_prec_t bits) {
  Real angle(bits);
  Real pi2(bits);
  mpfr_const_pi(pi2.get(), MPFR_RNDN);
  mpfr_mul_ui(pi2.get(), pi2.get(), 2, MPFR_RNDN);

  std::vector<Complex> out;
  out.reserve(p);
  for (std::uint64_t t = 0; t < p; ++t) {
    mpfr_mul_ui(angle.get(), pi2.get(), t, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), p, MPFR_RNDN);
    Complex& z = out.emplace_back(bits);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    mpfr_ui_sub(z.re.get(), 1, z.re.get(), MPFR_RNDN);
    mpfr_neg(z.im.get(), z.im.get(), MPFR_RNDN);
  }
  return out;
}

RoundedComplexResult round_result(const Complex& value, unsigned digits) {
  const mpfr_prec_t bits = value.re.bits();
  RoundedComplexResult out;
  out.precision_digits = digits;
  mpfr_get_z(out.nearest.get_mpz_t(), value.re.get(), MPFR_RNDN);

  Real diff(bits);
  mpfr_sub_z(diff.get(), value.re.get(), out.nearest.get_mpz_t(), MPFR_RNDN);
  mpfr_hypot(diff.get(), diff.get(), value.im.get(), MPFR_RNDN);
  out.residual = mpfr_get_d(diff.get(), MPFR_RNDU);
  if (!std::isfinite(out.residual)) out.residual = std::numeric_limits<double>::infinity();
  out.warning = out.residual > kResidualWarning;
  return out;
}

}  // namespace

RoundedComplexResult phi_at_one_check(std::uint64_t p, unsigned digits) {
  require_odd_prime(p, "phi_at_one_check");
  if (digits < 30) throw InvalidArgument("precision must be at least 30 decimal digits");
  const mpfr_prec_t bits = bits_for_digits(digits);
  const auto factors = one_minus_roots(p, bits);

  Complex product(bits, 1);
  Real t1(bits);
  Real t2(bits);
  for (std::uint64_t j = 1; j < p; ++j) product.mul(factors[j], t1, t2);

  RoundedComplexResult out = round_result(product, digits);
  const double tolerance = std::pow(10.0, -static_cast<double>(digits) / 2.0);
  if (out.residual >= tolerance || out.nearest != from_u64(p)) {
    throw PrecisionFailure("product over nontrivial roots for p = " + std::to_string(p) + " rounds to " +
                           to_decimal(out.nearest) + " with residual " + std::to_string(out.residual) +
                           "; raise the precision");
  }
  return out;
}

RoundedComplexResult s_complex(std::uint64_t p, std::size_t k, unsigned digits) {
  require_odd_prime(p, "s_complex");
  if (k == 0) throw InvalidArgument("s_complex needs k >= 1");
  if (digits == 0) digits = default_precision_digits(k);
  const mpfr_prec_t bits = bits_for_digits(digits);
  const auto factors = one_minus_roots(p, bits);

  std::vector<std::uint64_t> exponents(k);
  std::uint64_t e = 1;
  for (std::size_t j = 0; j < k; ++j) {
    exponents[j] = e;
    e = mul_mod(e, 2, p);
  }

  Complex total(bits);
  Complex term(bits);
  Real t1(bits);
  Real t2(bits);
  for (std::uint64_t l = 1; l < p; ++l) {
    mpfr_set_ui(term.re.get(), 1, MPFR_RNDN);
    mpfr_set_zero(term.im.get(), 1);
    for (const std::uint64_t exponent : exponents) term.mul(factors[mul_mod(l, exponent, p)], t1, t2);
    total.add(term);
  }
  mpfr_div_ui(total.re.get(), total.re.get(), p, MPFR_RNDN);
  mpfr_div_ui(total.im.get(), total.im.get(), p, MPFR_RNDN);

  RoundedComplexResult out = round_result(total, digits);
  if (!(out.residual < 0.5)) {
    throw PrecisionFailure("complex evaluation of S_" + std::to_string(p) + "(2^" + std::to_string(k) +
                           ") has residual " + std::to_string(out.residual) + " at " + std::to_string(digits) +
                           " digits; raise the precision");
  }
  return out;
}

}  // namespace newman
