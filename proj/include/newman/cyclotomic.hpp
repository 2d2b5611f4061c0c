#pragma once

// Character-sum engine. The product P(x) = prod_{j<k} (1 - x^{2^j mod p}) is
// kept in Z[x]/(x^p - 1); averaging P(w^l) over all p-th roots of unity w^l
// extracts coefficients, so coefficient t of P is exactly S_{p,t}(2^k).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "newman/bigint.hpp"

namespace newman {

// Dense element of Z[x]/(x^p - 1); p is the ring modulus (the length).
class CycloPoly {
 public:
  // The constant polynomial 1.
  explicit CycloPoly(std::uint64_t p);
  CycloPoly(std::uint64_t p, std::vector<BigInt> coeffs);

  std::uint64_t modulus() const noexcept { return coeffs_.size(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::uint64_t t) const { return coeffs_.at(t); }

  // Value at x = 1.
  BigInt sum() const;
  BigInt l1_norm() const;

  friend bool operator==(const CycloPoly&, const CycloPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// poly * (1 - x^e): result[t] = poly[t] - poly[(t - e) mod p].
CycloPoly mul_one_minus_xpow(const CycloPoly& poly, std::uint64_t e);

// 2^j mod p for j = 0 .. p-1.
std::vector<std::uint64_t> orbit_exponents(std::uint64_t p);

// prod_{j<k} (1 - x^{2^j mod p}); vanishing at x = 1 is checked for k >= 1.
CycloPoly newman_product(std::uint64_t p, std::size_t k);

// coeffs[t] = S_{p,t}(2^k). Requires p odd prime and k >= 1.
std::vector<BigInt> s_cyclotomic_vector(std::uint64_t p, std::size_t k);

// Constant coefficient: S_p(2^k).
BigInt s_cyclotomic(std::uint64_t p, std::size_t k);

struct RoundedComplexResult {
  BigInt nearest;
  double residual = 0.0;     // |value - nearest|, complex modulus
  bool warning = false;      // residual above kResidualWarning
  unsigned precision_digits = 0;
};

inline constexpr double kResidualWarning = 1e-6;

// max(40, ceil(k log10 2) + 20) decimal digits: enough to resolve any value
// bounded by 2^k in modulus to well below 1/2.
unsigned default_precision_digits(std::size_t k);

// prod_{j=1}^{p-1} (1 - e^{2 pi i j / p}), which must round to p. Residuals at or
// above 10^{-digits/2} raise PrecisionFailure. Requires digits >= 30.
RoundedComplexResult phi_at_one_check(std::uint64_t p, unsigned digits);

// (1/p) sum_{l=1}^{p-1} prod_{j<k} (1 - w^{l 2^j}) in multiprecision complex
// arithmetic. digits = 0 selects default_precision_digits(k). Residual >= 0.5
// raises PrecisionFailure.
RoundedComplexResult s_complex(std::uint64_t p, std::size_t k, unsigned digits = 0);

}  // namespace newman
