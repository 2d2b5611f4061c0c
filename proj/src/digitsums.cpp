#include "newman/digitsums.hpp"

#include <algorithm>
#include <string>

#include "newman/errors.hpp"
#include "newman/primes.hpp"

namespace newman {

void ResidueQuery::validate() const {
  if (m == 0) throw InvalidArgument("modulus must be at least 1");
  if (l >= m) throw InvalidArgument("residue class " + std::to_string(l) + " is not below modulus " + std::to_string(m));
  if (sgn(x) < 0) throw InvalidArgument("upper limit must be non-negative");
}

std::uint64_t bit_weight(const BigInt& n) {
  if (sgn(n) < 0) throw InvalidArgument("bit_weight of a negative number");
  // mpz_popcount walks the limbs directly.
  return mpz_popcount(n.get_mpz_t());
}

int sign_of(const BigInt& n) { return (bit_weight(n) & 1U) ? -1 : 1; }

BigInt s_naive(const ResidueQuery& q, std::uint64_t budget) {
  q.validate();
  if (q.x > from_u64(budget)) {
    throw BudgetExceeded("x = " + to_decimal(q.x) + " exceeds the enumeration budget " + std::to_string(budget) +
                         "; use the digit-DP engine");
  }
  const std::uint64_t x = to_u64(q.x);
  std::int64_t sum = 0;
  for (std::uint64_t n = q.l; n < x; n += q.m) sum += sign_of(n);
  return from_i64(sum);
}

std::vector<std::vector<std::int64_t>> s_naive_all_classes(std::uint64_t m, std::span<const std::uint64_t> xs,
                                                           std::uint64_t budget) {
  if (m == 0) throw InvalidArgument("modulus must be at least 1");
  if (!std::is_sorted(xs.begin(), xs.end())) throw InvalidArgument("limits must be non-decreasing");
  if (!xs.empty() && xs.back() > budget) {
    throw BudgetExceeded("x = " + std::to_string(xs.back()) + " exceeds the enumeration budget " +
                         std::to_string(budget));
  }
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(xs.size());
  std::vector<std::int64_t> sums(m, 0);
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  for (const std::uint64_t x : xs) {
    for (; n < x; ++n) {
      sums[r] += sign_of(n);
      if (++r == m) r = 0;
    }
    out.push_back(sums);
  }
  return out;
}

MultiplesCount multiples_count(std::uint64_t p) {
  require_odd_prime(p, "multiples_count");
  const BigInt numerator = 2 * (pow2(p - 1) - 1);
  const BigInt modulus = from_u64(p);
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(), modulus.get_mpz_t());
  if (sgn(remainder) != 0) {
    throw ArithmeticMismatch("p = " + std::to_string(p) + " does not divide 2(2^{p-1} - 1)");
  }
  const BigInt closed_form = quotient + 1;

  BigInt floor_form;
  mpz_fdiv_q(floor_form.get_mpz_t(), BigInt(pow2(p) - 1).get_mpz_t(), modulus.get_mpz_t());
  floor_form += 1;

  if (closed_form != floor_form) {
    throw ArithmeticMismatch("multiples count mismatch at p = " + std::to_string(p) + ": " +
                             to_decimal(closed_form) + " vs " + to_decimal(floor_form));
  }
  return {closed_form, mpz_odd_p(closed_form.get_mpz_t()) != 0};
}

}  // namespace newman
