#pragma once

// Ground-truth digit sums: binary weight, Thue-Morse sign, and the
// enumeration oracle for S_{m,l}(x) = sum over 0 <= n < x, n = l (mod m)
// of (-1)^{bit_weight(n)}.

#include <cstdint>
#include <span>
#include <vector>

#include "newman/bigint.hpp"

namespace newman {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

struct ResidueQuery {
  std::uint64_t m = 1;
  std::uint64_t l = 0;
  BigInt x = 0;  // exclusive upper limit

  // Throws InvalidArgument on m = 0, l >= m or negative x.
  void validate() const;
};

inline std::uint64_t bit_weight(std::uint64_t n) noexcept { return static_cast<std::uint64_t>(__builtin_popcountll(n)); }
std::uint64_t bit_weight(const BigInt& n);

inline int sign_of(std::uint64_t n) noexcept { return (bit_weight(n) & 1U) ? -1 : 1; }
int sign_of(const BigInt& n);

// Direct enumeration. Throws BudgetExceeded when x > budget.
BigInt s_naive(const ResidueQuery& q, std::uint64_t budget = kDefaultEnumerationBudget);

// One enumeration sweep answering many limits at once: row i holds
// S_{m,r}(xs[i]) for every r < m. `xs` must be non-decreasing.
std::vector<std::vector<std::int64_t>> s_naive_all_classes(std::uint64_t m, std::span<const std::uint64_t> xs,
                                                           std::uint64_t budget = kDefaultEnumerationBudget);

struct MultiplesCount {
  BigInt count;  // multiples of p in [0, 2^p)
  bool odd = false;
};

// Evaluates 2(2^{p-1}-1)/p + 1 and floor((2^p - 1)/p) + 1 and requires both to agree.
MultiplesCount multiples_count(std::uint64_t p);

}  // namespace newman
