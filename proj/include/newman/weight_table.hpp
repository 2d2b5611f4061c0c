#pragma once

// Digit-DP engine. Level k of a table holds T_k[r] = S_{m,r}(2^k) for every
// residue r, built by T_{k+1}[r] = T_k[r] - T_k[(r - 2^k) mod m]. Any limit x
// is then answered by walking its set bits from the top.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "newman/bigint.hpp"

namespace newman {

// Immutable once built; safe to share across threads.
class WeightTable {
 public:
  WeightTable(std::uint64_t m, std::size_t max_level);

  std::uint64_t modulus() const noexcept { return m_; }
  std::size_t max_level() const noexcept { return levels_.size() - 1; }

  std::span<const BigInt> level(std::size_t k) const;
  const BigInt& at(std::size_t k, std::uint64_t r) const;
  // 2^k mod m.
  std::uint64_t pow2_mod(std::size_t k) const;

 private:
  std::uint64_t m_;
  std::vector<std::vector<BigInt>> levels_;
  std::vector<std::uint64_t> pow2mod_;
};

WeightTable build_table(std::uint64_t m, std::size_t max_level);

// T_k[l] = S_{m,l}(2^k). Throws LevelOutOfRange if k exceeds the table.
BigInt s_power_of_two(const WeightTable& table, std::uint64_t l, std::size_t k);

// S_{m,l}(x) using a caller-owned table; requires bit_length(x) <= max_level + 1.
BigInt s_fast(const WeightTable& table, std::uint64_t l, const BigInt& x);

// Builds a table sized for x and evaluates S_{m,l}(x).
BigInt s_fast(std::uint64_t m, std::uint64_t l, const BigInt& x);

}  // namespace newman
