#include "newman/weight_table.hpp"

#include <string>

#include "newman/errors.hpp"
#include "newman/primes.hpp"

namespace newman {

WeightTable::WeightTable(std::uint64_t m, std::size_t max_level) : m_(m) {
  if (m == 0) throw InvalidArgument("modulus must be at least 1");
  levels_.reserve(max_level + 1);
  pow2mod_.reserve(max_level + 1);

  std::vector<BigInt> current(m, 0);
  current[0] = 1;
  std::uint64_t shift = 1 % m;
  for (std::size_t k = 0;; ++k) {
    pow2mod_.push_back(shift);
    if (k == max_level) {
      levels_.push_back(std::move(current));
      break;
    }
    std::vector<BigInt> next(m);
    for (std::uint64_t r = 0; r < m; ++r) {
      const std::uint64_t from = r >= shift ? r - shift : r + m - shift;
      mpz_sub(next[r].get_mpz_t(), current[r].get_mpz_t(), current[from].get_mpz_t());
    }
    BigInt total = 0;
    for (const BigInt& v : next) total += v;
    if (sgn(total) != 0) {
      throw ArithmeticMismatch("weight table level " + std::to_string(k + 1) + " does not sum to zero");
    }
    levels_.push_back(std::move(current));
    current = std::move(next);
    shift = mul_mod(shift, 2, m);
  }
}

std::span<const BigInt> WeightTable::level(std::size_t k) const {
  if (k > max_level()) {
    throw LevelOutOfRange("level " + std::to_string(k) + " exceeds table depth " + std::to_string(max_level()));
  }
  return levels_[k];
}

const BigInt& WeightTable::at(std::size_t k, std::uint64_t r) const {
  const auto row = level(k);
  if (r >= m_) throw InvalidArgument("residue " + std::to_string(r) + " is not below modulus " + std::to_string(m_));
  return row[r];
}

std::uint64_t WeightTable::pow2_mod(std::size_t k) const {
  if (k > max_level()) {
    throw LevelOutOfRange("level " + std::to_string(k) + " exceeds table depth " + std::to_string(max_level()));
  }
  return pow2mod_[k];
}

WeightTable build_table(std::uint64_t m, std::size_t max_level) { return WeightTable(m, max_level); }

BigInt s_power_of_two(const WeightTable& table, std::uint64_t l, std::size_t k) { return table.at(k, l); }

BigInt s_fast(const WeightTable& table, std::uint64_t l, const BigInt& x) {
  const std::uint64_t m = table.modulus();
  if (l >= m) throw InvalidArgument("residue " + std::to_string(l) + " is not below modulus " + std::to_string(m));
  if (sgn(x) < 0) throw InvalidArgument("upper limit must be non-negative");
  const std::size_t bits = bit_length(x);
  if (bits == 0) return 0;
  if (bits - 1 > table.max_level()) {
    throw LevelOutOfRange("x needs level " + std::to_string(bits - 1) + ", table depth is " +
                          std::to_string(table.max_level()));
  }

  // Prefix above bit b: residue `rho` and weight parity `odd`. Numbers
  // prefix + n' with n' < 2^b contribute (-1)^odd * T_b[(l - rho) mod m].
  BigInt result = 0;
  std::uint64_t rho = 0;
  bool odd = false;
  for (std::size_t b = bits; b-- > 0;) {
    if (!test_bit(x, b)) continue;
    const std::uint64_t target = l >= rho ? l - rho : l + m - rho;
    const BigInt& term = table.at(b, target);
    if (odd) {
      mpz_sub(result.get_mpz_t(), result.get_mpz_t(), term.get_mpz_t());
    } else {
      mpz_add(result.get_mpz_t(), result.get_mpz_t(), term.get_mpz_t());
    }
    rho += table.pow2_mod(b);
    if (rho >= m) rho -= m;
    odd = !odd;
  }
  return result;
}

BigInt s_fast(std::uint64_t m, std::uint64_t l, const BigInt& x) {
  if (m == 0) throw InvalidArgument("modulus must be at least 1");
  if (l >= m) throw InvalidArgument("residue " + std::to_string(l) + " is not below modulus " + std::to_string(m));
  if (sgn(x) < 0) throw InvalidArgument("upper limit must be non-negative");
  if (sgn(x) == 0) return 0;
  return s_fast(build_table(m, bit_length(x) - 1), l, x);
}

}  // namespace newman
