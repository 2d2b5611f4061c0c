#include <gtest/gtest.h>

#include "newman/cyclotomic.hpp"
#include "newman/digitsums.hpp"
#include "newman/errors.hpp"
#include "newman/weight_table.hpp"
#include "oracle.hpp"

using namespace newman;

namespace {

std::vector<BigInt> row(const WeightTable& t, std::size_t k) { return {t.level(k).begin(), t.level(k).end()}; }

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(BuildTable, HandComputedLevelsForModulus3) {
  const WeightTable t = build_table(3, 3);
  EXPECT_EQ(t.max_level(), 3U);
  EXPECT_EQ(row(t, 0), ints({1, 0, 0}));
  EXPECT_EQ(row(t, 1), ints({1, -1, 0}));
  EXPECT_EQ(row(t, 2), ints({2, -1, -1}));
  EXPECT_EQ(row(t, 3), ints({3, -3, 0}));
}

TEST(BuildTable, ModulusOne) {
  const WeightTable t = build_table(1, 2);
  EXPECT_EQ(row(t, 0), ints({1}));
  EXPECT_EQ(row(t, 1), ints({0}));
  EXPECT_EQ(row(t, 2), ints({0}));
}

TEST(BuildTable, PowersOfTwoModulus) {
  const WeightTable t = build_table(12, 10);
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(t.pow2_mod(k), (std::uint64_t{1} << k) % 12);
}

TEST(BuildTable, LevelsMatchEnumeration) {
  for (std::uint64_t m = 1; m <= 20; ++m) {
    const WeightTable t = build_table(m, 12);
    for (std::size_t k = 0; k <= 12; ++k) {
      BigInt total = 0;
      for (std::uint64_t r = 0; r < m; ++r) {
        EXPECT_EQ(t.at(k, r), oracle::signed_count(m, r, std::uint64_t{1} << k)) << m << " " << k << " " << r;
        total += t.at(k, r);
      }
      if (k >= 1) EXPECT_EQ(total, 0);
    }
  }
}

TEST(BuildTable, RejectsZeroModulus) { EXPECT_THROW(build_table(0, 4), InvalidArgument); }

TEST(SPowerOfTwo, Examples) {
  const WeightTable t3 = build_table(3, 3);
  EXPECT_EQ(s_power_of_two(t3, 0, 3), 3);
  EXPECT_EQ(s_power_of_two(t3, 1, 3), -3);
  for (std::uint64_t m : {1, 2, 7, 30}) EXPECT_EQ(s_power_of_two(build_table(m, 0), 0, 0), 1);
  EXPECT_EQ(s_power_of_two(build_table(5, 5), 0, 5), 5);
}

TEST(SPowerOfTwo, LevelOutOfRange) {
  const WeightTable t = build_table(3, 3);
  EXPECT_THROW(s_power_of_two(t, 0, 4), LevelOutOfRange);
  EXPECT_THROW(s_power_of_two(t, 3, 1), InvalidArgument);
}

TEST(SFast, Examples) {
  EXPECT_EQ(s_fast(3, 0, BigInt(8)), 3);
  EXPECT_EQ(s_fast(1, 0, BigInt(1000000)), 0);
  const BigInt s3 = s_fast(3, 0, BigInt(1000000));
  EXPECT_EQ(s3, s_naive({3, 0, BigInt(1000000)}));
  EXPECT_GT(s3, 0);
  EXPECT_EQ(s_fast(5, 0, pow2(61)), s_cyclotomic(5, 61));
  EXPECT_EQ(s_fast(7, 0, BigInt(0)), 0);
}

TEST(SFast, ExhaustiveSmallGrid) {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    const WeightTable t = build_table(m, 11);
    for (std::uint64_t l = 0; l < m; ++l) {
      std::int64_t running = 0;
      for (std::uint64_t x = 0; x <= 2048; ++x) {
        ASSERT_EQ(s_fast(t, l, from_u64(x)), running) << m << " " << l << " " << x;
        if (x % m == l) running += oracle::thue_morse(x);
      }
    }
  }
}

TEST(SFast, RandomLargerLimits) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t m = 1 + gen() % 50;
    const std::uint64_t l = gen() % m;
    const std::uint64_t x = gen() % (std::uint64_t{1} << 20);
    EXPECT_EQ(s_fast(m, l, from_u64(x)), oracle::signed_count(m, l, x)) << m << " " << l << " " << x;
  }
}

TEST(SFast, PrefixAdditivity) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t m = 1 + gen() % 25;
    const std::uint64_t l = gen() % m;
    std::uint64_t y = gen() % (std::uint64_t{1} << 20);
    std::uint64_t x = gen() % (std::uint64_t{1} << 20);
    if (y > x) std::swap(x, y);
    EXPECT_EQ(s_fast(m, l, from_u64(x)) - s_fast(m, l, from_u64(y)), oracle::signed_count_range(m, l, y, x));
  }
}

TEST(SFast, HugeLimitsPairing) {
  // S_{1,0}(x) is 0 for even x and sign_of(x - 1) for odd x.
  auto& gen = oracle::rng();
  for (int i = 0; i < 50; ++i) {
    BigInt x = from_u64(gen()) * pow2(300) + from_u64(gen());
    const BigInt expected = mpz_odd_p(x.get_mpz_t()) ? BigInt(sign_of(BigInt(x - 1))) : BigInt(0);
    EXPECT_EQ(s_fast(1, 0, x), expected);
  }
}

TEST(SFast, TableTooShallow) {
  const WeightTable t = build_table(3, 4);
  EXPECT_NO_THROW(s_fast(t, 0, BigInt(31)));
  EXPECT_THROW(s_fast(t, 0, BigInt(32)), LevelOutOfRange);
  EXPECT_THROW(s_fast(t, 3, BigInt(5)), InvalidArgument);
}

TEST(SFast, ResidueRotationMatchesCyclotomicVector) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const WeightTable t = build_table(p, 40);
    const auto vec = s_cyclotomic_vector(p, 40);
    for (std::uint64_t l = 0; l < p; ++l) EXPECT_EQ(s_fast(t, l, pow2(40)), vec[l]);
  }
}
