#include <gtest/gtest.h>

#include "newman/digitsums.hpp"
#include "newman/errors.hpp"
#include "newman/primes.hpp"
#include "oracle.hpp"

using namespace newman;

TEST(BitWeight, Examples) {
  EXPECT_EQ(bit_weight(BigInt(0)), 0U);
  EXPECT_EQ(bit_weight(BigInt(6)), 2U);
  EXPECT_EQ(bit_weight(BigInt(255)), 8U);
  EXPECT_EQ(bit_weight(pow2(1000)), 1U);
  EXPECT_EQ(bit_weight(BigInt(pow2(200) - 1)), 200U);
}

TEST(BitWeight, NegativeRejected) { EXPECT_THROW(bit_weight(BigInt(-1)), InvalidArgument); }

TEST(SignOf, Examples) {
  EXPECT_EQ(sign_of(BigInt(0)), 1);
  EXPECT_EQ(sign_of(BigInt(1)), -1);
  EXPECT_EQ(sign_of(BigInt(3)), 1);
  EXPECT_EQ(sign_of(std::uint64_t{7}), -1);
}

TEST(SignOf, DoublingRule) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = gen() >> 2;
    EXPECT_EQ(sign_of(2 * n), sign_of(n));
    EXPECT_EQ(sign_of(2 * n + 1), -sign_of(n));
    const BigInt big = from_u64(n) * pow2(97) + from_u64(gen());
    EXPECT_EQ(sign_of(BigInt(2 * big + 1)), -sign_of(big));
  }
}

TEST(SNaive, Examples) {
  EXPECT_EQ(s_naive({3, 0, 8}), 3);
  EXPECT_EQ(s_naive({5, 0, 32}), 5);
  EXPECT_EQ(s_naive({7, 0, 0}), 0);
  EXPECT_EQ(s_naive({3, 0, 4}), 2);
  EXPECT_EQ(s_naive({7, 0, 128}), -7);
}

TEST(SNaive, FrozenOracleValues) {
  // Frozen from independent enumeration.
  EXPECT_EQ(s_naive({3, 0, 1000000}), 36468);
  EXPECT_EQ(s_naive({5, 0, 1000000}), 2150);
  EXPECT_EQ(s_naive({7, 0, 1000000}), -454);
  EXPECT_EQ(s_naive({7, 3, 12345}), 0);
  EXPECT_EQ(s_naive({50, 49, 99999}), 1);
}

TEST(SNaive, BudgetEnforced) {
  EXPECT_THROW(s_naive({3, 0, pow2(27)}), BudgetExceeded);
  EXPECT_THROW(s_naive({3, 0, 1001}, 1000), BudgetExceeded);
  EXPECT_NO_THROW(s_naive({3, 0, 1000}, 1000));
}

TEST(SNaive, InvalidQueries) {
  EXPECT_THROW(s_naive({0, 0, 8}), InvalidArgument);
  EXPECT_THROW(s_naive({3, 3, 8}), InvalidArgument);
  EXPECT_THROW(s_naive({3, 0, -1}), InvalidArgument);
}

TEST(SNaive, MatchesBruteForce) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t m = 1 + gen() % 40;
    const std::uint64_t l = gen() % m;
    const std::uint64_t x = gen() % 5000;
    EXPECT_EQ(s_naive({m, l, from_u64(x)}), oracle::signed_count(m, l, x)) << m << " " << l << " " << x;
  }
}

TEST(SNaive, CompletenessOverClasses) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t m = 1 + gen() % 30;
    const BigInt x = from_u64(gen() % 20000);
    BigInt total = 0;
    for (std::uint64_t l = 0; l < m; ++l) total += s_naive({m, l, x});
    EXPECT_EQ(total, s_naive({1, 0, x}));
  }
}

TEST(SNaive, EvenLimitsCancel) {
  for (std::uint64_t x = 0; x <= 4000; x += 2) EXPECT_EQ(s_naive({1, 0, from_u64(x)}), 0) << x;
}

TEST(SNaiveAllClasses, MatchesSingleQueries) {
  const std::vector<std::uint64_t> xs{0, 1, 5, 17, 64, 1000, 1000, 4321};
  const auto rows = s_naive_all_classes(7, xs);
  ASSERT_EQ(rows.size(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::uint64_t r = 0; r < 7; ++r) EXPECT_EQ(rows[i][r], oracle::signed_count(7, r, xs[i]));
  }
}

TEST(SNaiveAllClasses, RejectsUnsortedAndOverBudget) {
  const std::vector<std::uint64_t> unsorted{5, 3};
  EXPECT_THROW(s_naive_all_classes(3, unsorted), InvalidArgument);
  const std::vector<std::uint64_t> big{10, 2000};
  EXPECT_THROW(s_naive_all_classes(3, big, 1000), BudgetExceeded);
}

TEST(MultiplesCount, Examples) {
  const auto c3 = multiples_count(3);
  EXPECT_EQ(c3.count, 3);
  EXPECT_TRUE(c3.odd);
  const auto c5 = multiples_count(5);
  EXPECT_EQ(c5.count, 7);
  EXPECT_TRUE(c5.odd);
  const auto c61 = multiples_count(61);
  EXPECT_EQ(c61.count, BigInt("37800705069076951"));
  EXPECT_TRUE(c61.odd);
}

TEST(MultiplesCount, MatchesEnumerationForSmallPrimes) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19}) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < (std::uint64_t{1} << p); n += p) ++count;
    EXPECT_EQ(multiples_count(p).count, from_u64(count)) << p;
  }
}

TEST(MultiplesCount, OddForEveryOddPrimeUpTo256) {
  for (const std::uint64_t p : odd_primes_up_to(256)) {
    // Fermat: p | 2^{p-1} - 1, checked inside multiples_count.
    EXPECT_TRUE(multiples_count(p).odd) << p;
  }
}

TEST(MultiplesCount, RejectsNonPrimes) {
  EXPECT_THROW(multiples_count(9), NotPrime);
  EXPECT_THROW(multiples_count(2), NotPrime);
  EXPECT_THROW(multiples_count(1), NotPrime);
}

TEST(Primes, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::prime_brute(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ParseNatural, Forms) {
  EXPECT_EQ(parse_natural("12345"), 12345);
  EXPECT_EQ(parse_natural("2^61"), pow2(61));
  EXPECT_EQ(parse_natural("10^6"), 1000000);
  EXPECT_EQ(parse_natural("2^5*3"), 96);
  EXPECT_THROW(parse_natural("-3"), InvalidArgument);
  EXPECT_THROW(parse_natural("2^"), InvalidArgument);
  EXPECT_THROW(parse_natural(""), InvalidArgument);
}
