#pragma once

// Executable checks of the two digit theorems, the growth bounds and the
// conjectures about S_p(2^p). Every check returns plain data; failures are
// flags in the result, never exceptions.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "newman/bigint.hpp"
#include "newman/scanner.hpp"

namespace newman {

// Primes below 1000 with eventually positive S_p(x), as published. Never
// decided here, only compared against scans.
inline constexpr std::array<std::uint64_t, 6> kEventuallyPositivePrimes{3, 5, 17, 43, 257, 683};

bool in_d_list(std::uint64_t p) noexcept;

// Multiplicative order of 2 mod p, found by stripping prime factors of p - 1.
std::uint64_t order_of_two(std::uint64_t p);

// S_p(2^p) from both exact engines. Throws ArithmeticMismatch if they differ.
BigInt s_p_of_two_pow_p(std::uint64_t p);

// ---- Primitive-root primes ------------------------------------------------

struct Theorem1Entry {
  std::uint64_t p = 0;
  BigInt s_cyclotomic;
  BigInt s_digit_dp;
  bool pass = false;
  double seconds = 0.0;
};

struct Theorem1Report {
  std::vector<Theorem1Entry> entries;
  bool all_pass() const noexcept;
};

std::vector<std::uint64_t> primitive_root_primes(std::uint64_t p_max);
Theorem1Entry verify_theorem1_prime(std::uint64_t p);
Theorem1Report verify_theorem1(std::uint64_t p_max);

// ---- Growth bounds ---------------------------------------------------------

struct BoundSpec {
  std::uint64_t p = 3;
  double exponent = 0.0;  // ln p / ((p - 1) ln 2)
  std::uint64_t n_lo = 1;
  std::uint64_t n_hi = 1;
  bool strict_positive = false;

  // strict_positive is set for p in {3, 5}.
  static BoundSpec for_prime(std::uint64_t p, std::uint64_t n_lo, std::uint64_t n_hi);
  void validate() const;
};

enum class BoundFailure { magnitude, positivity };

struct BoundViolation {
  std::uint64_t n = 0;
  std::int64_t s = 0;
  double bound = 0.0;   // n^exponent
  double margin = 0.0;  // relative margin of the log-transformed sides; negative = violated
  BoundFailure kind = BoundFailure::magnitude;
};

struct BoundReport {
  BoundSpec spec;
  std::uint64_t checked = 0;
  std::uint64_t effective_hi = 0;  // n_hi after budget clipping
  bool clipped = false;
  std::vector<BoundViolation> violations;
  std::vector<BoundViolation> inconclusive;  // |margin| < kInconclusiveMargin
  double max_ratio = 0.0;                    // max |S_p(n)| / n^exponent seen

  bool pass() const noexcept { return violations.empty(); }
};

inline constexpr double kInconclusiveMargin = 1e-9;

// Powers of two are decided exactly via |S|^{p-1} <= p^k; other n compare
// (p - 1) ln|S| with log2(n) ln p, escalating to multiprecision near equality.
BoundReport check_bound(const BoundSpec& spec, std::uint64_t scan_budget = kDefaultScanBudget);

// Exact test |s|^{p-1} <= p^k, i.e. |S_p(2^k)| <= (2^k)^exponent.
bool power_of_two_bound_holds(std::uint64_t p, std::size_t k, const BigInt& s);

// ---- Divisibility implication chain ---------------------------------------

struct Theorem2Record {
  std::uint64_t p = 0;
  BigInt s_value;
  bool hypothesis_bound = false;   // (a) bound on [2^p, n_max]
  bool hypothesis_clipped = false;
  std::uint64_t window_hi = 0;     // last n scanned (0 when only n = 2^p was tested)
  std::size_t bound_violations = 0;
  bool divisible = false;          // (b) p | S_p(2^p)
  bool eq5_consequence = false;    // (c) |S|^{p-1} < p^p
  bool lemma_holds = false;        // p < 2^{p-1}
  bool parity_odd = false;         // (d) odd number of multiples of p below 2^p
  bool conclusion = false;         // (e) S_p(2^p) = +-p
  bool implication_holds = false;  // (a) and (b) imply (e)
};

Theorem2Record check_theorem2(std::uint64_t p, const BigInt& n_max, std::uint64_t scan_budget = kDefaultScanBudget);

// ---- Conjectures -----------------------------------------------------------

struct DivisibilityRow {
  std::uint64_t p = 0;
  BigInt s_value;
  BigInt quotient;
  bool divisible = false;
  bool abs_equals_p = false;  // status of |S_p(2^p)| = p, reported only
};

DivisibilityRow check_divisibility_prime(std::uint64_t p);
std::vector<DivisibilityRow> check_divisibility(std::span<const std::uint64_t> primes);

struct ScalingMismatch {
  std::uint64_t x = 0;
  BigInt lhs;  // S_p(2^p x)
  BigInt rhs;  // p S_p(2x)
};

struct ScalingReport {
  std::uint64_t p = 0;
  std::uint64_t x_max = 0;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<ScalingMismatch> first_mismatch;

  bool pass() const noexcept { return mismatches == 0; }
};

// Requires 2 to be a primitive root of p (InvalidArgument otherwise).
ScalingReport check_scaling(std::uint64_t p, std::uint64_t x_max);

struct PositivityRecord {
  PositivityState state;
  bool in_d_list = false;
  // D primes: S_p(x_max) > 0. Other primes: a nonpositive value occurs. Empirical only.
  bool consistent = false;
};

PositivityRecord summarize_positivity(const PositivityState& state);
PositivityRecord positivity_scan(std::uint64_t p, std::uint64_t x_max, std::uint64_t scan_budget = kDefaultScanBudget);

// ---- Classification --------------------------------------------------------

struct PrimeProfile {
  std::uint64_t p = 0;
  std::uint64_t ord2 = 0;
  bool primitive_root2 = false;
  BigInt s_value;
  bool divisible_by_p = false;
  bool parity_odd = false;
  bool eq1_holds = false;
  bool in_d_list = false;
  std::optional<PositivityRecord> positivity;
  std::vector<std::string> invariant_failures;
};

// x_scan = 0 skips the positivity scan.
PrimeProfile classify_prime(std::uint64_t p, std::uint64_t x_scan, std::uint64_t scan_budget = kDefaultScanBudget);

}  // namespace newman
