#include "newman/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "mpfr_complex.hpp"
#include "newman/cyclotomic.hpp"
#include "newman/digitsums.hpp"
#include "newman/errors.hpp"
#include "newman/primes.hpp"
#include "newman/weight_table.hpp"

namespace newman {

bool in_d_list(std::uint64_t p) noexcept {
  return std::find(kEventuallyPositivePrimes.begin(), kEventuallyPositivePrimes.end(), p) !=
         kEventuallyPositivePrimes.end();
}

std::uint64_t order_of_two(std::uint64_t p) {
  require_odd_prime(p, "order_of_two");
  std::uint64_t order = p - 1;
  for (const std::uint64_t q : prime_factors(p - 1)) {
    while (order % q == 0 && pow_mod(2, order / q, p) == 1) order /= q;
  }
  return order;
}

BigInt s_p_of_two_pow_p(std::uint64_t p) {
  require_odd_prime(p, "s_p_of_two_pow_p");
  BigInt by_cyclotomic = s_cyclotomic(p, p);
  const BigInt by_digit_dp = s_power_of_two(build_table(p, p), 0, p);
  if (by_cyclotomic != by_digit_dp) {
    throw ArithmeticMismatch("engines disagree on S_" + std::to_string(p) + "(2^" + std::to_string(p) +
                             "): cyclotomic " + to_decimal(by_cyclotomic) + ", digit-dp " + to_decimal(by_digit_dp));
  }
  return by_cyclotomic;
}

// ---- Primitive-root primes ------------------------------------------------

bool Theorem1Report::all_pass() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const Theorem1Entry& e) { return e.pass; });
}

std::vector<std::uint64_t> primitive_root_primes(std::uint64_t p_max) {
  std::vector<std::uint64_t> out;
  for (const std::uint64_t p : odd_primes_up_to(p_max)) {
    if (order_of_two(p) == p - 1) out.push_back(p);
  }
  return out;
}

Theorem1Entry verify_theorem1_prime(std::uint64_t p) {
  require_odd_prime(p, "verify_theorem1");
  const auto start = std::chrono::steady_clock::now();
  Theorem1Entry entry;
  entry.p = p;
  entry.s_cyclotomic = s_cyclotomic(p, p);
  entry.s_digit_dp = s_fast(p, 0, pow2(p));
  const BigInt expected = from_u64(p);
  entry.pass = entry.s_cyclotomic == expected && entry.s_digit_dp == expected;
  entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

Theorem1Report verify_theorem1(std::uint64_t p_max) {
  Theorem1Report report;
  for (const std::uint64_t p : primitive_root_primes(p_max)) report.entries.push_back(verify_theorem1_prime(p));
  return report;
}

// ---- Growth bounds ---------------------------------------------------------

BoundSpec BoundSpec::for_prime(std::uint64_t p, std::uint64_t n_lo, std::uint64_t n_hi) {
  BoundSpec spec;
  spec.p = p;
  spec.exponent = std::log(static_cast<double>(p)) / (static_cast<double>(p - 1) * std::log(2.0));
  spec.n_lo = n_lo;
  spec.n_hi = n_hi;
  spec.strict_positive = p == 3 || p == 5;
  return spec;
}

void BoundSpec::validate() const {
  require_odd_prime(p, "BoundSpec");
  if (!(exponent > 0.0)) throw InvalidArgument("bound exponent must be positive");
  if (n_lo < 1) throw InvalidArgument("bound window must start at n >= 1");
  if (n_hi < n_lo) throw InvalidArgument("bound window is empty");
}

bool power_of_two_bound_holds(std::uint64_t p, std::size_t k, const BigInt& s) {
  BigInt lhs;
  const BigInt magnitude = abs(s);
  mpz_pow_ui(lhs.get_mpz_t(), magnitude.get_mpz_t(), p - 1);
  return lhs <= pow_big(p, k);
}

namespace {

// Relative margin (rhs - lhs) / rhs for lhs = (p - 1) ln|s|, rhs = log2(n) ln p.
double log_margin_double(std::uint64_t p, std::uint64_t n, std::int64_t s) {
  const double lhs = static_cast<double>(p - 1) * std::log(std::abs(static_cast<double>(s)));
  const double rhs = std::log2(static_cast<double>(n)) * std::log(static_cast<double>(p));
  return (rhs - lhs) / rhs;
}

double log_margin_precise(std::uint64_t p, std::uint64_t n, std::int64_t s) {
  constexpr mpfr_prec_t bits = 256;
  detail::Real lhs(bits);
  detail::Real rhs(bits);
  detail::Real tmp(bits);
  mpfr_set_ui(lhs.get(), static_cast<unsigned long>(std::llabs(s)), MPFR_RNDN);
  mpfr_log(lhs.get(), lhs.get(), MPFR_RNDN);
  mpfr_mul_ui(lhs.get(), lhs.get(), p - 1, MPFR_RNDN);
  mpfr_set_ui(rhs.get(), n, MPFR_RNDN);
  mpfr_log2(rhs.get(), rhs.get(), MPFR_RNDN);
  mpfr_set_ui(tmp.get(), p, MPFR_RNDN);
  mpfr_log(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(rhs.get(), rhs.get(), tmp.get(), MPFR_RNDN);
  mpfr_sub(tmp.get(), rhs.get(), lhs.get(), MPFR_RNDN);
  mpfr_div(tmp.get(), tmp.get(), rhs.get(), MPFR_RNDN);
  return mpfr_get_d(tmp.get(), MPFR_RNDN);
}

}  // namespace

BoundReport check_bound(const BoundSpec& spec, std::uint64_t scan_budget) {
  spec.validate();
  if (scan_budget == 0) throw InvalidArgument("scan budget must be positive");
  BoundReport report;
  report.spec = spec;
  report.effective_hi = spec.n_hi;
  if (spec.n_hi - spec.n_lo >= scan_budget) {
    report.effective_hi = spec.n_lo + (scan_budget - 1);
    report.clipped = true;
  }

  const BigInt start = s_fast(spec.p, 0, from_u64(spec.n_lo));
  SignWalker walker(spec.p, spec.n_lo, start.get_si());
  const std::uint64_t p = spec.p;
  for (std::uint64_t n = spec.n_lo;; ++n) {
    const std::int64_t s = walker.sum();
    const double bound = std::pow(static_cast<double>(n), spec.exponent);
    report.max_ratio = std::max(report.max_ratio, std::abs(static_cast<double>(s)) / bound);

    if (spec.strict_positive && s <= 0) {
      report.violations.push_back({n, s, bound, -1.0, BoundFailure::positivity});
    }
    if (s != 0) {
      if (std::has_single_bit(n)) {
        const auto k = static_cast<std::size_t>(std::countr_zero(n));
        if (!power_of_two_bound_holds(p, k, from_i64(s))) {
          report.violations.push_back({n, s, bound, log_margin_double(p, n, s), BoundFailure::magnitude});
        }
      } else {
        double margin = log_margin_double(p, n, s);
        if (std::abs(margin) < 1e-6) margin = log_margin_precise(p, n, s);
        if (std::abs(margin) < kInconclusiveMargin) {
          report.inconclusive.push_back({n, s, bound, margin, BoundFailure::magnitude});
        } else if (margin < 0) {
          report.violations.push_back({n, s, bound, margin, BoundFailure::magnitude});
        }
      }
    }
    ++report.checked;
    if (n == report.effective_hi) break;
    walker.step();
  }
  return report;
}

// ---- Divisibility implication chain ---------------------------------------

Theorem2Record check_theorem2(std::uint64_t p, const BigInt& n_max, std::uint64_t scan_budget) {
  require_odd_prime(p, "check_theorem2");
  Theorem2Record rec;
  rec.p = p;
  rec.s_value = s_p_of_two_pow_p(p);
  const BigInt two_p = pow2(p);
  const BigInt prime = from_u64(p);

  // n = 2^p is decided exactly; the rest of the window by the scanner.
  const bool holds_at_two_p = power_of_two_bound_holds(p, p, rec.s_value);
  bool bound_ok = holds_at_two_p;
  rec.bound_violations = holds_at_two_p ? 0 : 1;
  if (p < 63 && n_max > two_p) {
    const std::uint64_t hi = fits_u64(n_max) ? to_u64(n_max) : std::numeric_limits<std::uint64_t>::max();
    BoundSpec spec = BoundSpec::for_prime(p, to_u64(two_p), hi);
    spec.strict_positive = false;
    const BoundReport window = check_bound(spec, scan_budget);
    bound_ok = bound_ok && window.pass();
    rec.bound_violations = window.violations.size();
    rec.window_hi = window.effective_hi;
    rec.hypothesis_clipped = window.clipped || !fits_u64(n_max);
  } else {
    rec.hypothesis_clipped = n_max > two_p;
  }
  rec.hypothesis_bound = bound_ok;

  rec.divisible = mpz_divisible_p(rec.s_value.get_mpz_t(), prime.get_mpz_t()) != 0;

  BigInt lhs;
  const BigInt magnitude = abs(rec.s_value);
  mpz_pow_ui(lhs.get_mpz_t(), magnitude.get_mpz_t(), p - 1);
  rec.eq5_consequence = lhs < pow_big(p, p);
  rec.lemma_holds = prime < pow2(p - 1);
  rec.parity_odd = multiples_count(p).odd;
  rec.conclusion = magnitude == prime;
  rec.implication_holds = !(rec.hypothesis_bound && rec.divisible) || rec.conclusion;
  return rec;
}

// ---- Conjectures -----------------------------------------------------------

DivisibilityRow check_divisibility_prime(std::uint64_t p) {
  DivisibilityRow row;
  row.p = p;
  row.s_value = s_p_of_two_pow_p(p);
  BigInt remainder;
  mpz_tdiv_qr(row.quotient.get_mpz_t(), remainder.get_mpz_t(), row.s_value.get_mpz_t(), from_u64(p).get_mpz_t());
  row.divisible = sgn(remainder) == 0;
  row.abs_equals_p = abs(row.s_value) == from_u64(p);
  return row;
}

std::vector<DivisibilityRow> check_divisibility(std::span<const std::uint64_t> primes) {
  for (const std::uint64_t p : primes) require_odd_prime(p, "check_divisibility");
  std::vector<DivisibilityRow> rows;
  rows.reserve(primes.size());
  for (const std::uint64_t p : primes) rows.push_back(check_divisibility_prime(p));
  return rows;
}

ScalingReport check_scaling(std::uint64_t p, std::uint64_t x_max) {
  if (order_of_two(p) != p - 1) {
    throw InvalidArgument("scaling relation is only conjectured when 2 is a primitive root; 2 has order " +
                          std::to_string(order_of_two(p)) + " mod " + std::to_string(p));
  }
  ScalingReport report;
  report.p = p;
  report.x_max = x_max;
  if (x_max == 0) return report;

  const std::size_t depth = p + static_cast<std::size_t>(std::bit_width(x_max));
  const WeightTable table = build_table(p, depth);
  const BigInt prime = from_u64(p);
  BigInt big_x;
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    big_x = from_u64(x);
    BigInt shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), big_x.get_mpz_t(), p);
    BigInt lhs = s_fast(table, 0, shifted);
    BigInt rhs = prime * s_fast(table, 0, BigInt(2 * big_x));
    ++report.checked;
    if (lhs != rhs) {
      if (!report.first_mismatch) report.first_mismatch = ScalingMismatch{x, lhs, rhs};
      ++report.mismatches;
    }
  }
  return report;
}

PositivityRecord summarize_positivity(const PositivityState& state) {
  PositivityRecord rec;
  rec.state = state;
  rec.in_d_list = in_d_list(state.p);
  rec.consistent = rec.in_d_list ? (state.x > 0 && state.sum > 0) : state.last_nonpositive_x > 0;
  return rec;
}

PositivityRecord positivity_scan(std::uint64_t p, std::uint64_t x_max, std::uint64_t scan_budget) {
  require_odd_prime(p, "positivity_scan");
  if (x_max > scan_budget) {
    throw BudgetExceeded("positivity scan to " + std::to_string(x_max) + " exceeds the scan budget " +
                         std::to_string(scan_budget));
  }
  PositivityScanner scanner(p);
  scanner.advance_to(x_max);
  return summarize_positivity(scanner.state());
}

// ---- Classification --------------------------------------------------------

PrimeProfile classify_prime(std::uint64_t p, std::uint64_t x_scan, std::uint64_t scan_budget) {
  PrimeProfile prof;
  prof.p = p;
  prof.ord2 = order_of_two(p);
  prof.primitive_root2 = prof.ord2 == p - 1;
  prof.s_value = s_p_of_two_pow_p(p);
  const BigInt prime = from_u64(p);
  prof.divisible_by_p = mpz_divisible_p(prof.s_value.get_mpz_t(), prime.get_mpz_t()) != 0;
  prof.parity_odd = multiples_count(p).odd;
  prof.eq1_holds = abs(prof.s_value) == prime;
  prof.in_d_list = in_d_list(p);
  if (x_scan > 0) prof.positivity = positivity_scan(p, x_scan, scan_budget);

  auto& failures = prof.invariant_failures;
  if ((p - 1) % prof.ord2 != 0) failures.push_back("order of 2 does not divide p - 1");
  if (prof.primitive_root2 && prof.s_value != prime) failures.push_back("2 is a primitive root but S_p(2^p) != p");
  if (prof.eq1_holds && !prof.divisible_by_p) failures.push_back("|S_p(2^p)| = p but p does not divide it");
  if (!prof.parity_odd) failures.push_back("even number of multiples of p below 2^p");
  if (mpz_odd_p(prof.s_value.get_mpz_t()) == 0) failures.push_back("S_p(2^p) is even");
  return prof;
}

}  // namespace newman
