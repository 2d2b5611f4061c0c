#pragma once

// Sequential walkers over consecutive n, maintaining S_p(x) for x = n + 1 in
// O(1) amortized time per step.

#include <bit>
#include <cstdint>

namespace newman {

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

// Tracks sign_of(n), n mod p and the running class-0 sum S_p(n).
class SignWalker {
 public:
  // Positioned at n with S_p(n) = sum_before (sum over m < n).
  SignWalker(std::uint64_t p, std::uint64_t n, std::int64_t sum_before);

  std::uint64_t n() const noexcept { return n_; }
  // S_p(n): the class-0 sum over [0, n).
  std::int64_t sum() const noexcept { return sum_; }

  // Includes n into the sum and moves to n + 1.
  void step() noexcept {
    if (residue_ == 0) sum_ += sign_;
    // Adding one clears the trailing run of ones and sets one bit, so the
    // weight parity flips exactly when that run has even length.
    if ((std::countr_one(n_) & 1) == 0) sign_ = -sign_;
    ++n_;
    if (++residue_ == p_) residue_ = 0;
  }

 private:
  std::uint64_t p_;
  std::uint64_t n_;
  std::uint64_t residue_;
  std::int64_t sum_;
  int sign_;
};

// Positivity statistics of S_p(x) over x in [1, x]; fully describes a
// resumable scan.
struct PositivityState {
  std::uint64_t p = 0;
  std::uint64_t x = 0;                   // limits covered: S_p(1) .. S_p(x)
  std::int64_t sum = 0;                  // S_p(x)
  std::int64_t min_value = 0;            // min S_p(x'), x' in [1, x]
  std::uint64_t argmin = 0;              // smallest x' attaining min_value (0 while x = 0)
  std::uint64_t last_nonpositive_x = 0;  // largest x' in [0, x] with S_p(x') <= 0
  std::uint64_t sign_changes = 0;        // transitions between S > 0 and S <= 0 along x' = 0 .. x

  friend bool operator==(const PositivityState&, const PositivityState&) = default;
};

class PositivityScanner {
 public:
  explicit PositivityScanner(std::uint64_t p);
  explicit PositivityScanner(const PositivityState& resume_from);

  const PositivityState& state() const noexcept { return state_; }

  // Extends coverage to x_target (no-op if already covered).
  void advance_to(std::uint64_t x_target);

 private:
  PositivityState state_;
  SignWalker walker_;
};

}  // namespace newman
