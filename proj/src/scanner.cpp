#include "newman/scanner.hpp"

#include "newman/digitsums.hpp"
#include "newman/errors.hpp"

namespace newman {

SignWalker::SignWalker(std::uint64_t p, std::uint64_t n, std::int64_t sum_before)
    : p_(p), n_(n), residue_(p == 0 ? 0 : n % p), sum_(sum_before), sign_(sign_of(n)) {
  if (p == 0) throw InvalidArgument("modulus must be at least 1");
}

PositivityScanner::PositivityScanner(std::uint64_t p) : PositivityScanner(PositivityState{.p = p}) {}

PositivityScanner::PositivityScanner(const PositivityState& resume_from)
    : state_(resume_from), walker_(resume_from.p, resume_from.x, resume_from.sum) {}

void PositivityScanner::advance_to(std::uint64_t x_target) {
  PositivityState& s = state_;
  while (s.x < x_target) {
    const bool was_positive = s.sum > 0;
    walker_.step();
    s.x = walker_.n();
    s.sum = walker_.sum();
    if (s.argmin == 0 || s.sum < s.min_value) {
      s.min_value = s.sum;
      s.argmin = s.x;
    }
    const bool positive = s.sum > 0;
    if (!positive) s.last_nonpositive_x = s.x;
    if (positive != was_positive) ++s.sign_changes;
  }
}

}  // namespace newman
