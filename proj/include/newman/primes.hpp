#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace newman {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Throws NotPrime unless p is an odd prime; `what` names the caller in the message.
void require_odd_prime(std::uint64_t p, std::string_view what);

// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit);

}  // namespace newman
