#pragma once

// Test-only brute force, deliberately sharing no code with the library.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

namespace oracle {

inline int thue_morse(std::uint64_t n) {
  int s = 1;
  while (n != 0) {
    if (n % 2 == 1) s = -s;
    n /= 2;
  }
  return s;
}

// sum_{0 <= n < x, n = l mod m} (-1)^{weight(n)}
inline std::int64_t signed_count(std::uint64_t m, std::uint64_t l, std::uint64_t x) {
  std::int64_t total = 0;
  for (std::uint64_t n = 0; n < x; ++n) {
    if (n % m == l) total += thue_morse(n);
  }
  return total;
}

inline std::int64_t signed_count_range(std::uint64_t m, std::uint64_t l, std::uint64_t lo, std::uint64_t hi) {
  std::int64_t total = 0;
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (n % m == l) total += thue_morse(n);
  }
  return total;
}

// S_m(x) for every x = 0 .. x_max, by one pass.
inline std::vector<std::int64_t> prefix_class0(std::uint64_t m, std::uint64_t x_max) {
  std::vector<std::int64_t> out(x_max + 1, 0);
  for (std::uint64_t n = 0; n < x_max; ++n) out[n + 1] = out[n] + (n % m == 0 ? thue_morse(n) : 0);
  return out;
}

inline std::uint64_t order_brute(std::uint64_t p) {
  std::uint64_t v = 2 % p;
  for (std::uint64_t t = 1;; ++t) {
    if (v == 1) return t;
    v = v * 2 % p;
  }
}

inline bool prime_brute(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261014);
  return gen;
}

// Unique per process and call, so parallel test processes never share files.
inline std::filesystem::path temp_path(const std::string& prefix) {
  static std::uint64_t counter = 0;
  return std::filesystem::temp_directory_path() /
         (prefix + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + std::to_string(rng()()));
}

}  // namespace oracle
