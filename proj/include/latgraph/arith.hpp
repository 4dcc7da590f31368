#pragma once

// Small number-theory helpers: totient, divisors, and the cover relation of
// the divisor poset.

#include <cstdint>
#include <utility>
#include <vector>

#include "latgraph/error.hpp"

namespace latgraph {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t totient(std::uint64_t d) {
  if (d == 0) fail(ErrorKind::InvalidParameter, "totient of 0 is undefined");
  std::uint64_t result = d;
  for (std::uint64_t p : prime_factors(d)) result = result / p * (p - 1);
  return result;
}

// Divisors of n in increasing order (empty for n == 0).
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Pairs (d, d') with d | d' | n and d'/d prime, sorted lexicographically.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_cover_pairs(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (n == 0) return out;
  const auto primes = prime_factors(n);
  for (std::uint64_t d : divisors(n))
    for (std::uint64_t p : primes)
      if ((n / d) % p == 0) out.emplace_back(d, d * p);
  return out;
}

}  // namespace latgraph
