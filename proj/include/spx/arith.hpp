#pragma once

#include <cstdint>
#include <numeric>
#include <span>

#include "spx/errors.hpp"

namespace spx {

inline bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline void require_prime(long long p) {
  require(is_prime(p), "p must be prime, got " + std::to_string(p));
}

// Exponent of the largest power of p dividing m (m >= 1).
inline int nu_p(std::uint64_t m, int p) {
  require(m >= 1, "nu_p: m must be positive");
  require_prime(p);
  int a = 0;
  while (m % static_cast<std::uint64_t>(p) == 0) {
    m /= static_cast<std::uint64_t>(p);
    ++a;
  }
  return a;
}

// nu_p(m!) by Legendre's formula.
inline int nu_p_factorial(std::uint64_t m, int p) {
  require_prime(p);
  int a = 0;
  for (std::uint64_t q = m / static_cast<std::uint64_t>(p); q > 0; q /= static_cast<std::uint64_t>(p))
    a += static_cast<int>(q);
  return a;
}

// nu_p of the multinomial coefficient (sum parts; parts...).
inline int nu_p_multinomial(std::span<const int> parts, int p) {
  std::uint64_t total = 0;
  int below = 0;
  for (int c : parts) {
    require(c >= 0, "multinomial parts must be nonnegative");
    total += static_cast<std::uint64_t>(c);
    below += nu_p_factorial(static_cast<std::uint64_t>(c), p);
  }
  return nu_p_factorial(total, p) - below;
}

inline std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

using uint128 = unsigned __int128;

// m! as a 128-bit integer; exact for m <= 33.
inline uint128 factorial128(int m) {
  if (m > 33) throw resource_error("factorial exceeds 128 bits");
  uint128 r = 1;
  for (int i = 2; i <= m; ++i) r *= static_cast<uint128>(i);
  return r;
}

}  // namespace spx
