#pragma once

#include <cstdint>
#include <vector>

namespace psq {

// Default memory budget for sieve tables: entries of one signed byte.
inline constexpr std::uint64_t kDefaultSieveBudget = 2'000'000'000ULL;

struct MobiusTable {
  std::uint64_t limit = 0;
  std::vector<std::int8_t> values;  // values[n-1] = mu(n)

  int mu(std::uint64_t n) const;
};

// Linear-time sieve of mu(n) for 1 <= n <= limit.
MobiusTable mobius_sieve(std::uint64_t limit,
                         std::uint64_t memory_budget = kDefaultSieveBudget);

struct SquarefreeDecomposition {
  std::uint64_t k, s, m;  // k = s * m^2, s squarefree; unique
};

// Trial division by primes up to k^(1/3); the remaining cofactor is
// 1, p, p^2 or pq and a single square test resolves it.
SquarefreeDecomposition squarefree_part(std::uint64_t k);

bool is_squarefree(std::uint64_t k);

// Exact count of squarefree integers <= x via sum_{d<=sqrt(x)} mu(d) floor(x/d^2).
std::uint64_t count_squarefree_upto(std::uint64_t x);

std::uint64_t isqrt_u64(std::uint64_t n);
std::uint64_t icbrt_u64(std::uint64_t n);

}  // namespace psq
