#include "psq/sieves.hpp"

#include <cmath>
#include <string>

#include "psq/errors.hpp"

namespace psq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Primes up to `bound`, grown geometrically and cached per thread so
// scan loops never contend on a lock.
const std::vector<std::uint32_t>& primes_upto(std::uint32_t bound) {
  thread_local std::vector<std::uint32_t> primes;
  thread_local std::uint32_t sieved_to = 0;
  if (bound <= sieved_to) return primes;
  std::uint32_t target = std::max<std::uint32_t>(bound, 1 << 14);
  if (target < sieved_to * 2) target = sieved_to * 2;
  std::vector<bool> comp(static_cast<std::size_t>(target) + 1, false);
  primes.clear();
  for (std::uint32_t i = 2; i <= target; ++i) {
    if (comp[i]) continue;
    primes.push_back(i);
    for (u64 j = static_cast<u64>(i) * i; j <= target; j += i) comp[j] = true;
  }
  sieved_to = target;
  return primes;
}

}  // namespace

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 icbrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

int MobiusTable::mu(u64 n) const {
  if (n < 1 || n > limit) {
    throw DomainError("mu(" + std::to_string(n) + ") outside table limit " +
                      std::to_string(limit));
  }
  return values[n - 1];
}

MobiusTable mobius_sieve(u64 limit, u64 memory_budget) {
  if (limit < 1) throw DomainError("mobius_sieve requires limit >= 1");
  if (limit > memory_budget) {
    throw LimitTooLarge("mobius table of " + std::to_string(limit) +
                        " entries exceeds budget " +
                        std::to_string(memory_budget));
  }
  MobiusTable table;
  table.limit = limit;
  table.values.assign(limit, 0);
  table.values[0] = 1;
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      table.values[i - 1] = -1;
    }
    for (std::uint32_t p : primes) {
      const u64 ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        table.values[ip - 1] = 0;
        break;
      }
      table.values[ip - 1] = -table.values[i - 1];
    }
  }
  return table;
}

SquarefreeDecomposition squarefree_part(u64 k) {
  if (k < 1) throw DomainError("squarefree_part requires k >= 1");
  u64 s = 1, m = 1, rem = k;
  const u64 cbrt_k = icbrt_u64(k);
  if (cbrt_k > 1) {
    for (std::uint32_t p : primes_upto(static_cast<std::uint32_t>(cbrt_k))) {
      if (p > cbrt_k) break;
      if (rem % p == 0) {
        unsigned e = 0;
        while (rem % p == 0) {
          rem /= p;
          ++e;
        }
        if (e & 1) s *= p;
        for (unsigned i = 0; i < e / 2; ++i) m *= p;
      }
      if (rem == 1) break;
    }
  }
  // rem has no prime factor <= k^(1/3): it is 1, p, p^2 or pq.
  if (rem > 1) {
    const u64 r = isqrt_u64(rem);
    if (r * r == rem) {
      m *= r;
    } else {
      s *= rem;
    }
  }
  return SquarefreeDecomposition{k, s, m};
}

bool is_squarefree(u64 k) { return squarefree_part(k).s == k; }

u64 count_squarefree_upto(u64 x) {
  if (x < 1) throw DomainError("count_squarefree_upto requires x >= 1");
  const u64 root = isqrt_u64(x);
  MobiusTable table = mobius_sieve(root);
  std::int64_t total = 0;
  for (u64 d = 1; d <= root; ++d) {
    const int mu = table.values[d - 1];
    if (mu != 0) total += static_cast<std::int64_t>(mu) *
                          static_cast<std::int64_t>(x / (d * d));
  }
  return static_cast<u64>(total);
}

}  // namespace psq
