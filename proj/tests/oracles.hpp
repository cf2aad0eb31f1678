#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// library's arithmetic or group code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace cyclicity::oracle {

inline std::uint64_t phi_by_counting(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

inline bool squarefree_by_division(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

// Partitions of k into parts of size <= largest, by direct recursion.
inline std::uint64_t partitions_at_most(unsigned k, unsigned largest) {
  if (k == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned part = std::min(k, largest); part >= 1; --part)
    total += partitions_at_most(k - part, part);
  return total;
}

inline std::uint64_t partitions_by_enumeration(unsigned k) { return partitions_at_most(k, k); }

inline std::size_t multiplicative_order(std::uint64_t u, std::uint64_t q) {
  std::size_t k = 1;
  for (std::uint64_t x = u % q; x != 1; x = x * u % q) ++k;
  return k;
}

inline std::uint64_t smallest_unit_of_order(std::uint64_t q, std::size_t p) {
  for (std::uint64_t u = 2; u < q; ++u)
    if (std::gcd(u, q) == 1 && multiplicative_order(u, q) == p) return u;
  return 0;
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_dividing(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime_naive(p)) out.push_back(p);
  return out;
}

// Symmetric group on 3 points: table over the 6 permutations in
// lexicographic order, product (s t)(i) = s(t(i)). Identity is index 0.
struct S3 {
  std::vector<std::vector<int>> perms;
  std::vector<std::uint32_t> table;

  S3() {
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    table.resize(36);
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        table[a * 6 + b] = static_cast<std::uint32_t>(
            std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
  }
};

// Element-order census of a raw table by repeated multiplication.
inline std::map<std::size_t, std::size_t> census_by_powers(const std::vector<std::uint32_t>& t,
                                                           std::size_t n, std::uint32_t e) {
  std::map<std::size_t, std::size_t> census;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (std::uint32_t y = x; y != e; y = t[y * n + x]) ++k;
    ++census[k];
  }
  return census;
}

inline std::vector<std::uint32_t> random_permutation(std::size_t n, std::mt19937_64& rng,
                                                     bool fix_zero = false) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin() + (fix_zero ? 1 : 0), p.end(), rng);
  return p;
}

}  // namespace cyclicity::oracle
