#include "cyclicity/kernels.hpp"

#include <atomic>
#include <limits>
#include <numeric>

#include "cyclicity/arithmetic.hpp"

namespace cyclicity::kernels {
namespace {

// First (b, c) with (ab)c != a(bc) for fixed a, encoded b * order + c.
std::optional<std::size_t> first_violation_in_row(std::span<const Element> t, std::size_t n,
                                                  std::size_t a) {
  const Element* row_a = t.data() + a * n;
  for (std::size_t b = 0; b < n; ++b) {
    const Element* row_ab = t.data() + static_cast<std::size_t>(row_a[b]) * n;
    const Element* row_b = t.data() + b * n;
    for (std::size_t c = 0; c < n; ++c)
      if (row_ab[c] != row_a[row_b[c]]) return b * n + c;
  }
  return std::nullopt;
}

Triple decode(std::size_t a, std::size_t bc, std::size_t n) {
  return {static_cast<Element>(a), static_cast<Element>(bc / n), static_cast<Element>(bc % n)};
}

}  // namespace

std::optional<Triple> find_associativity_violation_serial(std::span<const Element> table,
                                                          std::size_t order) {
  for (std::size_t a = 0; a < order; ++a)
    if (auto bc = first_violation_in_row(table, order, a)) return decode(a, *bc, order);
  return std::nullopt;
}

std::optional<Triple> find_associativity_violation_parallel(std::span<const Element> table,
                                                            std::size_t order) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_a{kNone};
  std::vector<std::size_t> hit(order, kNone);
  const auto n = static_cast<std::int64_t>(order);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t ai = 0; ai < n; ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    if (a > best_a.load(std::memory_order_relaxed)) continue;
    if (auto bc = first_violation_in_row(table, order, a)) {
      hit[a] = *bc;
      std::size_t cur = best_a.load(std::memory_order_relaxed);
      while (a < cur && !best_a.compare_exchange_weak(cur, a)) {
      }
    }
  }

  const std::size_t a = best_a.load();
  if (a == kNone) return std::nullopt;
  return decode(a, hit[a], order);
}

std::vector<std::uint64_t> cyclic_number_sieve_serial(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (is_cyclic_number(n)) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> cyclic_number_sieve_parallel(std::uint64_t limit) {
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw CapExceeded("cyclic_number_sieve: limit exceeds 32-bit sieve range");
  // spf[m] = smallest prime factor of m
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }

  std::vector<unsigned char> keep(limit + 1, 0);
  const auto top = static_cast<std::int64_t>(limit);
#pragma omp parallel for schedule(static)
  for (std::int64_t ni = 1; ni <= top; ++ni) {
    std::uint64_t m = static_cast<std::uint64_t>(ni);
    std::uint64_t phi = 1;
    while (m > 1) {
      const std::uint64_t p = spf[m];
      m /= p;
      phi *= p - 1;
      while (m % p == 0) {
        m /= p;
        phi *= p;
      }
    }
    keep[ni] = std::gcd(static_cast<std::uint64_t>(ni), phi) == 1;
  }

  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (keep[n]) out.push_back(n);
  return out;
}

}  // namespace cyclicity::kernels
