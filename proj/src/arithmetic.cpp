#include "cyclicity/arithmetic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclicity/kernels.hpp"

namespace cyclicity {
namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.exponent; ++i) v *= f.prime;
  return v;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

bool is_squarefree(std::uint64_t n) {
  require_positive(n, "is_squarefree");
  for (const auto& f : factorize(n).factors)
    if (f.exponent > 1) return false;
  return true;
}

bool is_cyclic_number(std::uint64_t n) {
  require_positive(n, "is_cyclic_number");
  return std::gcd(n, euler_phi(n)) == 1;
}

Obstruction obstruction(std::uint64_t n) {
  require_positive(n, "obstruction");
  const Factorization f = factorize(n);
  for (const auto& pp : f.factors)
    if (pp.exponent > 1) return SquareFactor{pp.prime};
  for (const auto& p : f.factors)
    for (const auto& q : f.factors)
      if (p.prime != q.prime && (q.prime - 1) % p.prime == 0)
        return DividingPair{p.prime, q.prime};
  return NoObstruction{};
}

std::vector<std::uint64_t> cyclic_number_sieve(std::uint64_t limit) {
  require_positive(limit, "cyclic_number_sieve");
  return kernels::cyclic_number_sieve_parallel(limit);
}

std::uint64_t partition_count(unsigned k) {
  constexpr unsigned kMaxExact = 416;
  if (k > kMaxExact)
    throw std::overflow_error("partition_count: p(" + std::to_string(k) + ") exceeds 64 bits");
  // p(m) = sum_{j>=1} (-1)^{j+1} [p(m - j(3j-1)/2) + p(m - j(3j+1)/2)]
  // Accumulated in signed 128-bit so intermediate sums never wrap.
  std::vector<__int128> p(k + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    __int128 sum = 0;
    for (unsigned j = 1;; ++j) {
      const unsigned g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const unsigned g2 = j * (3 * j + 1) / 2;
      __int128 term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      sum += (j % 2 == 1) ? term : -term;
    }
    p[m] = sum;
  }
  return static_cast<std::uint64_t>(p[k]);
}

std::uint64_t abelian_group_count(std::uint64_t n) {
  require_positive(n, "abelian_group_count");
  std::uint64_t count = 1;
  for (const auto& f : factorize(n).factors) count *= partition_count(f.exponent);
  return count;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace cyclicity
