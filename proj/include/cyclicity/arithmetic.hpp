#pragma once

// Integer predicates behind the cyclic-number test: factorization, Euler phi,
// squarefreeness, obstruction extraction and abelian group counting.

#include <cstdint>
#include <variant>
#include <vector>

namespace cyclicity {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Empty for n = 1.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t value() const;
  std::vector<std::uint64_t> primes() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct NoObstruction {
  friend bool operator==(const NoObstruction&, const NoObstruction&) = default;
};

/// p^2 divides n.
struct SquareFactor {
  std::uint64_t p = 0;
  friend bool operator==(const SquareFactor&, const SquareFactor&) = default;
};

/// p and q both divide n and p divides q - 1.
struct DividingPair {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  friend bool operator==(const DividingPair&, const DividingPair&) = default;
};

using Obstruction = std::variant<NoObstruction, SquareFactor, DividingPair>;

bool is_prime(std::uint64_t n);

// All of the following reject n = 0 with std::invalid_argument.
Factorization factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
bool is_cyclic_number(std::uint64_t n);

/// Why n fails gcd(n, phi(n)) = 1. The smallest square factor wins; otherwise
/// the lexicographically smallest (p, q) with p | q - 1.
Obstruction obstruction(std::uint64_t n);

/// All cyclic numbers in [1, limit], ascending.
std::vector<std::uint64_t> cyclic_number_sieve(std::uint64_t limit);

/// Number of partitions of k (pentagonal-number recurrence). Exact; throws
/// std::overflow_error once p(k) leaves 64-bit range (k > 416).
std::uint64_t partition_count(unsigned k);

std::uint64_t abelian_group_count(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Ascending divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace cyclicity
