#pragma once

// Data-parallel kernels. Each has a serial reference kept for testing and
// benchmarking; the parallel variant is what the library calls.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclicity/finite_group.hpp"

namespace cyclicity {

enum class Execution { Serial, Parallel };

namespace kernels {

struct Triple {
  Element a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// First (a, b, c) in lexicographic order with (ab)c != a(bc). The table must
/// already be closed (entries < order).
std::optional<Triple> find_associativity_violation_serial(std::span<const Element> table,
                                                          std::size_t order);
std::optional<Triple> find_associativity_violation_parallel(std::span<const Element> table,
                                                            std::size_t order);

/// Reference: is_cyclic_number applied to each n in turn.
std::vector<std::uint64_t> cyclic_number_sieve_serial(std::uint64_t limit);
/// Smallest-prime-factor sieve, then a parallel phi/gcd pass.
std::vector<std::uint64_t> cyclic_number_sieve_parallel(std::uint64_t limit);

}  // namespace kernels
}  // namespace cyclicity
