#pragma once

// Verification campaigns that tie the arithmetic predicate to explicit groups:
// Sylow counting bounds, the cyclic-number equivalence at oracle scale,
// witness sweeps and solvability sweeps.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicity/enumeration.hpp"
#include "cyclicity/finite_group.hpp"
#include "cyclicity/kernels.hpp"

namespace cyclicity {

struct SylowEntry {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> candidates;  // d | n/p with d = 1 mod p, ascending
  std::optional<std::uint64_t> chosen;    // least candidate > 1
  std::uint64_t contribution = 0;         // chosen * (p - 1), or 0
};

enum class CensusOutcome {
  CountExceedsOrder,     // assuming every Sylow count is nontrivial overflows |G|
  NoNontrivialCandidate, // some n_p is forced to 1 by divisibility alone
  Inconclusive,
};

/// Elements of prime order in a hypothetical group of squarefree order n with
/// no normal Sylow subgroup, using the least admissible count for every prime.
struct CensusReport {
  std::uint64_t n = 0;
  std::vector<SylowEntry> entries;
  std::uint64_t non_identity_total = 0;  // sum of contributions
  std::uint64_t total = 0;               // 1 + non_identity_total
  bool exceeds_order = false;            // total > n
  std::vector<std::uint64_t> forced_primes;  // primes with no candidate > 1
  CensusOutcome outcome = CensusOutcome::Inconclusive;
  /// Some Sylow subgroup must be normal.
  bool verdict = false;
};

/// Throws InvalidGroup unless n >= 2 is squarefree.
CensusReport sylow_census_bound(std::uint64_t n);

struct VerdictRecord {
  std::uint64_t n = 0;
  bool cyclic_number = false;
  std::optional<std::string> witness_label;
  std::optional<std::string> witness;        // serialized group
  std::optional<std::size_t> group_count;    // present when n <= max_enum
  bool consistent = false;
};

/// Records for n = 1..max(max_enum, max_witness), ascending.
std::vector<VerdictRecord> verify_equivalence(std::size_t max_enum, std::size_t max_witness,
                                              std::size_t enum_cap = kDefaultEnumerationCap,
                                              std::size_t table_cap = kDefaultTableCap,
                                              Execution exec = Execution::Parallel);

struct SolvabilityEntry {
  std::uint64_t n = 0;
  std::string source;  // "witness" or "enumerated"
  std::string label;
  std::vector<std::size_t> series_sizes;  // |G|, |G'|, ... down to the terminal term
  bool solvable = false;
};

struct SolvabilitySummary {
  std::vector<SolvabilityEntry> entries;
  bool all_solvable = true;
};

/// Witnesses of squarefree order <= max_n, plus enumerated groups of
/// squarefree order <= max_enum.
SolvabilitySummary verify_solvability(std::size_t max_n,
                                      std::size_t max_enum = kDefaultEnumerationCap,
                                      std::size_t table_cap = kDefaultTableCap,
                                      Execution exec = Execution::Parallel);

}  // namespace cyclicity
