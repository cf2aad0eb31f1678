#pragma once

// Brute-force oracle: all groups of order n up to isomorphism, found by
// backtracking over Cayley tables. Does not rely on any classification
// result; it is the independent check for the arithmetic predicate.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclicity/finite_group.hpp"
#include "cyclicity/kernels.hpp"

namespace cyclicity {

/// Default largest order enumerated. Order 8 searches a 7x7 free block.
inline constexpr std::size_t kDefaultEnumerationCap = 8;
/// Candidate sets are 64-bit masks.
inline constexpr std::size_t kEnumerationHardLimit = 64;

struct SearchStats {
  std::uint64_t nodes = 0;      // cell assignments attempted
  std::uint64_t solutions = 0;  // complete tables (labelled, identity at 0)

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    solutions += o.solutions;
    return *this;
  }
};

/// Partially filled Cayley table with identity 0. Row 0 and column 0 hold the
/// identity law permanently; filled cells never repeat within a row or column,
/// and every associativity triple whose cells are all filled holds.
class SearchState {
 public:
  static constexpr int kUnset = -1;

  explicit SearchState(std::size_t n);

  std::size_t order() const { return n_; }
  int at(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }

  /// Values still allowed at (a, b) by the Latin-square constraints.
  std::uint64_t candidates(std::size_t a, std::size_t b) const;

  /// Set (a, b) = c if Latin and associativity constraints allow it. Leaves the
  /// state unchanged and returns false otherwise.
  bool try_assign(std::size_t a, std::size_t b, int c);
  void clear(std::size_t a, std::size_t b);

  /// Free cells are (1..n-1) x (1..n-1) in row-major order.
  std::size_t free_cells() const { return (n_ - 1) * (n_ - 1); }
  std::pair<std::size_t, std::size_t> free_cell(std::size_t i) const {
    return {1 + i / (n_ - 1), 1 + i % (n_ - 1)};
  }

  std::vector<Element> table() const;
  SearchStats& stats() { return stats_; }
  const SearchStats& stats() const { return stats_; }

 private:
  bool associative_at(std::size_t a, std::size_t b) const;

  std::size_t n_;
  std::vector<int> cells_;
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
  SearchStats stats_;
};

struct EnumerationResult {
  std::vector<FiniteGroup> classes;  // lexicographically least table per class, in that order
  SearchStats stats;
};

/// Serial: one depth-first search. Parallel: the subtrees below each valid
/// completion of row 1 are searched independently and merged in order; the
/// classes are identical either way.
EnumerationResult enumerate_groups_detailed(std::size_t n,
                                            std::size_t cap = kDefaultEnumerationCap,
                                            Execution exec = Execution::Parallel);

std::vector<FiniteGroup> enumerate_groups(std::size_t n, std::size_t cap = kDefaultEnumerationCap,
                                          Execution exec = Execution::Parallel);

std::size_t count_groups(std::size_t n, std::size_t cap = kDefaultEnumerationCap,
                         Execution exec = Execution::Parallel);

}  // namespace cyclicity
