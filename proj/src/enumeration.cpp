#include "cyclicity/enumeration.hpp"

#include <bit>
#include <exception>
#include <string>

#include "cyclicity/isomorphism.hpp"

namespace cyclicity {
namespace {

// Keeps the first table seen in each isomorphism class.
class ClassCollector {
 public:
  void offer(std::vector<Element> table, std::size_t n) {
    FiniteGroup g(n, std::move(table), 0, {}, n);
    Fingerprint fp = fingerprint(g);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (find_isomorphism(reps_[i], prints_[i], g, fp)) return;
    reps_.push_back(std::move(g));
    prints_.push_back(std::move(fp));
  }

  void merge(ClassCollector&& other) {
    for (std::size_t i = 0; i < other.reps_.size(); ++i) {
      bool known = false;
      for (std::size_t j = 0; j < reps_.size() && !known; ++j)
        known = find_isomorphism(reps_[j], prints_[j], other.reps_[i], other.prints_[i]).has_value();
      if (!known) {
        reps_.push_back(std::move(other.reps_[i]));
        prints_.push_back(std::move(other.prints_[i]));
      }
    }
  }

  std::vector<FiniteGroup> take(std::size_t n) {
    std::vector<FiniteGroup> out;
    out.reserve(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
      out.push_back(reps_[i].with_label("order " + std::to_string(n) + " class " +
                                        std::to_string(i + 1)));
    return out;
  }

 private:
  std::vector<FiniteGroup> reps_;
  std::vector<Fingerprint> prints_;
};

template <class Emit>
void search(SearchState& s, std::size_t cell, std::size_t end, Emit&& emit) {
  if (cell == end) {
    emit(s);
    return;
  }
  const auto [a, b] = s.free_cell(cell);
  for (std::uint64_t mask = s.candidates(a, b); mask != 0; mask &= mask - 1) {
    const int c = std::countr_zero(mask);
    if (!s.try_assign(a, b, c)) continue;
    search(s, cell + 1, end, emit);
    s.clear(a, b);
  }
}

void check_order(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidGroup("enumerate_groups: n must be >= 1");
  if (n > cap)
    throw CapExceeded("enumerate_groups: order " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));
  if (n > kEnumerationHardLimit)
    throw CapExceeded("enumerate_groups: order " + std::to_string(n) + " exceeds hard limit " +
                      std::to_string(kEnumerationHardLimit));
}

}  // namespace

SearchState::SearchState(std::size_t n)
    : n_(n), cells_(n * n, kUnset), row_used_(n, 0), col_used_(n, 0) {
  for (std::size_t x = 0; x < n; ++x) {
    cells_[x] = static_cast<int>(x);
    cells_[x * n] = static_cast<int>(x);
    row_used_[0] |= std::uint64_t{1} << x;
    col_used_[0] |= std::uint64_t{1} << x;
    row_used_[x] |= std::uint64_t{1} << x;
    col_used_[x] |= std::uint64_t{1} << x;
  }
}

std::uint64_t SearchState::candidates(std::size_t a, std::size_t b) const {
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return all & ~(row_used_[a] | col_used_[b]);
}

bool SearchState::try_assign(std::size_t a, std::size_t b, int c) {
  ++stats_.nodes;
  const std::uint64_t bit = std::uint64_t{1} << c;
  if (cells_[a * n_ + b] != kUnset || ((row_used_[a] | col_used_[b]) & bit)) return false;
  cells_[a * n_ + b] = c;
  row_used_[a] |= bit;
  col_used_[b] |= bit;
  if (associative_at(a, b)) return true;
  clear(a, b);
  return false;
}

void SearchState::clear(std::size_t a, std::size_t b) {
  const int c = cells_[a * n_ + b];
  if (c == kUnset || a == 0 || b == 0) return;
  const std::uint64_t bit = std::uint64_t{1} << c;
  row_used_[a] &= ~bit;
  col_used_[b] &= ~bit;
  cells_[a * n_ + b] = kUnset;
}

// Checks every triple (x, y, z) in which cell (a, b) is one of the four
// lookups of (xy)z = x(yz) and whose other lookups are already filled.
bool SearchState::associative_at(std::size_t a, std::size_t b) const {
  const std::size_t n = n_;
  auto T = [&](int x, int y) { return (x < 0 || y < 0) ? kUnset : cells_[x * n + y]; };
  const int c = cells_[a * n + b];
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);

  for (int z = 0; z < static_cast<int>(n); ++z) {
    // x = a, y = b: (ab)z = a(bz)
    const int l1 = T(c, z), r1 = T(ia, T(ib, z));
    if (l1 != kUnset && r1 != kUnset && l1 != r1) return false;
    // y = a, z = b (x plays the free role): (xa)b = x(ab)
    const int x = z;
    const int l3 = T(T(x, ia), ib), r3 = T(x, c);
    if (l3 != kUnset && r3 != kUnset && l3 != r3) return false;
  }
  for (int x = 0; x < static_cast<int>(n); ++x)
    for (int y = 0; y < static_cast<int>(n); ++y) {
      const int xy = cells_[x * n + y];
      // xy = a, z = b: (xy)b = x(yb), left side is c
      if (xy == ia) {
        const int r = T(x, T(y, ib));
        if (r != kUnset && r != c) return false;
      }
      // x = a, yz = b with (y, z) = (x, y) here: (ay)z = a(yz), right side is c
      if (xy == ib) {
        const int l = T(T(ia, x), y);
        if (l != kUnset && l != c) return false;
      }
    }
  return true;
}

std::vector<Element> SearchState::table() const {
  std::vector<Element> out(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) out[i] = static_cast<Element>(cells_[i]);
  return out;
}

EnumerationResult enumerate_groups_detailed(std::size_t n, std::size_t cap, Execution exec) {
  check_order(n, cap);
  EnumerationResult result;
  const std::size_t end = (n - 1) * (n - 1);

  if (exec == Execution::Serial) {
    SearchState state(n);
    ClassCollector classes;
    search(state, 0, end, [&](SearchState& s) {
      ++s.stats().solutions;
      classes.offer(s.table(), n);
    });
    result.classes = classes.take(n);
    result.stats = state.stats();
    return result;
  }

  // Subtree roots: every consistent fill of row 1.
  const std::size_t split = n > 1 ? n - 1 : 0;
  SearchState seed(n);
  std::vector<SearchState> roots;
  search(seed, 0, split, [&](SearchState& s) {
    roots.push_back(s);
    roots.back().stats() = {};
  });
  if (split == end) {
    for (auto& r : roots) ++r.stats().solutions;
  }

  std::vector<ClassCollector> local(roots.size());
  const auto count = static_cast<std::int64_t>(roots.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      SearchState& root = roots[i];
      if (split == end) {
        local[i].offer(root.table(), n);
      } else {
        search(root, split, end, [&](SearchState& s) {
          ++s.stats().solutions;
          local[i].offer(s.table(), n);
        });
      }
    } catch (...) {
#pragma omp critical(cyclicity_enumeration_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  ClassCollector merged;
  result.stats = seed.stats();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    merged.merge(std::move(local[i]));
    result.stats += roots[i].stats();
  }
  result.classes = merged.take(n);
  return result;
}

std::vector<FiniteGroup> enumerate_groups(std::size_t n, std::size_t cap, Execution exec) {
  return enumerate_groups_detailed(n, cap, exec).classes;
}

std::size_t count_groups(std::size_t n, std::size_t cap, Execution exec) {
  return enumerate_groups(n, cap, exec).size();
}

}  // namespace cyclicity
