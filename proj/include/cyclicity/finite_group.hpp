#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclicity {

using Element = std::uint32_t;

/// Map on element indices; p[x] is the image of x.
using Permutation = std::vector<Element>;

/// Largest order accepted by default. Validation is exhaustive (O(n^3) for
/// associativity), so construction above the cap is refused outright.
inline constexpr std::size_t kDefaultTableCap = 512;

/// A size or search limit was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A table that is not a group, or an operation given a malformed argument.
class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite group stored as a dense Cayley table. Immutable once built; every
/// instance has passed closure, identity, inverse and associativity checks.
class FiniteGroup {
 public:
  /// `table` is row-major, table[a * order + b] = a * b.
  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
              std::string label = {}, std::size_t cap = kDefaultTableCap);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::string& label() const { return label_; }
  const std::vector<Element>& table() const { return table_; }

  /// Bounds-checked product; throws std::out_of_range.
  Element multiply(Element a, Element b) const;

  /// Unchecked product for inner loops.
  Element operator()(Element a, Element b) const { return table_[a * order_ + b]; }

  Element inverse(Element x) const { return inverses_[x]; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  FiniteGroup with_label(std::string label) const;

  /// Tables and identities equal; labels are ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  Element identity_;
  std::string label_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
};

/// Subset of a parent group closed under product and inverse. Holds the
/// parent's order for sanity checks but not the parent itself; operations
/// take the parent explicitly.
class Subgroup {
 public:
  /// Validates closure under the parent's product; throws InvalidGroup.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<Element> elements);

  /// Skips validation. `elements` must be sorted, unique and closed.
  static Subgroup trusted(std::size_t parent_order, std::vector<Element> elements);

  std::size_t size() const { return elements_.size(); }
  std::size_t parent_order() const { return parent_order_; }
  const std::vector<Element>& elements() const { return elements_; }
  bool contains(Element x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  Subgroup(std::size_t parent_order, std::vector<Element> elements)
      : parent_order_(parent_order), elements_(std::move(elements)) {}

  std::size_t parent_order_;
  std::vector<Element> elements_;
};

}  // namespace cyclicity
