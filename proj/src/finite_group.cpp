#include "cyclicity/finite_group.hpp"

#include <algorithm>
#include <string>

#include "cyclicity/kernels.hpp"

namespace cyclicity {
namespace {

std::string describe(const std::string& label) {
  return label.empty() ? std::string("group") : "group '" + label + "'";
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
                         std::string label, std::size_t cap)
    : order_(order), identity_(identity), label_(std::move(label)), table_(std::move(table)) {
  const std::string who = describe(label_);
  if (order_ == 0) throw InvalidGroup(who + ": order must be >= 1");
  if (order_ > cap)
    throw CapExceeded(who + ": order " + std::to_string(order_) + " exceeds table cap " +
                      std::to_string(cap));
  if (table_.size() != order_ * order_)
    throw InvalidGroup(who + ": table has " + std::to_string(table_.size()) +
                       " entries, expected " + std::to_string(order_ * order_));
  if (identity_ >= order_) throw InvalidGroup(who + ": identity index out of range");

  if (std::any_of(table_.begin(), table_.end(), [&](Element e) { return e >= order_; }))
    throw InvalidGroup(who + ": table entry out of range (closure)");

  for (Element x = 0; x < order_; ++x)
    if ((*this)(identity_, x) != x || (*this)(x, identity_) != x)
      throw InvalidGroup(who + ": identity law fails at element " + std::to_string(x));

  inverses_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    const auto r = row(x);
    const auto it = std::find(r.begin(), r.end(), identity_);
    if (it == r.end()) throw InvalidGroup(who + ": element " + std::to_string(x) + " has no inverse");
    const auto y = static_cast<Element>(it - r.begin());
    if ((*this)(y, x) != identity_)
      throw InvalidGroup(who + ": element " + std::to_string(x) + " has no two-sided inverse");
    inverses_[x] = y;
  }

  if (auto v = kernels::find_associativity_violation_parallel(table_, order_))
    throw InvalidGroup(who + ": associativity fails at (" + std::to_string(v->a) + ", " +
                       std::to_string(v->b) + ", " + std::to_string(v->c) + ")");
}

Element FiniteGroup::multiply(Element a, Element b) const {
  if (a >= order_ || b >= order_) throw std::out_of_range("multiply: element index out of range");
  return (*this)(a, b);
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw InvalidGroup("subgroup: empty element set");
  if (elements.back() >= parent.order()) throw InvalidGroup("subgroup: element out of range");
  Subgroup s(parent.order(), std::move(elements));
  if (!s.contains(parent.identity())) throw InvalidGroup("subgroup: identity missing");
  for (Element a : s.elements_) {
    if (!s.contains(parent.inverse(a))) throw InvalidGroup("subgroup: not closed under inverse");
    for (Element b : s.elements_)
      if (!s.contains(parent(a, b))) throw InvalidGroup("subgroup: not closed under product");
  }
  if (parent.order() % s.size() != 0) throw InvalidGroup("subgroup: size does not divide order");
  return s;
}

Subgroup Subgroup::trusted(std::size_t parent_order, std::vector<Element> elements) {
  return Subgroup(parent_order, std::move(elements));
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

}  // namespace cyclicity
