#pragma once

// Structural queries on explicit finite groups.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cyclicity/finite_group.hpp"

namespace cyclicity {

/// Element order -> number of elements with that order.
using OrderCensus = std::map<std::size_t, std::size_t>;

std::size_t element_order(const FiniteGroup& g, Element x);
OrderCensus order_census(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

/// Smallest subgroup containing `gens` (worklist closure).
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);

/// The set x S x^-1, as a subgroup.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, Element x);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// Subgroup of g generated by all commutators of elements of s.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& s);
Subgroup derived_subgroup(const FiniteGroup& g);

/// [G, G', G'', ...] stopping at the first repeat; the repeat is not appended.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

/// Group of cosets of normal n. Cosets are indexed by their minimal element,
/// ascending. Throws InvalidGroup if n is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

/// A Sylow p-subgroup. Throws InvalidGroup if p is not a prime dividing |g|.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

/// Number of distinct conjugates x S x^-1.
std::size_t count_conjugates(const FiniteGroup& g, const Subgroup& s);

}  // namespace cyclicity
