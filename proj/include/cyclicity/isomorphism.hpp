#pragma once

#include <cstddef>
#include <optional>

#include "cyclicity/finite_group.hpp"
#include "cyclicity/group_ops.hpp"

namespace cyclicity {

/// Isomorphism invariants compared before any search.
struct Fingerprint {
  std::size_t order = 0;
  OrderCensus census;
  bool abelian = false;
  std::size_t center_size = 0;
  std::size_t derived_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

/// An isomorphism g -> h as a permutation of indices, if one exists.
/// Fingerprint filter, then backtracking over images of a greedy generating
/// set of g, extending the partial map along the Cayley graph.
std::optional<Permutation> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
std::optional<Permutation> find_isomorphism(const FiniteGroup& g, const Fingerprint& fg,
                                            const FiniteGroup& h, const Fingerprint& fh);

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// The group with element x renamed to perm[x].
FiniteGroup relabel(const FiniteGroup& g, const Permutation& perm);

}  // namespace cyclicity
