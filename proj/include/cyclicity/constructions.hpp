#pragma once

// Group constructors: cyclic groups, direct and semidirect products,
// automorphisms of cyclic groups, and non-cyclic witnesses.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclicity/finite_group.hpp"

namespace cyclicity {

/// A homomorphism K -> Aut(H), one automorphism of H per element of K.
/// validate() checks both invariants; semidirect() calls it.
struct Action {
  FiniteGroup source;  // K
  FiniteGroup target;  // H
  std::vector<Permutation> images;

  /// Throws InvalidGroup naming the first failing invariant.
  void validate() const;

  static Action trivial(const FiniteGroup& h, const FiniteGroup& k);

  /// For K = cyclic_group(m): the generator 1 acts by `automorphism`,
  /// element j by its j-th power. Throws InvalidGroup unless
  /// automorphism^m is the identity.
  static Action from_cyclic_generator(const FiniteGroup& h, std::size_t k_order,
                                      const Permutation& automorphism);
};

/// Z_n with table[a][b] = (a + b) mod n. Throws CapExceeded above `cap`.
FiniteGroup cyclic_group(std::size_t n, std::size_t cap = kDefaultTableCap);

/// Pairs (g, h) indexed g * |H| + h with componentwise product.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = kDefaultTableCap);

struct CyclicAutomorphisms {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> units;   // u with x -> u x mod n, ascending
  std::vector<Permutation> maps;      // parallel to units
};

/// Aut(Z_n) as the maps x -> u x mod n for units u.
CyclicAutomorphisms automorphisms_cyclic(std::uint64_t n);

/// Smallest u in [2, q) with multiplicative order exactly p mod q.
/// Requires p, q prime with p | q - 1; throws InvalidGroup otherwise.
std::uint64_t unit_of_order(std::uint64_t q, std::uint64_t p);

/// H x| K with (h1, k1)(h2, k2) = (h1 * phi(k1)(h2), k1 k2), pairs indexed
/// h * |K| + k.
FiniteGroup semidirect(const FiniteGroup& h, const FiniteGroup& k, const Action& action,
                       std::size_t cap = kDefaultTableCap);

/// Z_q x| Z_p with the generator of Z_p acting as x -> unit_of_order(q, p) x.
FiniteGroup build_nonabelian_pq(std::uint64_t p, std::uint64_t q,
                                std::size_t cap = kDefaultTableCap);

/// A non-cyclic group of order n. Throws InvalidGroup if n is a cyclic number.
FiniteGroup build_witness(std::uint64_t n, std::size_t cap = kDefaultTableCap);

}  // namespace cyclicity
