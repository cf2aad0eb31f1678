#include "cyclicity/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cyclicity {
namespace {

constexpr Element kUnmapped = static_cast<Element>(-1);

std::vector<Element> greedy_generators(const FiniteGroup& g, const std::vector<std::size_t>& ord) {
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup(g);
  while (current.size() < g.order()) {
    Element best = 0;
    std::size_t best_order = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (!current.contains(x) && ord[x] > best_order) {
        best = x;
        best_order = ord[x];
      }
    gens.push_back(best);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<std::size_t> all_orders(const FiniteGroup& g) {
  std::vector<std::size_t> ord(g.order());
  for (Element x = 0; x < g.order(); ++x) ord[x] = element_order(g, x);
  return ord;
}

}  // namespace

Fingerprint fingerprint(const FiniteGroup& g) {
  return {g.order(), order_census(g), is_abelian(g), center(g).size(), derived_subgroup(g).size()};
}

std::optional<Permutation> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, fingerprint(g), h, fingerprint(h));
}

std::optional<Permutation> find_isomorphism(const FiniteGroup& g, const Fingerprint& fg,
                                            const FiniteGroup& h, const Fingerprint& fh) {
  if (!(fg == fh)) return std::nullopt;
  const std::size_t n = g.order();
  const auto ord_g = all_orders(g);
  const auto ord_h = all_orders(h);
  const auto gens = greedy_generators(g, ord_g);

  std::vector<Element> images(gens.size(), kUnmapped);
  Permutation phi(n);
  std::vector<char> used(n);

  // Rebuild phi on <gens[0..count)> from the chosen images; false on any
  // clash (two words for one element disagree, or two elements collide).
  auto extend = [&](std::size_t count) {
    std::fill(phi.begin(), phi.end(), kUnmapped);
    std::fill(used.begin(), used.end(), 0);
    phi[g.identity()] = h.identity();
    used[h.identity()] = 1;
    std::vector<Element> work{g.identity()};
    while (!work.empty()) {
      const Element x = work.back();
      work.pop_back();
      for (std::size_t j = 0; j < count; ++j) {
        const Element y = g(x, gens[j]);
        const Element iy = h(phi[x], images[j]);
        if (phi[y] == kUnmapped) {
          if (used[iy]) return false;
          phi[y] = iy;
          used[iy] = 1;
          work.push_back(y);
        } else if (phi[y] != iy) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return true;
    for (Element cand = 0; cand < n; ++cand) {
      if (ord_h[cand] != ord_g[gens[i]]) continue;
      if (std::find(images.begin(), images.begin() + i, cand) != images.begin() + i) continue;
      images[i] = cand;
      if (extend(i + 1) && search(i + 1)) return true;
    }
    images[i] = kUnmapped;
    return false;
  };

  if (!search(0)) return std::nullopt;
  extend(gens.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (phi[g(a, b)] != h(phi[a], phi[b]))
        throw std::logic_error("find_isomorphism: extension is not a homomorphism");
  return phi;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

FiniteGroup relabel(const FiniteGroup& g, const Permutation& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InvalidGroup("relabel: permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (Element x : perm) {
    if (x >= n || hit[x]) throw InvalidGroup("relabel: not a permutation");
    hit[x] = 1;
  }
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[perm[a] * n + perm[b]] = perm[g(a, b)];
  return FiniteGroup(n, std::move(table), perm[g.identity()], g.label(), std::max(n, kDefaultTableCap));
}

}  // namespace cyclicity
