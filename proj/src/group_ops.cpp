#include "cyclicity/group_ops.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "cyclicity/arithmetic.hpp"

namespace cyclicity {
namespace {

void check_element(const FiniteGroup& g, Element x, const char* what) {
  if (x >= g.order()) throw std::out_of_range(std::string(what) + ": element index out of range");
}

void check_parent(const FiniteGroup& g, const Subgroup& s, const char* what) {
  if (s.parent_order() != g.order())
    throw InvalidGroup(std::string(what) + ": subgroup belongs to a group of different order");
}

// Closure of `seed` (a subgroup, sorted) extended by `gens`.
std::vector<Element> close_under(const FiniteGroup& g, std::vector<Element> seed,
                                 const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members;
  std::vector<Element> work;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  add(g.identity());
  for (Element x : seed) add(x);
  for (Element x : gens) add(x);
  // Finite group: closure under products with the generators suffices.
  std::vector<Element> generators = members;
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    for (Element s : generators) add(g(x, s));
  }
  std::sort(members.begin(), members.end());
  return members;
}

Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g(g(a, b), g(g.inverse(a), g.inverse(b)));
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::size_t element_order(const FiniteGroup& g, Element x) {
  check_element(g, x, "element_order");
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g(y, x)) ++k;
  return k;
}

OrderCensus order_census(const FiniteGroup& g) {
  OrderCensus census;
  for (Element x = 0; x < g.order(); ++x) ++census[element_order(g, x)];
  return census;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g(a, b) != g(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (Element x : gens) check_element(g, x, "subgroup_generated");
  return Subgroup::trusted(g.order(), close_under(g, {}, gens));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup::trusted(g.order(), std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup::trusted(g.order(), {g.identity()});
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g(a, b) == g(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup::trusted(g.order(), std::move(z));
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, Element x) {
  check_parent(g, s, "conjugate");
  check_element(g, x, "conjugate");
  std::vector<Element> out;
  out.reserve(s.size());
  const Element xi = g.inverse(x);
  for (Element e : s.elements()) out.push_back(g(g(x, e), xi));
  std::sort(out.begin(), out.end());
  return Subgroup::trusted(g.order(), std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  check_parent(g, s, "is_normal");
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inverse(x);
    for (Element e : s.elements())
      if (!s.contains(g(g(x, e), xi))) return false;
  }
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& s) {
  check_parent(g, s, "commutator_subgroup");
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> gens;
  for (Element a : s.elements())
    for (Element b : s.elements()) {
      const Element c = commutator(g, a, b);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return Subgroup::trusted(g.order(), close_under(g, {}, gens));
}

Subgroup derived_subgroup(const FiniteGroup& g) { return commutator_subgroup(g, whole_group(g)); }

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  check_parent(g, n, "quotient");
  if (!is_normal(g, n)) throw InvalidGroup("quotient: subgroup is not normal");

  // Coset of x is x N; label it by its minimal element, then rank the labels.
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> rep(g.order(), kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (rep[x] != kUnset) continue;
    for (Element e : n.elements()) rep[g(x, e)] = x;
    reps.push_back(x);
  }
  std::vector<Element> index_of(g.order());
  for (Element i = 0; i < reps.size(); ++i) index_of[reps[i]] = i;
  auto coset = [&](Element x) { return index_of[rep[x]]; };

  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset(g(reps[i], reps[j]));

  std::string label = g.label().empty() ? std::string() : "(" + g.label() + ")/N";
  return FiniteGroup(m, std::move(table), coset(g.identity()), std::move(label), g.order());
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw InvalidGroup("sylow_subgroup: " + std::to_string(p) + " is not a prime dividing " +
                       std::to_string(g.order()));
  const std::uint64_t target = prime_part(g.order(), p);

  std::vector<Element> p_elements;
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t k = element_order(g, x);
    if (k > 1 && is_power_of(k, p)) p_elements.push_back(x);
  }

  if (target == p) return subgroup_generated(g, {p_elements.front()});

  // Grow p-subgroups one p-element at a time; backtrack when the closure
  // stops being a p-group. Visited subgroups are memoized.
  std::set<std::vector<Element>> visited;
  std::function<std::optional<Subgroup>(const std::vector<Element>&)> grow =
      [&](const std::vector<Element>& current) -> std::optional<Subgroup> {
    if (current.size() == target) return Subgroup::trusted(g.order(), current);
    if (!visited.insert(current).second) return std::nullopt;
    for (Element x : p_elements) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<Element> next = close_under(g, current, {x});
      if (!is_power_of(next.size(), p) || target % next.size() != 0) continue;
      if (auto found = grow(next)) return found;
    }
    return std::nullopt;
  };
  if (auto found = grow({g.identity()})) return *found;
  throw InvalidGroup("sylow_subgroup: search failed (table is not a group?)");
}

std::size_t count_conjugates(const FiniteGroup& g, const Subgroup& s) {
  check_parent(g, s, "count_conjugates");
  std::set<std::vector<Element>> seen;
  for (Element x = 0; x < g.order(); ++x) seen.insert(conjugate(g, s, x).elements());
  return seen.size();
}

}  // namespace cyclicity
