#include "cyclicity/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>

#include "cyclicity/arithmetic.hpp"

namespace cyclicity {
namespace {

void require_within_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": order " + std::to_string(n) + " exceeds table cap " +
                      std::to_string(cap));
}

std::string cyclic_label(std::uint64_t n) { return "Z_" + std::to_string(n); }

bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Element x : p) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace

void Action::validate() const {
  const std::size_t nh = target.order();
  const std::size_t nk = source.order();
  if (images.size() != nk)
    throw InvalidGroup("action: expected " + std::to_string(nk) + " images, got " +
                       std::to_string(images.size()));
  for (std::size_t k = 0; k < nk; ++k) {
    const Permutation& f = images[k];
    if (!is_permutation_of(f, nh))
      throw InvalidGroup("action: image of " + std::to_string(k) + " is not a bijection");
    for (Element a = 0; a < nh; ++a)
      for (Element b = 0; b < nh; ++b)
        if (f[target(a, b)] != target(f[a], f[b]))
          throw InvalidGroup("action: image of " + std::to_string(k) +
                             " is not an automorphism");
  }
  for (Element x = 0; x < nh; ++x)
    if (images[source.identity()][x] != x)
      throw InvalidGroup("action: identity of K does not act trivially");
  for (Element k1 = 0; k1 < nk; ++k1)
    for (Element k2 = 0; k2 < nk; ++k2) {
      const Permutation& composed = images[source(k1, k2)];
      for (Element x = 0; x < nh; ++x)
        if (composed[x] != images[k1][images[k2][x]])
          throw InvalidGroup("action: not a homomorphism at (" + std::to_string(k1) + ", " +
                             std::to_string(k2) + ")");
    }
}

Action Action::trivial(const FiniteGroup& h, const FiniteGroup& k) {
  Permutation id(h.order());
  std::iota(id.begin(), id.end(), Element{0});
  return Action{k, h, std::vector<Permutation>(k.order(), id)};
}

Action Action::from_cyclic_generator(const FiniteGroup& h, std::size_t k_order,
                                     const Permutation& automorphism) {
  if (!is_permutation_of(automorphism, h.order()))
    throw InvalidGroup("action: generator image is not a permutation of H");
  FiniteGroup k = cyclic_group(k_order, k_order);
  std::vector<Permutation> images;
  images.reserve(k_order);
  Permutation power(h.order());
  std::iota(power.begin(), power.end(), Element{0});
  for (std::size_t j = 0; j < k_order; ++j) {
    images.push_back(power);
    Permutation next(h.order());
    for (Element x = 0; x < h.order(); ++x) next[x] = automorphism[power[x]];
    power = std::move(next);
  }
  for (Element x = 0; x < h.order(); ++x)
    if (power[x] != x)
      throw InvalidGroup("action: generator image has order not dividing " +
                         std::to_string(k_order));
  return Action{std::move(k), h, std::move(images)};
}

FiniteGroup cyclic_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidGroup("cyclic_group: n must be >= 1");
  require_within_cap(n, cap, "cyclic_group");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(n, std::move(table), 0, cyclic_label(n), cap);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (ng > cap / nh) throw CapExceeded("direct_product: order exceeds table cap");
  const std::size_t n = ng * nh;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto g1 = static_cast<Element>(x / nh), h1 = static_cast<Element>(x % nh);
    for (std::size_t y = 0; y < n; ++y) {
      const auto g2 = static_cast<Element>(y / nh), h2 = static_cast<Element>(y % nh);
      table[x * n + y] = static_cast<Element>(g(g1, g2) * nh + h(h1, h2));
    }
  }
  const auto identity = static_cast<Element>(g.identity() * nh + h.identity());
  return FiniteGroup(n, std::move(table), identity, g.label() + " x " + h.label(), cap);
}

CyclicAutomorphisms automorphisms_cyclic(std::uint64_t n) {
  if (n == 0) throw InvalidGroup("automorphisms_cyclic: n must be >= 1");
  CyclicAutomorphisms out;
  for (std::uint64_t u = (n == 1 ? 0 : 1); u < std::max<std::uint64_t>(n, 1); ++u) {
    if (std::gcd(u, n) != 1) continue;
    Permutation map(n);
    for (std::uint64_t x = 0; x < n; ++x) map[x] = static_cast<Element>(u * x % n);
    out.units.push_back(u);
    out.maps.push_back(std::move(map));
  }
  out.group_order = out.units.size();
  return out;
}

std::uint64_t unit_of_order(std::uint64_t q, std::uint64_t p) {
  if (!is_prime(p) || !is_prime(q) || (q - 1) % p != 0)
    throw InvalidGroup("unit_of_order: need primes p | q - 1, got p = " + std::to_string(p) +
                       ", q = " + std::to_string(q));
  // u != 1 and u^p = 1 means order exactly p since p is prime.
  for (std::uint64_t u = 2; u < q; ++u)
    if (pow_mod(u, p, q) == 1) return u;
  throw std::logic_error("unit_of_order: no unit found");
}

FiniteGroup semidirect(const FiniteGroup& h, const FiniteGroup& k, const Action& action,
                       std::size_t cap) {
  if (!(action.target == h) || !(action.source == k))
    throw InvalidGroup("semidirect: action does not map K into Aut(H) for the given groups");
  const std::size_t nh = h.order();
  const std::size_t nk = k.order();
  if (nh > cap / nk) throw CapExceeded("semidirect: order exceeds table cap");
  action.validate();

  const std::size_t n = nh * nk;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto h1 = static_cast<Element>(x / nk), k1 = static_cast<Element>(x % nk);
    const Permutation& twist = action.images[k1];
    for (std::size_t y = 0; y < n; ++y) {
      const auto h2 = static_cast<Element>(y / nk), k2 = static_cast<Element>(y % nk);
      table[x * n + y] = static_cast<Element>(h(h1, twist[h2]) * nk + k(k1, k2));
    }
  }
  const auto identity = static_cast<Element>(h.identity() * nk + k.identity());
  FiniteGroup g(n, std::move(table), identity, h.label() + " x| " + k.label(), cap);

  // (h, k)^-1 = (phi(k^-1)(h^-1), k^-1)
  for (std::size_t x = 0; x < n; ++x) {
    const auto h1 = static_cast<Element>(x / nk), k1 = static_cast<Element>(x % nk);
    const Element ki = k.inverse(k1);
    const auto expected = static_cast<Element>(action.images[ki][h.inverse(h1)] * nk + ki);
    if (g.inverse(static_cast<Element>(x)) != expected)
      throw std::logic_error("semidirect: inverse formula disagrees with table");
  }
  return g;
}

FiniteGroup build_nonabelian_pq(std::uint64_t p, std::uint64_t q, std::size_t cap) {
  const std::uint64_t u = unit_of_order(q, p);
  require_within_cap(p * q, cap, "build_nonabelian_pq");
  FiniteGroup zq = cyclic_group(q, cap);
  Permutation scale(q);
  for (std::uint64_t x = 0; x < q; ++x) scale[x] = static_cast<Element>(u * x % q);
  Action action = Action::from_cyclic_generator(zq, p, scale);
  return semidirect(zq, action.source, action, cap);
}

FiniteGroup build_witness(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw InvalidGroup("build_witness: n must be >= 1");
  require_within_cap(n, cap, "build_witness");
  const Obstruction why = obstruction(n);
  if (std::holds_alternative<NoObstruction>(why))
    throw InvalidGroup("build_witness: " + std::to_string(n) +
                       " is a cyclic number; every group of this order is cyclic");
  if (const auto* sq = std::get_if<SquareFactor>(&why))
    return direct_product(cyclic_group(sq->p, cap), cyclic_group(n / sq->p, cap), cap);
  const auto& pair = std::get<DividingPair>(why);
  FiniteGroup core = build_nonabelian_pq(pair.p, pair.q, cap);
  const std::uint64_t rest = n / (pair.p * pair.q);
  FiniteGroup w = direct_product(core, cyclic_group(rest, cap), cap);
  return rest == 1 ? w.with_label(core.label()) : w;
}

}  // namespace cyclicity
