#pragma once

// Every group of order 1..12 up to isomorphism, built from standard
// presentations and re-verified when loaded.

#include <sstream>
#include <string>
#include <vector>

#include "bracekit/finite_group.hpp"

namespace bracekit {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

inline constexpr std::size_t kCatalogMaxOrder = 12;

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_verified_cells(n, std::move(cells));
}

/// Index of (a, b) is a * |H| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order(), n = g.order() * m;
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      cells[x * n + y] = static_cast<Element>(g.op(x / m, y / m) * m + h.op(x % m, y % m));
  return FiniteGroup::from_verified_cells(n, std::move(cells));
}

/// Dihedral group of order 2m; r^k has index k, r^k s has index m + k.
inline FiniteGroup dihedral_group(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t k = x % m, l = y % m;
      const bool xs = x >= m, ys = y >= m;
      const std::size_t rot = xs ? (k + m - l) % m : (k + l) % m;
      cells[x * n + y] = static_cast<Element>(rot + ((xs != ys) ? m : 0));
    }
  return FiniteGroup::from_verified_cells(n, std::move(cells));
}

/// Dicyclic group of order 4m: <a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>.
/// a^k has index k, a^k x has index 2m + k.
inline FiniteGroup dicyclic_group(std::size_t m) {
  const std::size_t h = 2 * m, n = 4 * m;
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t k = x % h, l = y % h;
      const bool xs = x >= h, ys = y >= h;
      std::size_t e;
      if (!xs) e = (k + l) % h;
      else if (!ys) e = (k + h - l) % h;
      else e = (k + h - l + m) % h;
      cells[x * n + y] = static_cast<Element>(e + ((xs != ys) ? h : 0));
    }
  return FiniteGroup::from_verified_cells(n, std::move(cells));
}

inline FiniteGroup symmetric_group_3() { return group_from_permutations({{1, 0, 2}, {1, 2, 0}}); }

inline FiniteGroup alternating_group_4() { return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

namespace detail {

inline NamedGroup reverified(std::string name, const FiniteGroup& g) {
  auto checked = verify_group_axioms(g.rows());
  if (!checked) throw std::logic_error("built-in group " + name + " failed verification: " + checked.violation().describe());
  return {std::move(name), std::move(checked).value()};
}

inline std::vector<NamedGroup> build_catalog(std::size_t n) {
  const auto C = [](std::size_t k) { return cyclic_group(k); };
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, const FiniteGroup& g) { out.push_back(reverified(std::move(name), g)); };
  switch (n) {
    case 1: add("C1", C(1)); break;
    case 4: add("C4", C(4)); add("C2 x C2", direct_product(C(2), C(2))); break;
    case 6: add("C6", C(6)); add("S3", symmetric_group_3()); break;
    case 8:
      add("C8", C(8));
      add("C4 x C2", direct_product(C(4), C(2)));
      add("C2 x C2 x C2", direct_product(direct_product(C(2), C(2)), C(2)));
      add("D4", dihedral_group(4));
      add("Q8", dicyclic_group(2));
      break;
    case 9: add("C9", C(9)); add("C3 x C3", direct_product(C(3), C(3))); break;
    case 10: add("C10", C(10)); add("D5", dihedral_group(5)); break;
    case 12:
      add("C12", C(12));
      add("C6 x C2", direct_product(C(6), C(2)));
      add("D6", dihedral_group(6));
      add("A4", alternating_group_4());
      add("Dic3", dicyclic_group(3));
      break;
    case 2: case 3: case 5: case 7: case 11: add("C" + std::to_string(n), C(n)); break;
    default: throw InvalidInput("no built-in groups of order " + std::to_string(n));
  }
  return out;
}

}  // namespace detail

/// All groups of order n (1 <= n <= 12), one per isomorphism class, in a
/// fixed order: cyclic first, then abelian, then nonabelian.
inline const std::vector<NamedGroup>& small_groups(std::size_t n) {
  if (n == 0 || n > kCatalogMaxOrder)
    throw InvalidInput("built-in group table covers orders 1.." + std::to_string(kCatalogMaxOrder));
  static const std::vector<std::vector<NamedGroup>> all = [] {
    std::vector<std::vector<NamedGroup>> v(kCatalogMaxOrder + 1);
    for (std::size_t k = 1; k <= kCatalogMaxOrder; ++k) v[k] = detail::build_catalog(k);
    return v;
  }();
  return all[n];
}

/// Position of g in small_groups(|g|), if the order is covered.
inline std::optional<std::size_t> small_group_index(const FiniteGroup& g) {
  if (g.order() == 0 || g.order() > kCatalogMaxOrder) return std::nullopt;
  const auto& cands = small_groups(g.order());
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (group_isomorphism(g, cands[i].group)) return i;
  return std::nullopt;
}

/// Human-readable identification: catalogue name when available, otherwise
/// abelian invariants or, for nonabelian groups, the element-order profile.
inline std::string identify_group(const FiniteGroup& g) {
  if (auto i = small_group_index(g)) return small_groups(g.order())[*i].name;
  std::ostringstream os;
  if (g.is_abelian()) {
    const auto inv = abelian_invariants(g);
    if (inv.empty()) return "C1";
    for (std::size_t i = 0; i < inv.size(); ++i) os << (i ? " x " : "") << 'C' << inv[i];
    return os.str();
  }
  std::map<std::size_t, std::size_t> profile;
  for (auto o : g.order_profile()) ++profile[o];
  os << "nonabelian order " << g.order() << " profile {";
  bool first = true;
  for (auto [o, c] : profile) {
    os << (first ? "" : ",") << o << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace bracekit
