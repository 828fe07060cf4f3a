#pragma once

// Finite set-theoretic solutions of the Yang-Baxter equation.
// r(x, y) = (sigma[x][y], tau[y][x]).

#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/errors.hpp"

namespace bracekit {

inline constexpr std::size_t kDefaultPermutationBound = 1'000'000;

struct SetSolution {
  std::size_t size = 0;
  std::vector<Element> sigma;  // sigma[x * size + y] = sigma_x(y)
  std::vector<Element> tau;    // tau[y * size + x] = tau_y(x)

  Element s(Element x, Element y) const { return sigma[x * size + y]; }
  Element t(Element y, Element x) const { return tau[y * size + x]; }
  std::pair<Element, Element> r(Element x, Element y) const { return {s(x, y), t(y, x)}; }

  bool operator==(const SetSolution&) const = default;
};

/// Builds a solution from nested tables; throws InvalidInput when malformed.
inline SetSolution make_solution(const Table2D& sigma, const Table2D& tau) {
  const std::size_t n = sigma.size();
  auto flat = [n](const Table2D& t, const char* what) {
    if (t.size() != n) throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) + " rows");
    std::vector<Element> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i].size() != n)
        throw InvalidInput(std::string(what) + ": row " + std::to_string(i) + " has " + std::to_string(t[i].size()) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        if (t[i][j] >= n)
          throw InvalidInput(std::string(what) + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        out.push_back(t[i][j]);
      }
    }
    return out;
  };
  return {n, flat(sigma, "sigma"), flat(tau, "tau")};
}

inline Table2D sigma_rows(const SetSolution& s) {
  Table2D t(s.size, std::vector<Element>(s.size));
  for (Element x = 0; x < s.size; ++x)
    for (Element y = 0; y < s.size; ++y) t[x][y] = s.s(x, y);
  return t;
}

inline Table2D tau_rows(const SetSolution& s) {
  Table2D t(s.size, std::vector<Element>(s.size));
  for (Element y = 0; y < s.size; ++y)
    for (Element x = 0; x < s.size; ++x) t[y][x] = s.t(y, x);
  return t;
}

inline SetSolution flip_solution(std::size_t n) {
  SetSolution s{n, std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      s.sigma[x * n + y] = y;
      s.tau[y * n + x] = x;
    }
  return s;
}

struct SolutionReport {
  bool is_bijective = false;
  bool is_ybe = false;
  bool is_nondegenerate = false;
  bool is_involutive = false;
  std::optional<Violation> bijective_witness;     // two pairs with the same image
  std::optional<Violation> ybe_witness;           // triple (x, y, z)
  std::optional<Violation> nondegenerate_witness; // which map and its index
  std::optional<Violation> involutive_witness;    // pair (x, y)
};

namespace detail {

inline bool row_is_permutation(const std::vector<Element>& flat, std::size_t n, std::size_t row) {
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const Element v = flat[row * n + j];
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline void check_well_formed(const SetSolution& s) {
  const std::size_t n = s.size;
  if (s.sigma.size() != n * n || s.tau.size() != n * n) throw InvalidInput("solution tables have the wrong shape");
  for (auto v : s.sigma)
    if (v >= n) throw InvalidInput("sigma entry out of range");
  for (auto v : s.tau)
    if (v >= n) throw InvalidInput("tau entry out of range");
}

}  // namespace detail

inline SolutionReport check_solution(const SetSolution& s) {
  detail::check_well_formed(s);
  const std::size_t n = s.size;
  SolutionReport rep;

  rep.is_bijective = true;
  std::vector<std::pair<Element, Element>> preimage(n * n, {kNoElement, kNoElement});
  for (Element x = 0; x < n && rep.is_bijective; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto [u, v] = s.r(x, y);
      auto& slot = preimage[u * n + v];
      if (slot.first != kNoElement) {
        rep.is_bijective = false;
        rep.bijective_witness = Violation{"not-bijective", {slot.first, slot.second, x, y}, "r identifies two pairs"};
        break;
      }
      slot = {x, y};
    }

  rep.is_ybe = true;
  for (Element x = 0; x < n && rep.is_ybe; ++x)
    for (Element y = 0; y < n && rep.is_ybe; ++y)
      for (Element z = 0; z < n; ++z) {
        // r1 r2 r1
        auto [a1, b1] = s.r(x, y);
        auto [b2, c2] = s.r(b1, z);
        auto [a3, b3] = s.r(a1, b2);
        // r2 r1 r2
        auto [q1, w1] = s.r(y, z);
        auto [p2, q2] = s.r(x, q1);
        auto [q3, w3] = s.r(q2, w1);
        if (a3 != p2 || b3 != q3 || c2 != w3) {
          rep.is_ybe = false;
          rep.ybe_witness = Violation{"braid", {x, y, z}, "r1 r2 r1 differs from r2 r1 r2"};
          break;
        }
      }

  rep.is_nondegenerate = true;
  for (Element x = 0; x < n; ++x) {
    if (!detail::row_is_permutation(s.sigma, n, x)) {
      rep.is_nondegenerate = false;
      rep.nondegenerate_witness = Violation{"sigma-not-bijective", {x}, "sigma_x is not a bijection"};
      break;
    }
    if (!detail::row_is_permutation(s.tau, n, x)) {
      rep.is_nondegenerate = false;
      rep.nondegenerate_witness = Violation{"tau-not-bijective", {x}, "tau_y is not a bijection"};
      break;
    }
  }

  rep.is_involutive = true;
  for (Element x = 0; x < n && rep.is_involutive; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::pair{x, y}) {
        rep.is_involutive = false;
        rep.involutive_witness = Violation{"not-involutive", {x, y}, "r^2(x,y) != (x,y)"};
        break;
      }
    }
  return rep;
}

/// r_A(a, b) = (lambda_a(b), lambda_a(b)' o a o b), where ' is the circle inverse.
inline SetSolution solution_from_brace(const SkewBrace& a) {
  const std::size_t n = a.order();
  SetSolution s{n, std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element l = a.lambda(x, y);
      s.sigma[x * n + y] = l;
      s.tau[y * n + x] = a.circ(a.circ_inv(l), a.circ(x, y));
    }
  return s;
}

/// y |> x = sigma_y(tau_{sigma_x^-1(y)}(x)); the derived solution is
/// (x, y) -> (y, y |> x).
inline SetSolution derived_solution(const SetSolution& s) {
  detail::check_well_formed(s);
  const std::size_t n = s.size;
  for (Element x = 0; x < n; ++x)
    if (!detail::row_is_permutation(s.sigma, n, x) || !detail::row_is_permutation(s.tau, n, x))
      throw InvalidInput("derived_solution: solution is degenerate at " + std::to_string(x));
  std::vector<Element> sigma_inv(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) sigma_inv[x * n + s.s(x, y)] = y;
  SetSolution d{n, std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      d.sigma[x * n + y] = y;
      d.tau[y * n + x] = s.s(y, s.t(sigma_inv[x * n + y], x));
    }
  return d;
}

inline bool is_derived_form(const SetSolution& s) {
  for (Element x = 0; x < s.size; ++x)
    for (Element y = 0; y < s.size; ++y)
      if (s.s(x, y) != y) return false;
  return true;
}

/// x |> x = x for all x; the operation is read from tau.
inline bool is_quandle(const SetSolution& s) {
  detail::check_well_formed(s);
  if (!is_derived_form(s)) throw InvalidInput("is_quandle: solution is not of derived form (y, y |> x)");
  for (Element x = 0; x < s.size; ++x)
    if (s.t(x, x) != x) return false;
  return true;
}

using Partition = std::vector<std::vector<Element>>;

namespace detail {

struct UnionFind {
  std::vector<Element> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }
  Element find(Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Partition blocks() {
    std::vector<std::vector<Element>> by_root(parent.size());
    for (Element x = 0; x < parent.size(); ++x) by_root[find(x)].push_back(x);
    Partition out;
    for (auto& b : by_root)
      if (!b.empty()) out.push_back(std::move(b));
    return out;
  }
};

// Orbits of the group generated by permutations given as rows of a flat table.
inline Partition orbits_of_rows(std::size_t n, const std::vector<const std::vector<Element>*>& tables) {
  UnionFind uf(n);
  for (const auto* t : tables)
    for (std::size_t row = 0; row < n; ++row)
      for (Element x = 0; x < n; ++x) uf.unite(x, (*t)[row * n + x]);
  return uf.blocks();
}

}  // namespace detail

struct Indecomposability {
  bool indecomposable = false;
  Partition orbits;
};

/// Orbits of the group generated by the maps x -> y |> x.
inline Indecomposability is_indecomposable_derived(const SetSolution& s) {
  detail::check_well_formed(s);
  if (!is_derived_form(s)) throw InvalidInput("is_indecomposable_derived: solution is not of derived form");
  Indecomposability r;
  r.orbits = detail::orbits_of_rows(s.size, {&s.tau});
  r.indecomposable = r.orbits.size() <= 1;
  return r;
}

using Permutation = std::vector<Element>;

struct PermutationGroupSummary {
  std::size_t order = 1;
  std::vector<Permutation> generators;  // distinct non-identity sigma_x, sorted
  Partition orbits;
};

namespace detail {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// Breadth-first closure of {sigma_x}; throws BoundExceeded past `bound` elements.
inline PermutationGroupSummary permutation_group(const SetSolution& s, std::size_t bound = kDefaultPermutationBound) {
  detail::check_well_formed(s);
  const std::size_t n = s.size;
  PermutationGroupSummary g;
  Permutation id(n);
  std::iota(id.begin(), id.end(), Element{0});
  for (Element x = 0; x < n; ++x) {
    if (!detail::row_is_permutation(s.sigma, n, x))
      throw InvalidInput("permutation_group: sigma_" + std::to_string(x) + " is not a bijection");
    Permutation p(s.sigma.begin() + x * n, s.sigma.begin() + (x + 1) * n);
    if (p != id) g.generators.push_back(std::move(p));
  }
  std::sort(g.generators.begin(), g.generators.end());
  g.generators.erase(std::unique(g.generators.begin(), g.generators.end()), g.generators.end());

  std::unordered_set<Permutation, detail::PermutationHash> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& gen : g.generators) {
        Permutation q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = gen[p[i]];
        if (seen.insert(q).second) {
          if (seen.size() > bound)
            throw BoundExceeded("permutation_group: closure exceeds " + std::to_string(bound) + " elements");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  g.order = seen.size();
  g.orbits = detail::orbits_of_rows(n, {&s.sigma});
  return g;
}

/// Orbits of the group generated by all sigma_x and tau_y.
inline Partition solution_orbits(const SetSolution& s) {
  detail::check_well_formed(s);
  return detail::orbits_of_rows(s.size, {&s.sigma, &s.tau});
}

inline bool is_trivial_solution(const SetSolution& s) { return s == flip_solution(s.size); }

}  // namespace bracekit
