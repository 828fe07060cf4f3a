#pragma once

// Finite groups as explicit operation tables over 0..n-1 with the identity
// normalized to 0, plus the subgroup machinery the brace modules build on.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "bracekit/element_set.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/morphism.hpp"

namespace bracekit {

using Table2D = std::vector<std::vector<Element>>;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Wraps a table already known to satisfy the group axioms with identity 0.
  /// Untrusted input goes through verify_group_axioms instead.
  static FiniteGroup from_verified_cells(std::size_t n, std::vector<Element> cells) {
    FiniteGroup g;
    g.n_ = n;
    g.cells_ = std::move(cells);
    g.inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (g.op(a, b) == 0) g.inverse_[a] = b;
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  Element op(Element a, Element b) const { return cells_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& cells() const noexcept { return cells_; }
  detail::TableRef ref() const { return {&cells_, n_}; }

  Table2D rows() const {
    Table2D t(n_, std::vector<Element>(n_));
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) t[a][b] = op(a, b);
    return t;
  }

  bool is_abelian() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  /// a^k under the group operation.
  Element power(Element a, std::size_t k) const {
    Element r = 0;
    for (std::size_t i = 0; i < k; ++i) r = op(r, a);
    return r;
  }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = op(x, a)) ++k;
    return k;
  }

  /// a b a^-1 b^-1; in additive notation a + b - a - b.
  Element commutator(Element a, Element b) const { return op(op(a, b), op(inverse(a), inverse(b))); }

  /// Sorted multiset of element orders.
  std::vector<std::size_t> order_profile() const {
    std::vector<std::size_t> p(n_);
    for (Element a = 0; a < n_; ++a) p[a] = element_order(a);
    std::sort(p.begin(), p.end());
    return p;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.cells_ == b.cells_; }

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> inverse_;
};

struct Subgroup {
  ElementSet members;
  std::size_t parent_order = 0;

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const { return members.contains(x); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

// ---------------------------------------------------------------------------
// Table ingestion

namespace detail {

inline std::vector<Element> flatten(const Table2D& t) {
  std::vector<Element> out;
  out.reserve(t.size() * t.size());
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

/// Checks shape and entry range; empty optional when well formed.
inline std::optional<Violation> check_shape(const Table2D& t) {
  const std::size_t n = t.size();
  if (n == 0) return Violation{"malformed", {}, "table is empty"};
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n)
      return Violation{"malformed", {static_cast<Element>(r)},
                       "row " + std::to_string(r) + " has " + std::to_string(t[r].size()) + " entries, expected " +
                           std::to_string(n)};
    for (std::size_t c = 0; c < n; ++c)
      if (t[r][c] >= n)
        return Violation{"malformed", {static_cast<Element>(r), static_cast<Element>(c)},
                         "entry at row " + std::to_string(r) + ", column " + std::to_string(c) + " is out of range"};
  }
  return std::nullopt;
}

/// Index e with e*x = x*e = x for all x, if any.
inline std::optional<Element> find_identity(const std::vector<Element>& cells, std::size_t n) {
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = cells[e * n + x] == x && cells[x * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

/// Relabels a table through the bijection perm (old index -> new index).
inline std::vector<Element> relabel(const std::vector<Element>& cells, std::size_t n,
                                    const std::vector<Element>& perm) {
  std::vector<Element> out(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out[perm[a] * n + perm[b]] = perm[cells[a * n + b]];
  return out;
}

inline std::vector<Element> swap_permutation(std::size_t n, Element i, Element j) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::swap(p[i], p[j]);
  return p;
}

/// Group axioms on a table whose identity is already 0.
inline std::optional<Violation> check_axioms_identity_zero(const std::vector<Element>& c, std::size_t n) {
  for (Element a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < n && !has_inverse; ++b) has_inverse = c[a * n + b] == 0 && c[b * n + a] == 0;
    if (!has_inverse) return Violation{"no-inverse", {a}, "element " + std::to_string(a) + " has no two-sided inverse"};
  }
  for (Element a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (Element b = 0; b < n; ++b) {
      if (row[c[a * n + b]]++)
        return Violation{"not-latin", {a, b}, "row " + std::to_string(a) + " repeats a value at column " + std::to_string(b)};
      if (col[c[b * n + a]]++)
        return Violation{"not-latin", {b, a}, "column " + std::to_string(a) + " repeats a value at row " + std::to_string(b)};
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element d = 0; d < n; ++d)
        if (c[c[a * n + b] * n + d] != c[a * n + c[b * n + d]])
          return Violation{"not-associative", {a, b, d}, "(ab)c != a(bc)"};
  return std::nullopt;
}

}  // namespace detail

/// Validates a raw table. On success the returned group has its identity
/// relabelled to 0 (by swapping the identity's label with 0).
inline Checked<FiniteGroup> verify_group_axioms(const Table2D& table) {
  if (auto v = detail::check_shape(table)) return *v;
  const std::size_t n = table.size();
  auto cells = detail::flatten(table);
  auto e = detail::find_identity(cells, n);
  if (!e) return Violation{"no-identity", {}, "no element acts as a two-sided identity"};
  if (*e != 0) cells = detail::relabel(cells, n, detail::swap_permutation(n, 0, *e));
  if (auto v = detail::check_axioms_identity_zero(cells, n)) return *v;
  return FiniteGroup::from_verified_cells(n, std::move(cells));
}

/// Builds the group generated by permutations of {0..m-1}. Elements are
/// indexed in lexicographic order of their images (identity first); the
/// product is composition p*q = p after q.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<Element>>& generators) {
  if (generators.empty()) return FiniteGroup::from_verified_cells(1, {0});
  const std::size_t m = generators.front().size();
  std::vector<Element> id(m);
  std::iota(id.begin(), id.end(), Element{0});
  auto compose = [m](const std::vector<Element>& p, const std::vector<Element>& q) {
    std::vector<Element> r(m);
    for (std::size_t x = 0; x < m; ++x) r[x] = p[q[x]];
    return r;
  };
  std::set<std::vector<Element>> seen{id};
  std::vector<std::vector<Element>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        auto q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<Element>> elems(seen.begin(), seen.end());
  std::map<std::vector<Element>, Element> index;
  for (Element i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const std::size_t n = elems.size();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[a * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup::from_verified_cells(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// Subgroups

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  for (auto a : s) {
    if (!s.contains(g.inverse(a))) return false;
    for (auto b : s)
      if (!s.contains(g.op(a, b))) return false;
  }
  return true;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Element x = 0; x < g.order(); ++x)
    for (auto a : s)
      if (!s.contains(g.op(g.op(x, a), g.inverse(x)))) return false;
  return true;
}

namespace detail {

// Worklist closure: every new member is multiplied against all members (both
// sides); with `normal` set it is also conjugated by every group element.
inline ElementSet closure(const FiniteGroup& g, const ElementSet& seed, bool normal) {
  const std::size_t n = g.order();
  ElementSet members(n, {0});
  std::vector<Element> list{0}, work;
  auto add = [&](Element x) {
    if (members.insert(x)) {
      list.push_back(x);
      work.push_back(x);
    }
  };
  for (auto s : seed) add(s);
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    add(g.inverse(x));
    if (normal)
      for (Element y = 0; y < n; ++y) add(g.op(g.op(y, x), g.inverse(y)));
    for (std::size_t i = 0; i < list.size(); ++i) {
      add(g.op(x, list[i]));
      add(g.op(list[i], x));
    }
  }
  return members;
}

}  // namespace detail

inline Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& s) {
  return {detail::closure(g, s, false), g.order()};
}

inline Subgroup normal_closure(const FiniteGroup& g, const ElementSet& s) {
  return {detail::closure(g, s, true), g.order()};
}

inline Subgroup center(const FiniteGroup& g) {
  ElementSet c(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) c.insert(a);
  }
  return {c, g.order()};
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
  ElementSet comms(g.order(), {0});
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  return subgroup_closure(g, comms);
}

/// Conjugacy classes, ordered by smallest member.
inline std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementSet> classes;
  ElementSet seen(n);
  for (Element a = 0; a < n; ++a) {
    if (seen.contains(a)) continue;
    ElementSet cls(n);
    for (Element x = 0; x < n; ++x) cls.insert(g.op(g.op(x, a), g.inverse(x)));
    seen |= cls;
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace detail {

// Joins closed under adding one seed at a time, starting from {0}. Every
// closure of a subset of seeds is reached, which for normal closures of class
// representatives is every normal subgroup.
inline std::vector<ElementSet> join_closures(const FiniteGroup& g, const std::vector<Element>& seeds, bool normal) {
  const std::size_t n = g.order();
  std::vector<ElementSet> out{ElementSet(n, {0})};
  std::unordered_set<ElementSet, ElementSetHash> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : seeds) {
      if (out[i].contains(s)) continue;
      ElementSet seed = out[i];
      seed.insert(s);
      ElementSet c = closure(g, seed, normal);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Every normal subgroup, sorted by size then members.
inline std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& g, std::size_t bound = kDefaultLatticeBound) {
  require_bound(g.order(), bound, "all_normal_subgroups");
  std::vector<Element> reps;
  for (const auto& cls : conjugacy_classes(g)) reps.push_back(*cls.begin());
  std::vector<Subgroup> out;
  for (auto& s : detail::join_closures(g, reps, true)) out.push_back({std::move(s), g.order()});
  return out;
}

/// Every subgroup, sorted by size then members.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t bound = kDefaultLatticeBound) {
  require_bound(g.order(), bound, "all_subgroups");
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<Subgroup> out;
  for (auto& s : detail::join_closures(g, all, false)) out.push_back({std::move(s), g.order()});
  return out;
}

/// Intersection of all maximal subgroups (the whole group when trivial).
inline Subgroup frattini_subgroup(const FiniteGroup& g, std::size_t bound = kDefaultLatticeBound) {
  const auto subs = all_subgroups(g, bound);
  ElementSet phi = ElementSet::full(g.order());
  for (const auto& h : subs) {
    if (h.members.is_full()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (!k.members.is_full() && k.members != h.members && h.members.subset_of(k.members)) maximal = false;
    if (maximal) phi &= h.members;
  }
  return {phi, g.order()};
}

// ---------------------------------------------------------------------------
// Generating sets and automorphisms

/// A small generating set, chosen greedily: repeatedly add the element that
/// enlarges the generated subgroup most (ties to the smallest index).
inline std::vector<Element> generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> gens;
  ElementSet span(n, {0});
  while (span.size() < n) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 0; x < n; ++x) {
      if (span.contains(x)) continue;
      ElementSet seed = span;
      seed.insert(x);
      const std::size_t sz = subgroup_closure(g, seed).size();
      if (sz > best_size) {
        best = x;
        best_size = sz;
      }
    }
    gens.push_back(best);
    span.insert(best);
    span = subgroup_closure(g, span).members;
  }
  return gens;
}

namespace detail {
inline std::vector<std::uint64_t> order_signature(const FiniteGroup& g) {
  std::vector<std::uint64_t> s(g.order());
  for (Element a = 0; a < g.order(); ++a) s[a] = g.element_order(a);
  return s;
}
}  // namespace detail

/// All automorphisms, sorted lexicographically by image array.
inline std::vector<BraceMorphism> automorphism_group(const FiniteGroup& g, std::size_t bound = kDefaultLatticeBound) {
  require_bound(g.order(), bound, "automorphism_group");
  const auto sig = detail::order_signature(g);
  const detail::TableRef t[] = {g.ref()};
  std::vector<BraceMorphism> out;
  detail::IsomorphismSearch search(t, t, generating_set(g), sig, sig);
  search.run([&](const std::vector<Element>& f) {
    out.push_back({f, g.order(), g.order(), true});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<BraceMorphism> group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.order_profile() != b.order_profile()) return std::nullopt;
  const auto sa = detail::order_signature(a), sb = detail::order_signature(b);
  const detail::TableRef ta[] = {a.ref()}, tb[] = {b.ref()};
  std::optional<BraceMorphism> found;
  detail::IsomorphismSearch search(ta, tb, generating_set(a), sa, sb);
  search.run([&](const std::vector<Element>& f) {
    found = BraceMorphism{f, a.order(), b.order(), true};
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Element> projection;  // element -> coset label
};

/// Cosets are labelled in order of their smallest member, so the label of
/// N itself is 0.
inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& normal) {
  if (!is_normal_subgroup(g, normal.members)) throw InvalidInput("quotient_group: subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<Element> proj(n, detail::IsomorphismSearch::kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (proj[x] != detail::IsomorphismSearch::kUnset) continue;
    const auto label = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto m : normal.members) proj[g.op(x, m)] = label;
  }
  const std::size_t q = reps.size();
  std::vector<Element> cells(q * q);
  for (Element i = 0; i < q; ++i)
    for (Element j = 0; j < q; ++j) cells[i * q + j] = proj[g.op(reps[i], reps[j])];
  return {FiniteGroup::from_verified_cells(q, std::move(cells)), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Abelian invariants

namespace detail {
inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::size_t ilog(std::size_t x, std::size_t p) {
  std::size_t k = 0;
  while (x > 1) {
    x /= p;
    ++k;
  }
  return k;
}
}  // namespace detail

/// Invariant factors d1 | d2 | ... of an abelian group (empty for the
/// trivial group).
inline std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw InvalidInput("abelian_invariants: group is not abelian");
  std::vector<std::vector<std::size_t>> exps;  // per prime, descending exponents
  for (auto p : detail::prime_factors(g.order())) {
    // counts[k] = log_p |{x : p^k x = 0}|
    std::vector<std::size_t> counts{0};
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t c = 0;
      for (Element x = 0; x < g.order(); ++x) c += g.power(x, pk) == 0;
      counts.push_back(detail::ilog(c, p));
      if (counts.back() == counts[counts.size() - 2]) break;
    }
    // number of cyclic factors of exponent >= k is counts[k] - counts[k-1]
    std::vector<std::size_t> e;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      const std::size_t at_least_k = counts[k] - counts[k - 1];
      const std::size_t at_least_next = k + 1 < counts.size() ? counts[k + 1] - counts[k] : 0;
      for (std::size_t i = 0; i < at_least_k - at_least_next; ++i) e.push_back(k);
    }
    std::sort(e.rbegin(), e.rend());
    exps.push_back(std::move(e));
  }
  std::size_t len = 0;
  for (const auto& e : exps) len = std::max(len, e.size());
  std::vector<std::size_t> factors(len, 1);
  const auto ps = detail::prime_factors(g.order());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < exps[i].size(); ++j)
      for (std::size_t k = 0; k < exps[i][j]; ++k) factors[j] *= ps[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

/// Minimal number of generators of a finite abelian group: the largest
/// p-rank, computed as dim over F_p of G/pG.
inline std::size_t abelian_rank(const FiniteGroup& g) {
  if (!g.is_abelian()) throw InvalidInput("abelian_rank: group is not abelian");
  std::size_t rank = 0;
  for (auto p : detail::prime_factors(g.order())) {
    ElementSet multiples(g.order());
    for (Element x = 0; x < g.order(); ++x) multiples.insert(g.power(x, p));
    rank = std::max(rank, detail::ilog(g.order() / multiples.size(), p));
  }
  return rank;
}

}  // namespace bracekit
