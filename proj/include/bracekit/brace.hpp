#pragma once

// Skew left braces: two group structures (A,+) and (A,o) on 0..n-1 sharing
// the identity 0, with a o (b + c) = a o b - a + a o c.
//
// The lambda table lambda[a][b] = -a + a o b is computed once at
// construction; every closure in the library reads it from here.

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bracekit/check_report.hpp"
#include "bracekit/element_set.hpp"
#include "bracekit/finite_group.hpp"
#include "bracekit/group_catalog.hpp"
#include "bracekit/ideal_type.hpp"
#include "bracekit/morphism.hpp"

namespace bracekit {

inline constexpr std::size_t kDefaultProductBound = 256;

namespace detail {
// Memoized ideal lattice; filled on first use by ideals.hpp and shared by
// every copy of the brace.
struct LatticeCache {
  std::once_flag once;
  std::vector<Ideal> ideals;
};
}  // namespace detail

class SkewBrace {
 public:
  SkewBrace() = default;

  /// Wraps two tables already known to form a skew brace.
  static SkewBrace from_verified(FiniteGroup add, FiniteGroup circle) {
    SkewBrace s;
    s.n_ = add.order();
    s.add_ = std::move(add);
    s.circle_ = std::move(circle);
    const std::size_t n = s.n_;
    s.lambda_.resize(n * n);
    s.lambda_inv_.resize(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element l = s.add_.op(s.add_.inverse(a), s.circle_.op(a, b));
        s.lambda_[a * n + b] = l;
        s.lambda_inv_[a * n + l] = b;
      }
    s.cache_ = std::make_shared<detail::LatticeCache>();
    return s;
  }

  std::size_t order() const noexcept { return n_; }
  const FiniteGroup& additive() const noexcept { return add_; }
  const FiniteGroup& multiplicative() const noexcept { return circle_; }

  Element plus(Element a, Element b) const { return add_.op(a, b); }
  Element neg(Element a) const { return add_.inverse(a); }
  Element circ(Element a, Element b) const { return circle_.op(a, b); }
  /// a' : the inverse of a in (A,o).
  Element circ_inv(Element a) const { return circle_.inverse(a); }
  Element lambda(Element a, Element b) const { return lambda_[a * n_ + b]; }
  Element lambda_inv(Element a, Element b) const { return lambda_inv_[a * n_ + b]; }
  /// a * b = lambda_a(b) - b.
  Element star(Element a, Element b) const { return plus(lambda(a, b), neg(b)); }

  bool is_trivial() const { return add_ == circle_; }
  bool is_zero() const { return n_ == 1; }

  detail::LatticeCache& lattice_cache() const { return *cache_; }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.add_ == b.add_ && a.circle_ == b.circle_;
  }

 private:
  std::size_t n_ = 0;
  FiniteGroup add_, circle_;
  std::vector<Element> lambda_, lambda_inv_;
  std::shared_ptr<detail::LatticeCache> cache_;
};

inline Element star(const SkewBrace& a, Element x, Element y) { return a.star(x, y); }

// ---------------------------------------------------------------------------
// Verification

namespace detail {

inline Violation prefixed(const char* which, Violation v) {
  v.axiom = std::string(which) + ":" + v.axiom;
  return v;
}

inline std::optional<Violation> check_compatibility(const FiniteGroup& add, const FiniteGroup& circle) {
  const std::size_t n = add.order();
  for (Element a = 0; a < n; ++a) {
    const Element na = add.inverse(a);
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element lhs = circle.op(a, add.op(b, c));
        const Element rhs = add.op(add.op(circle.op(a, b), na), circle.op(a, c));
        if (lhs != rhs) return Violation{"compatibility", {a, b, c}, "a o (b + c) != a o b - a + a o c"};
      }
  }
  return std::nullopt;
}

}  // namespace detail

/// Validates a pair of tables as a skew brace. The shared identity is
/// relabelled to 0 in both tables.
inline Checked<SkewBrace> verify_brace(const Table2D& add_table, const Table2D& circle_table) {
  if (auto v = detail::check_shape(add_table)) return detail::prefixed("additive", *v);
  if (auto v = detail::check_shape(circle_table)) return detail::prefixed("circle", *v);
  const std::size_t n = add_table.size();
  if (circle_table.size() != n)
    return Violation{"order-mismatch", {}, "additive and circle tables have different sizes"};
  auto add_cells = detail::flatten(add_table);
  auto circ_cells = detail::flatten(circle_table);
  auto e_add = detail::find_identity(add_cells, n);
  if (!e_add) return Violation{"additive:no-identity", {}, "no element acts as a two-sided identity"};
  auto e_circ = detail::find_identity(circ_cells, n);
  if (!e_circ) return Violation{"circle:no-identity", {}, "no element acts as a two-sided identity"};
  if (*e_add != *e_circ)
    return Violation{"identity-mismatch", {*e_add, *e_circ}, "the two groups have different identities"};
  if (*e_add != 0) {
    const auto p = detail::swap_permutation(n, 0, *e_add);
    add_cells = detail::relabel(add_cells, n, p);
    circ_cells = detail::relabel(circ_cells, n, p);
  }
  if (auto v = detail::check_axioms_identity_zero(add_cells, n)) return detail::prefixed("additive", *v);
  if (auto v = detail::check_axioms_identity_zero(circ_cells, n)) return detail::prefixed("circle", *v);
  auto add = FiniteGroup::from_verified_cells(n, std::move(add_cells));
  auto circle = FiniteGroup::from_verified_cells(n, std::move(circ_cells));
  if (auto v = detail::check_compatibility(add, circle)) return *v;
  return SkewBrace::from_verified(std::move(add), std::move(circle));
}

inline SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace::from_verified(g, g); }

inline SkewBrace zero_brace() { return trivial_brace(cyclic_group(1)); }

/// Exhaustive check of the identities
///   x * (y + z) = x * y + y + x * z - y
///   (x o y) * z = x * (y * z) + y * z + x * z.
inline CheckReport check_star_identities(const SkewBrace& a) {
  const std::size_t n = a.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Element l1 = a.star(x, a.plus(y, z));
        const Element r1 = a.plus(a.plus(a.plus(a.star(x, y), y), a.star(x, z)), a.neg(y));
        if (l1 != r1) return CheckReport::fail("star-identities", {"star-additive", {x, y, z}, "x*(y+z) != x*y + y + x*z - y"});
        const Element l2 = a.star(a.circ(x, y), z);
        const Element r2 = a.plus(a.plus(a.star(x, a.star(y, z)), a.star(y, z)), a.star(x, z));
        if (l2 != r2) return CheckReport::fail("star-identities", {"star-circle", {x, y, z}, "(xoy)*z != x*(y*z) + y*z + x*z"});
      }
  return CheckReport::pass("star-identities");
}

/// Exhaustive check of the lambda calculus: each lambda_a is an additive
/// automorphism, lambda is a homomorphism from (A,o), and
///   a o b = a + lambda_a(b),  a + b = a o lambda_a^-1(b),  -a = lambda_a(a').
inline CheckReport check_lambda_laws(const SkewBrace& a) {
  const std::size_t n = a.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.circ(x, y) != a.plus(x, a.lambda(x, y)))
        return CheckReport::fail("lambda-laws", {"circle-via-lambda", {x, y}, "a o b != a + lambda_a(b)"});
      if (a.plus(x, y) != a.circ(x, a.lambda_inv(x, y)))
        return CheckReport::fail("lambda-laws", {"plus-via-lambda", {x, y}, "a + b != a o lambda_a^-1(b)"});
      for (Element z = 0; z < n; ++z) {
        if (a.lambda(x, a.plus(y, z)) != a.plus(a.lambda(x, y), a.lambda(x, z)))
          return CheckReport::fail("lambda-laws", {"lambda-additive", {x, y, z}, "lambda_a not additive"});
        if (a.lambda(a.circ(x, y), z) != a.lambda(x, a.lambda(y, z)))
          return CheckReport::fail("lambda-laws", {"lambda-homomorphism", {x, y, z}, "lambda_{aob} != lambda_a lambda_b"});
      }
    }
    if (a.neg(x) != a.lambda(x, a.circ_inv(x)))
      return CheckReport::fail("lambda-laws", {"negation-via-lambda", {x}, "-a != lambda_a(a')"});
  }
  return CheckReport::pass("lambda-laws");
}

// ---------------------------------------------------------------------------
// Morphisms

inline bool is_brace_homomorphism(const SkewBrace& src, const SkewBrace& tgt, const std::vector<Element>& f) {
  if (f.size() != src.order()) return false;
  for (auto y : f)
    if (y >= tgt.order()) return false;
  for (Element x = 0; x < src.order(); ++x)
    for (Element y = 0; y < src.order(); ++y)
      if (f[src.plus(x, y)] != tgt.plus(f[x], f[y]) || f[src.circ(x, y)] != tgt.circ(f[x], f[y])) return false;
  return true;
}

inline bool is_bijection(const std::vector<Element>& f, std::size_t target_order) {
  if (f.size() != target_order) return false;
  std::vector<char> hit(target_order, 0);
  for (auto y : f) {
    if (y >= target_order || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

namespace detail {

// Per-element invariants preserved by brace isomorphisms.
inline std::vector<std::uint64_t> brace_signature(const SkewBrace& a) {
  const std::size_t n = a.order();
  const auto& add = a.additive();
  std::vector<std::uint64_t> sig(n);
  for (Element x = 0; x < n; ++x) {
    std::uint64_t fixed_by_lambda_x = 0, lambda_fixing_x = 0, commuting = 0;
    for (Element y = 0; y < n; ++y) {
      fixed_by_lambda_x += a.lambda(x, y) == y;
      lambda_fixing_x += a.lambda(y, x) == x;
      commuting += add.op(x, y) == add.op(y, x);
    }
    const std::uint64_t add_order = add.element_order(x), circ_order = a.multiplicative().element_order(x);
    sig[x] = add_order | (circ_order << 12) | (fixed_by_lambda_x << 24) | (lambda_fixing_x << 36) | (commuting << 48);
  }
  return sig;
}

}  // namespace detail

/// A bijection preserving both operations, if one exists.
inline std::optional<BraceMorphism> brace_isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto sa = detail::brace_signature(a), sb = detail::brace_signature(b);
  auto ms_a = sa, ms_b = sb;
  std::sort(ms_a.begin(), ms_a.end());
  std::sort(ms_b.begin(), ms_b.end());
  if (ms_a != ms_b) return std::nullopt;
  const detail::TableRef ta[] = {a.additive().ref(), a.multiplicative().ref()};
  const detail::TableRef tb[] = {b.additive().ref(), b.multiplicative().ref()};
  std::optional<BraceMorphism> found;
  detail::IsomorphismSearch search(ta, tb, generating_set(a.additive()), sa, sb);
  search.run([&](const std::vector<Element>& f) {
    found = BraceMorphism{f, a.order(), b.order(), true};
    return false;
  });
  return found;
}

/// Every bijection of A preserving both tables, sorted by image array.
inline std::vector<BraceMorphism> brace_automorphism_group(const SkewBrace& a,
                                                           std::size_t bound = kDefaultLatticeBound) {
  require_bound(a.order(), bound, "brace_automorphism_group");
  const auto sig = detail::brace_signature(a);
  const detail::TableRef t[] = {a.additive().ref(), a.multiplicative().ref()};
  std::vector<BraceMorphism> out;
  detail::IsomorphismSearch search(t, t, generating_set(a.additive()), sig, sig);
  search.run([&](const std::vector<Element>& f) {
    out.push_back({f, a.order(), a.order(), true});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Relabels a brace through a bijection with perm[0] = 0 (old -> new).
inline SkewBrace relabel_brace(const SkewBrace& a, const std::vector<Element>& perm) {
  if (!is_bijection(perm, a.order()) || perm[0] != 0) throw InvalidInput("relabel_brace: need a bijection fixing 0");
  const std::size_t n = a.order();
  return SkewBrace::from_verified(FiniteGroup::from_verified_cells(n, detail::relabel(a.additive().cells(), n, perm)),
                                  FiniteGroup::from_verified_cells(n, detail::relabel(a.multiplicative().cells(), n, perm)));
}

// ---------------------------------------------------------------------------
// Products

/// Componentwise product; the pair (a, b) has index a * |B| + b.
inline SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b, std::size_t bound = kDefaultProductBound) {
  require_bound(a.order() * b.order(), bound, "direct_product");
  return SkewBrace::from_verified(direct_product(a.additive(), b.additive()),
                                  direct_product(a.multiplicative(), b.multiplicative()));
}

/// Semidirect product A x| B for an action theta: (B,o) -> Aut(A,+,o), given
/// as theta[b] for every b in B. Addition is componentwise and
///   (a1, b1) o (a2, b2) = (a1 o theta(b1)(a2), b1 o b2).
inline Checked<SkewBrace> semidirect_product(const SkewBrace& a, const SkewBrace& b,
                                             const std::vector<BraceMorphism>& theta,
                                             std::size_t bound = kDefaultProductBound) {
  require_bound(a.order() * b.order(), bound, "semidirect_product");
  if (theta.size() != b.order()) return Violation{"theta-domain", {}, "theta must give one automorphism per element of B"};
  for (Element x = 0; x < b.order(); ++x) {
    const auto& t = theta[x].map;
    if (!is_bijection(t, a.order()) || !is_brace_homomorphism(a, a, t))
      return Violation{"theta-not-automorphism", {x}, "theta(b) is not a brace automorphism of A"};
  }
  for (Element x = 0; x < b.order(); ++x)
    for (Element y = 0; y < b.order(); ++y)
      if (theta[b.circ(x, y)].map != theta[x].after(theta[y]).map)
        return Violation{"theta-not-homomorphism", {x, y}, "theta(b1 o b2) != theta(b1) theta(b2)"};
  const std::size_t m = b.order(), n = a.order() * m;
  std::vector<Element> add(n * n), circ(n * n);
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) {
      const Element a1 = p / m, b1 = p % m, a2 = q / m, b2 = q % m;
      add[p * n + q] = static_cast<Element>(a.plus(a1, a2) * m + b.plus(b1, b2));
      circ[p * n + q] = static_cast<Element>(a.circ(a1, theta[b1](a2)) * m + b.circ(b1, b2));
    }
  auto to_rows = [n](const std::vector<Element>& cells) {
    Table2D t(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = cells[i * n + j];
    return t;
  };
  return verify_brace(to_rows(add), to_rows(circ));
}

}  // namespace bracekit
