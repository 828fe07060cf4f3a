#pragma once

// Radical, weight, the semisimple decomposition of A/Rad(A), solvability and
// perfectness, and exhaustive checks of the structural theorems relating
// them. Every check returns a CheckReport so sweeps can aggregate
// pass/fail/not-applicable honestly.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/check_report.hpp"
#include "bracekit/ideals.hpp"

namespace bracekit {

/// Default ceiling for routines that quantify over all 2^n subsets.
inline constexpr std::size_t kDefaultSubsetBound = 16;

// ---------------------------------------------------------------------------
// Radical

/// Intersection of all maximal ideals, or A when there are none.
inline Ideal radical_ideal(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  ElementSet r = ElementSet::full(a.order());
  for (const auto& m : maximal_ideals(a, bound)) r &= m.members;
  return {r};
}

/// Intersection of the maximal ideals that are prime, or A when there are none.
inline Ideal radical_prime_ideal(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  ElementSet r = ElementSet::full(a.order());
  for (const auto& m : maximal_ideals(a, bound))
    if (is_prime_ideal(a, m, bound)) r &= m.members;
  return {r};
}

/// Elements a such that (S u {a}) = A implies (S) = A for every subset S.
/// Brute force over all subsets of the non-zero elements: the generated ideal
/// of each subset is built incrementally from the subset without its
/// highest element.
inline ElementSet non_generating_elements(const SkewBrace& a, std::size_t bound = kDefaultSubsetBound) {
  require_bound(a.order(), bound, "non_generating_elements");
  const std::size_t n = a.order();
  if (n > 64) throw BoundExceeded("non_generating_elements: order exceeds 64");
  const std::size_t m = n - 1;  // bit i stands for element i + 1
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> closure(std::size_t{1} << m);
  closure[0] = 1;
  for (std::size_t mask = 1; mask < closure.size(); ++mask) {
    const unsigned hi = 63u - static_cast<unsigned>(std::countl_zero(static_cast<std::uint64_t>(mask)));
    const std::uint64_t prev = closure[mask & ~(std::size_t{1} << hi)];
    const Element x = hi + 1;
    if ((prev >> x) & 1u) {
      closure[mask] = prev;
      continue;
    }
    ElementSet seed(n);
    for (Element e = 0; e < n; ++e)
      if ((prev >> e) & 1u) seed.insert(e);
    seed.insert(x);
    closure[mask] = ideal_closure(a, seed).members.words()[0];
  }
  ElementSet out(n, {0});
  for (Element x = 1; x < n; ++x) {
    const std::size_t bit = std::size_t{1} << (x - 1);
    bool non_generating = true;
    for (std::size_t mask = 0; mask < closure.size() && non_generating; ++mask) {
      if (mask & bit) continue;
      if (closure[mask | bit] == full && closure[mask] != full) non_generating = false;
    }
    if (non_generating) out.insert(x);
  }
  return out;
}

/// Sum of all small ideals, folded pairwise.
inline Ideal small_ideal_sum(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  ElementSet sum(a.order(), {0});
  for (const auto& i : all_ideals(a, bound))
    if (is_small_ideal(a, i, bound)) sum = ideal_sum(a, sum, i.members);
  return {sum};
}

struct RadicalReport {
  Ideal radical;
  Ideal radical_prime;
  std::size_t maximal_ideal_count = 0;
  std::optional<ElementSet> non_generators;  // absent above the subset bound
  Ideal small_ideal_sum;
};

inline RadicalReport radical(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound,
                             std::size_t subset_bound = kDefaultSubsetBound) {
  RadicalReport r;
  r.radical = radical_ideal(a, bound);
  r.radical_prime = radical_prime_ideal(a, bound);
  r.maximal_ideal_count = maximal_ideals(a, bound).size();
  if (a.order() <= subset_bound) r.non_generators = non_generating_elements(a, subset_bound);
  r.small_ideal_sum = small_ideal_sum(a, bound);
  return r;
}

// ---------------------------------------------------------------------------
// Solvability and perfectness

struct SolvableSeries {
  std::vector<ElementSet> terms;  // A_1 = A, A_{i+1} = A_i * A_i, strictly descending
  bool stabilized = false;        // A_{k+1} = A_k was reached

  bool reaches_zero() const { return !terms.empty() && terms.back().is_trivial(); }
};

inline SolvableSeries solvable_series(const SkewBrace& a) {
  SolvableSeries s;
  s.terms.push_back(ElementSet::full(a.order()));
  while (true) {
    const auto& cur = s.terms.back();
    auto next = star_product(a, cur, cur);
    if (next == cur) {
      s.stabilized = true;
      break;
    }
    s.terms.push_back(std::move(next));
  }
  return s;
}

inline bool is_solvable(const SkewBrace& a) { return solvable_series(a).reaches_zero(); }

/// A = A^(2) = A * A.
inline bool is_perfect(const SkewBrace& a) { return a2(a).members.is_full(); }

// ---------------------------------------------------------------------------
// Weight

struct WeightCertificate {
  std::size_t weight = 1;
  ElementSet generating_set;
  bool exhaustive = false;  // every smaller subset was refuted
};

struct WeightOptions {
  /// Search in A/Rad(A) and lift (the generating property is unchanged by
  /// passing to A/Rad(A)); off means searching A directly.
  bool via_radical_quotient = true;
  std::size_t bound = kDefaultLatticeBound;
};

namespace detail {

/// First subset, by size then lexicographic order over non-zero elements,
/// whose ideal closure is all of B.
inline std::vector<Element> smallest_generating_subset(const SkewBrace& b) {
  std::vector<Element> pool;
  for (Element x = 1; x < b.order(); ++x) pool.push_back(x);
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      ElementSet s(b.order());
      for (auto i : idx) s.insert(pool[i]);
      if (ideal_closure(b, s).members.is_full()) {
        std::vector<Element> out;
        for (auto i : idx) out.push_back(pool[i]);
        return out;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

}  // namespace detail

inline WeightCertificate weight(const SkewBrace& a, WeightOptions opt = {}) {
  WeightCertificate cert;
  cert.exhaustive = true;
  if (a.is_zero()) {
    cert.weight = 1;
    cert.generating_set = ElementSet(1, {0});
    return cert;
  }
  std::vector<Element> gens;
  if (opt.via_radical_quotient) {
    const auto rad = radical_ideal(a, opt.bound);
    const auto q = quotient_brace(a, rad.members);
    for (auto label : detail::smallest_generating_subset(q.brace)) {
      Element rep = 0;
      while (q.projection[rep] != label) ++rep;
      gens.push_back(rep);
    }
  } else {
    gens = detail::smallest_generating_subset(a);
  }
  cert.weight = gens.size();
  cert.generating_set = ElementSet::from(a.order(), gens);
  if (!ideal_closure(a, cert.generating_set).members.is_full())
    throw std::logic_error("weight: lifted generating set does not generate A");
  return cert;
}

// ---------------------------------------------------------------------------
// Decomposition of A/Rad(A) into simple factors

struct Decomposition {
  Ideal radical;
  std::vector<Ideal> maximal_ideals;  // irredundant, intersecting in Rad(A)
  std::vector<SkewBrace> factors;     // A / M_i, each simple
  QuotientBrace semisimple;           // A / Rad(A)
  SkewBrace product;                  // factors[0] x factors[1] x ...
  BraceMorphism iso;                  // A/Rad(A) -> product
  BraceMorphism crt_inverse;          // product -> A/Rad(A), built from the CRT argument
  std::vector<std::vector<Element>> factor_projections;  // A -> A/M_i
};

namespace detail {

inline ElementSet intersect_all(std::size_t n, const std::vector<Ideal>& ideals, std::size_t skip = SIZE_MAX) {
  ElementSet r = ElementSet::full(n);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (i != skip) r &= ideals[i].members;
  return r;
}

// x with x - a_i in M_i for every i, for irredundant maximal M_1..M_k.
// Writes a_1 = x1 + y1 and a_J = x2 + y2 with x's in M_1 and y's in
// J = M_2 n ... n M_k, where a_J solves the remaining system, and returns
// y1 + x2.
inline Element crt_preimage(const SkewBrace& a, const std::vector<Ideal>& ms, const std::vector<Element>& targets,
                            std::size_t from = 0) {
  if (from + 1 == ms.size()) return targets[from];
  const Element a_j = crt_preimage(a, ms, targets, from + 1);
  ElementSet j = ElementSet::full(a.order());
  for (std::size_t i = from + 1; i < ms.size(); ++i) j &= ms[i].members;
  auto split = [&](Element v) {
    for (auto x : ms[from].members) {
      const Element y = a.plus(a.neg(x), v);
      if (j.contains(y)) return std::pair{x, y};
    }
    throw std::logic_error("crt_preimage: M + J != A");
  };
  const auto [x1, y1] = split(targets[from]);
  const auto [x2, y2] = split(a_j);
  (void)x1;
  (void)y2;
  return a.plus(y1, x2);
}

}  // namespace detail

inline Decomposition wedderburn_decompose(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  Decomposition d;
  const std::size_t n = a.order();
  d.radical = radical_ideal(a, bound);

  // Greedy family shrinking the running intersection, then drop redundant members.
  ElementSet running = ElementSet::full(n);
  for (const auto& m : maximal_ideals(a, bound)) {
    if (running.subset_of(m.members)) continue;
    d.maximal_ideals.push_back(m);
    running &= m.members;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < d.maximal_ideals.size(); ++i)
      if (detail::intersect_all(n, d.maximal_ideals, i) == d.radical.members) {
        d.maximal_ideals.erase(d.maximal_ideals.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
  }

  d.semisimple = quotient_brace(a, d.radical.members);
  d.product = zero_brace();
  for (const auto& m : d.maximal_ideals) {
    auto q = quotient_brace(a, m.members);
    d.product = direct_product(d.product, q.brace, std::max(kDefaultProductBound, n));
    d.factors.push_back(std::move(q.brace));
    d.factor_projections.push_back(std::move(q.projection));
  }

  auto encode = [&](Element x) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d.factors.size(); ++i) idx = idx * d.factors[i].order() + d.factor_projections[i][x];
    return static_cast<Element>(idx);
  };
  const std::size_t q = d.semisimple.brace.order();
  d.iso = {std::vector<Element>(q), q, d.product.order(), false};
  for (Element x = 0; x < n; ++x) d.iso.map[d.semisimple.projection[x]] = encode(x);
  d.iso.is_isomorphism = is_bijection(d.iso.map, d.product.order());

  // Inverse via the CRT construction, one representative per factor coset.
  d.crt_inverse = {std::vector<Element>(d.product.order()), d.product.order(), q, false};
  if (d.factors.empty()) {
    d.crt_inverse.map[0] = 0;
  } else {
    std::vector<std::vector<Element>> reps(d.factors.size());
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      reps[i].assign(d.factors[i].order(), kNoElement);
      for (Element x = n; x-- > 0;) reps[i][d.factor_projections[i][x]] = x;
    }
    for (Element p = 0; p < d.product.order(); ++p) {
      std::vector<Element> targets(d.factors.size());
      std::size_t rest = p;
      for (std::size_t i = d.factors.size(); i-- > 0;) {
        targets[i] = reps[i][rest % d.factors[i].order()];
        rest /= d.factors[i].order();
      }
      d.crt_inverse.map[p] = d.semisimple.projection[detail::crt_preimage(a, d.maximal_ideals, targets)];
    }
  }
  d.crt_inverse.is_isomorphism = is_bijection(d.crt_inverse.map, q);
  return d;
}

/// Factor simplicity, bijectivity and homomorphism of the iso, and that the
/// CRT construction inverts it.
inline CheckReport verify_decomposition(const Decomposition& d, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "wedderburn";
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    if (!is_simple(d.factors[i], bound))
      return CheckReport::fail(name, {"factor-not-simple", {static_cast<Element>(i)}, "A/M_i is not simple"});
  if (!d.iso.is_isomorphism) return CheckReport::fail(name, {"iso-not-bijective", {}, "A/Rad(A) -> product is not a bijection"});
  if (!is_brace_homomorphism(d.semisimple.brace, d.product, d.iso.map))
    return CheckReport::fail(name, {"iso-not-homomorphism", {}, "A/Rad(A) -> product does not preserve both operations"});
  for (Element p = 0; p < d.product.order(); ++p)
    if (d.iso.map[d.crt_inverse.map[p]] != p)
      return CheckReport::fail(name, {"crt-not-inverse", {p}, "CRT preimage does not invert the iso"});
  std::ostringstream os;
  os << d.factors.size() << " simple factor(s)";
  return CheckReport::pass(name, os.str());
}

// ---------------------------------------------------------------------------
// Theorem checks

/// For every maximal M: [A,A]_+ + A^(2) inside M or Soc(A) inside M; and
/// A^(2) n Soc(A) inside Rad(A).
inline CheckReport check_gaschutz(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "gaschutz";
  const auto sq = a2(a).members, soc = socle(a).members;
  const auto comm_plus_a2 = ideal_sum(a, additive_commutator(a), sq);
  for (const auto& m : maximal_ideals(a, bound))
    if (!comm_plus_a2.subset_of(m.members) && !soc.subset_of(m.members))
      return CheckReport::fail(name, {"maximal-ideal", m.members.to_vector(), "neither [A,A]_+ + A^(2) nor Soc(A) lies in M"});
  if (!(sq & soc).subset_of(radical_ideal(a, bound).members))
    return CheckReport::fail(name, {"radical", {}, "A^(2) n Soc(A) is not inside Rad(A)"});
  return CheckReport::pass(name);
}

/// A maximal ideal M is prime exactly when A^(2) is not inside M.
inline CheckReport check_prime_maximal(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "prime-maximal";
  const auto sq = a2(a).members;
  for (const auto& m : maximal_ideals(a, bound))
    if (is_prime_ideal(a, m, bound) != !sq.subset_of(m.members))
      return CheckReport::fail(name, {"maximal-ideal", m.members.to_vector(), "primeness disagrees with A^(2) containment"});
  return CheckReport::pass(name);
}

/// omega(A) = omega(A / A^(2)).
inline CheckReport check_kutzko(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "kutzko";
  const auto w = weight(a, {true, bound}).weight;
  const auto wq = weight(quotient_brace(a, a2(a).members).brace, {true, bound}).weight;
  if (w != wq)
    return CheckReport::fail(name, {"weight-mismatch", {static_cast<Element>(w), static_cast<Element>(wq)},
                                    "omega(A) != omega(A/A^(2))"});
  return CheckReport::pass(name, "omega = " + std::to_string(w));
}

/// Perfect braces have weight one.
inline CheckReport check_wiegold(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "wiegold";
  if (!is_perfect(a)) return CheckReport::na(name, "not perfect");
  const auto w = weight(a, {true, bound}).weight;
  if (w != 1) return CheckReport::fail(name, {"weight", {static_cast<Element>(w)}, "perfect brace with weight != 1"});
  return CheckReport::pass(name, "perfect, omega = 1");
}

struct SquareFreeData {
  std::size_t weight = 0;
  std::size_t abelian_quotient_rank = 0;  // generator count of (B/B^(2))_ab
  std::vector<std::size_t> abelian_invariants;
};

/// With B = A/Rad(A): omega(A) equals the weight of (B/B^(2))_ab, i.e. its
/// minimal number of generators (1 for the trivial group).
inline SquareFreeData square_free_data(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  SquareFreeData d;
  d.weight = weight(a, {true, bound}).weight;
  const auto b = quotient_brace(a, radical_ideal(a, bound).members).brace;
  const auto c = quotient_brace(b, a2(b).members).brace;
  const auto ab = quotient_group(c.additive(), commutator_subgroup(c.additive())).group;
  d.abelian_quotient_rank = abelian_rank(ab);
  d.abelian_invariants = abelian_invariants(ab);
  return d;
}

inline bool is_square_free(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

inline CheckReport check_square_free(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "square-free";
  const auto d = square_free_data(a, bound);
  const std::size_t expected = std::max<std::size_t>(1, d.abelian_quotient_rank);
  if (d.weight != expected)
    return CheckReport::fail(name, {"weight-vs-abelianization", {static_cast<Element>(d.weight), static_cast<Element>(expected)},
                                    "omega(A) != omega((B/B^(2))_ab)"});
  if (is_square_free(a.order()) && d.weight != 1)
    return CheckReport::fail(name, {"square-free-order", {static_cast<Element>(d.weight)}, "square-free order with omega != 1"});
  return CheckReport::pass(name, "omega = " + std::to_string(d.weight));
}

/// Rad(I) inside Rad(A) and Rad'(I) inside Rad'(A) for every ideal I.
inline CheckReport check_prop_inc(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "radical-of-ideal";
  const auto rad = radical_ideal(a, bound).members, radp = radical_prime_ideal(a, bound).members;
  for (const auto& i : all_ideals(a, bound)) {
    const auto sub = sub_brace(a, i.members);
    ElementSet r(a.order()), rp(a.order());
    for (auto x : radical_ideal(sub.brace, bound).members) r.insert(sub.embedding[x]);
    for (auto x : radical_prime_ideal(sub.brace, bound).members) rp.insert(sub.embedding[x]);
    if (!r.subset_of(rad)) return CheckReport::fail(name, {"rad", i.members.to_vector(), "Rad(I) not inside Rad(A)"});
    if (!rp.subset_of(radp)) return CheckReport::fail(name, {"rad-prime", i.members.to_vector(), "Rad'(I) not inside Rad'(A)"});
  }
  return CheckReport::pass(name);
}

/// Rad(A) equals the set of non-generating elements (subset brute force)
/// and the sum of all small ideals.
inline CheckReport check_prop_desc(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound,
                                   std::size_t subset_bound = kDefaultSubsetBound) {
  const std::string name = "radical-characterizations";
  if (a.order() > subset_bound) return CheckReport::na(name, "order above subset brute-force bound");
  const auto rad = radical_ideal(a, bound).members;
  if (non_generating_elements(a, subset_bound) != rad)
    return CheckReport::fail(name, {"non-generators", rad.to_vector(), "non-generating elements differ from Rad(A)"});
  if (small_ideal_sum(a, bound).members != rad)
    return CheckReport::fail(name, {"small-ideals", rad.to_vector(), "sum of small ideals differs from Rad(A)"});
  return CheckReport::pass(name);
}

/// Solvable A: A^(2) inside every maximal ideal, hence inside Rad(A).
inline CheckReport check_prop_a2(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "solvable-a2";
  if (!is_solvable(a)) return CheckReport::na(name, "not solvable");
  const auto sq = a2(a).members;
  for (const auto& m : maximal_ideals(a, bound))
    if (!sq.subset_of(m.members))
      return CheckReport::fail(name, {"maximal-ideal", m.members.to_vector(), "A^(2) not inside M"});
  if (!sq.subset_of(radical_ideal(a, bound).members))
    return CheckReport::fail(name, {"radical", {}, "A^(2) not inside Rad(A)"});
  return CheckReport::pass(name);
}

/// Rad(A/Rad(A)) = 0, and Rad(A/I) = Rad(A)/I for every ideal I inside Rad(A).
inline CheckReport check_radical_quotients(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "radical-quotients";
  const auto rad = radical_ideal(a, bound).members;
  for (const auto& i : all_ideals(a, bound)) {
    if (!i.members.subset_of(rad)) continue;
    const auto q = quotient_brace(a, i.members);
    ElementSet image(q.brace.order());
    for (auto x : rad) image.insert(q.projection[x]);
    if (radical_ideal(q.brace, bound).members != image)
      return CheckReport::fail(name, {"quotient", i.members.to_vector(), "Rad(A/I) != Rad(A)/I"});
  }
  if (!radical_ideal(quotient_brace(a, rad).brace, bound).members.is_trivial())
    return CheckReport::fail(name, {"semisimple", {}, "Rad(A/Rad(A)) != 0"});
  if (!rad.subset_of(radical_prime_ideal(a, bound).members))
    return CheckReport::fail(name, {"rad-prime", {}, "Rad(A) not inside Rad'(A)"});
  return CheckReport::pass(name);
}

/// omega(A x B) = omega(B) for A perfect of weight one and B trivial.
inline CheckReport check_omega_products(const SkewBrace& a, const SkewBrace& b, std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "omega-direct-product";
  if (!is_perfect(a)) return CheckReport::na(name, "first factor not perfect");
  if (weight(a, {true, bound}).weight != 1) return CheckReport::na(name, "first factor has weight != 1");
  if (!b.is_trivial()) return CheckReport::na(name, "second factor not trivial");
  const auto p = direct_product(a, b);
  const auto wp = weight(p, {true, std::max(bound, p.order())}).weight, wb = weight(b, {true, bound}).weight;
  if (wp != wb)
    return CheckReport::fail(name, {"weight", {static_cast<Element>(wp), static_cast<Element>(wb)}, "omega(A x B) != omega(B)"});
  return CheckReport::pass(name, "omega = " + std::to_string(wb));
}

/// omega(A x| B) = omega(B) for A perfect and any action theta of B on A.
inline CheckReport check_omega_semidirect(const SkewBrace& a, const SkewBrace& b, const std::vector<BraceMorphism>& theta,
                                          std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "omega-semidirect-product";
  if (!is_perfect(a)) return CheckReport::na(name, "first factor not perfect");
  auto p = semidirect_product(a, b, theta);
  if (!p) return CheckReport::na(name, "invalid action: " + p.violation().describe());
  const auto& s = p.value();
  const auto ws = weight(s, {true, std::max(bound, s.order())}).weight, wb = weight(b, {true, bound}).weight;
  if (ws != wb)
    return CheckReport::fail(name, {"weight", {static_cast<Element>(ws), static_cast<Element>(wb)}, "omega(A x| B) != omega(B)"});
  return CheckReport::pass(name, "omega = " + std::to_string(wb));
}

// ---------------------------------------------------------------------------
// Embedding of A/Ann(A) into (A^(2))^k x (A^(2))^k x ([A,A]_+)^k

struct SchurEmbedding {
  CheckReport check;
  std::vector<Element> generators;  // additive generators x_1..x_k
  std::size_t quotient_order = 0;   // |A/Ann(A)|
  std::vector<std::vector<Element>> images;  // per coset: (a*x_i, x_i*a, [a,x_i]_+)
};

inline SchurEmbedding schur_embedding(const SkewBrace& a) {
  SchurEmbedding e;
  const std::string name = "schur-embedding";
  e.generators = generating_set(a.additive());
  const auto ann = annihilator(a).members;
  const auto sq = a2(a).members, comm = additive_commutator(a);
  const auto& add = a.additive();
  auto f = [&](Element x) {
    std::vector<Element> v;
    for (auto g : e.generators) v.push_back(a.star(x, g));
    for (auto g : e.generators) v.push_back(a.star(g, x));
    for (auto g : e.generators) v.push_back(add.commutator(x, g));
    return v;
  };
  const auto q = quotient_brace(a, ann);
  e.quotient_order = q.brace.order();
  e.images.assign(e.quotient_order, {});
  std::map<std::vector<Element>, Element> seen;
  for (Element x = 0; x < a.order(); ++x) {
    const auto v = f(x);
    const std::size_t k = e.generators.size();
    for (std::size_t i = 0; i < k; ++i)
      if (!sq.contains(v[i]) || !sq.contains(v[k + i]) || !comm.contains(v[2 * k + i])) {
        e.check = CheckReport::fail(name, {"codomain", {x}, "component outside A^(2) or [A,A]_+"});
        return e;
      }
    const Element label = q.projection[x];
    if (e.images[label].empty()) {
      e.images[label] = v;
      if (auto [it, fresh] = seen.emplace(v, label); !fresh) {
        e.check = CheckReport::fail(name, {"not-injective", {it->second, label}, "two cosets of Ann(A) share an image"});
        return e;
      }
    } else if (e.images[label] != v) {
      e.check = CheckReport::fail(name, {"not-well-defined", {x}, "image differs within a coset of Ann(A)"});
      return e;
    }
  }
  e.check = CheckReport::pass(name, "|A/Ann(A)| = " + std::to_string(e.quotient_order));
  return e;
}

// ---------------------------------------------------------------------------
// Trivial braces: radical against the Frattini subgroup

struct FrattiniComparison {
  bool applicable = false;  // only trivial braces
  bool equal = false;
  ElementSet radical, frattini;
};

/// For a trivial brace, compares Rad(A) (maximal normal subgroups) with the
/// Frattini subgroup (maximal subgroups). They can differ when (A,+) is
/// nonabelian; the difference is reported, not treated as a failure.
inline FrattiniComparison compare_radical_with_frattini(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  FrattiniComparison c;
  if (!a.is_trivial()) return c;
  c.applicable = true;
  c.radical = radical_ideal(a, bound).members;
  c.frattini = frattini_subgroup(a.additive(), bound).members;
  c.equal = c.radical == c.frattini;
  return c;
}

}  // namespace bracekit
