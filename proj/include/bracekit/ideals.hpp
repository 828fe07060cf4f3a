#pragma once

// Left ideals, ideals, distinguished ideals (Soc, Ann, Fix, A^(2)),
// quotients, sub-braces and the ideal lattice.

#include <algorithm>
#include <mutex>
#include <optional>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/ideal_type.hpp"

namespace bracekit {

/// Outcome of a membership test: holds, or the witness that breaks it.
struct MembershipCheck {
  bool holds = true;
  std::optional<Violation> witness;
  explicit operator bool() const { return holds; }

  static MembershipCheck yes() { return {}; }
  static MembershipCheck no(Violation v) { return {false, std::move(v)}; }
};

// ---------------------------------------------------------------------------
// Membership tests

inline MembershipCheck is_additive_subgroup(const SkewBrace& a, const ElementSet& s) {
  if (!s.contains(0)) return MembershipCheck::no({"missing-zero", {}, "0 is not a member"});
  for (auto x : s) {
    if (!s.contains(a.neg(x))) return MembershipCheck::no({"not-additive-subgroup", {x}, "-x is not a member"});
    for (auto y : s)
      if (!s.contains(a.plus(x, y)))
        return MembershipCheck::no({"not-additive-subgroup", {x, y}, "x + y is not a member"});
  }
  return MembershipCheck::yes();
}

/// Additive subgroup I with lambda_a(I) contained in I for all a.
inline MembershipCheck is_left_ideal(const SkewBrace& a, const ElementSet& s) {
  if (auto sub = is_additive_subgroup(a, s); !sub) return sub;
  for (Element x = 0; x < a.order(); ++x)
    for (auto i : s)
      if (!s.contains(a.lambda(x, i)))
        return MembershipCheck::no({"not-lambda-stable", {x, i}, "lambda_a(i) is not a member"});
  return MembershipCheck::yes();
}

/// Left ideal, normal in (A,+) and in (A,o); equivalently I * A inside I.
inline MembershipCheck is_ideal(const SkewBrace& a, const ElementSet& s) {
  if (auto left = is_left_ideal(a, s); !left) return left;
  for (Element x = 0; x < a.order(); ++x)
    for (auto i : s) {
      if (!s.contains(a.plus(a.plus(a.neg(x), i), x)))
        return MembershipCheck::no({"not-additively-normal", {x, i}, "-a + i + a is not a member"});
      if (!s.contains(a.circ(a.circ(x, i), a.circ_inv(x))))
        return MembershipCheck::no({"not-circle-normal", {x, i}, "a o i o a' is not a member"});
      if (!s.contains(a.star(i, x)))
        return MembershipCheck::no({"not-star-closed", {i, x}, "i * a is not a member"});
    }
  return MembershipCheck::yes();
}

// ---------------------------------------------------------------------------
// Closures

/// Additive subgroup generated by s.
inline ElementSet additive_span(const SkewBrace& a, const ElementSet& s) {
  return subgroup_closure(a.additive(), s).members;
}

/// Least ideal containing s. Worklist fixpoint over: sums, negatives,
/// additive conjugates, lambda images, circle conjugates, and the star
/// products s * a and a * s.
inline Ideal ideal_closure(const SkewBrace& a, const ElementSet& s) {
  const std::size_t n = a.order();
  ElementSet members(n, {0});
  std::vector<Element> list{0}, work;
  auto add = [&](Element x) {
    if (members.insert(x)) {
      list.push_back(x);
      work.push_back(x);
    }
  };
  for (auto x : s) add(x);
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    add(a.neg(x));
    for (Element y = 0; y < n; ++y) {
      add(a.plus(a.plus(a.neg(y), x), y));
      add(a.lambda(y, x));
      add(a.circ(a.circ(y, x), a.circ_inv(y)));
      add(a.star(x, y));
      add(a.star(y, x));
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      add(a.plus(x, list[i]));
      add(a.plus(list[i], x));
    }
  }
  return {members};
}

/// I + J for ideals: the additive subgroup generated by the union.
inline ElementSet ideal_sum(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  return additive_span(a, i | j);
}

/// Additive subgroup generated by { i * j : i in I, j in J }.
inline ElementSet star_product(const SkewBrace& a, const ElementSet& i, const ElementSet& j) {
  ElementSet stars(a.order(), {0});
  for (auto x : i)
    for (auto y : j) stars.insert(a.star(x, y));
  return additive_span(a, stars);
}

// ---------------------------------------------------------------------------
// Distinguished ideals

/// Ker lambda intersected with the centre of (A,+).
inline Ideal socle(const SkewBrace& a) {
  const auto cen = center(a.additive()).members;
  ElementSet s(a.order());
  for (auto x : cen) {
    bool kernel = true;
    for (Element y = 0; y < a.order() && kernel; ++y) kernel = a.lambda(x, y) == y;
    if (kernel) s.insert(x);
  }
  return {s};
}

/// Soc(A) intersected with the centre of (A,o).
inline Ideal annihilator(const SkewBrace& a) {
  return {socle(a).members & center(a.multiplicative()).members};
}

/// Elements fixed by every lambda_b. A left ideal, in general not an ideal.
inline ElementSet fix(const SkewBrace& a) {
  ElementSet s(a.order());
  for (Element x = 0; x < a.order(); ++x) {
    bool fixed = true;
    for (Element b = 0; b < a.order() && fixed; ++b) fixed = a.lambda(b, x) == x;
    if (fixed) s.insert(x);
  }
  return s;
}

/// A^(2): additive subgroup generated by all a * b.
inline Ideal a2(const SkewBrace& a) {
  const auto all = ElementSet::full(a.order());
  return {star_product(a, all, all)};
}

/// [A,A]_+, the commutator subgroup of the additive group.
inline ElementSet additive_commutator(const SkewBrace& a) { return commutator_subgroup(a.additive()).members; }

// ---------------------------------------------------------------------------
// Quotients and sub-braces

struct QuotientBrace {
  SkewBrace brace;
  std::vector<Element> projection;  // element -> coset label
};

/// A/I on additive cosets, labelled in order of their smallest member.
inline QuotientBrace quotient_brace(const SkewBrace& a, const ElementSet& ideal) {
  if (auto chk = is_ideal(a, ideal); !chk) throw InvalidInput("quotient_brace: not an ideal: " + chk.witness->describe());
  const std::size_t n = a.order();
  constexpr Element unset = kNoElement;
  std::vector<Element> proj(n, unset), reps;
  for (Element x = 0; x < n; ++x) {
    if (proj[x] != unset) continue;
    const auto label = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto i : ideal) proj[a.plus(x, i)] = label;
  }
  const std::size_t q = reps.size();
  std::vector<Element> add(q * q), circ(q * q);
  for (Element i = 0; i < q; ++i)
    for (Element j = 0; j < q; ++j) {
      add[i * q + j] = proj[a.plus(reps[i], reps[j])];
      circ[i * q + j] = proj[a.circ(reps[i], reps[j])];
    }
  return {SkewBrace::from_verified(FiniteGroup::from_verified_cells(q, std::move(add)),
                                   FiniteGroup::from_verified_cells(q, std::move(circ))),
          std::move(proj)};
}

struct SubBrace {
  SkewBrace brace;
  std::vector<Element> embedding;  // new index -> original element
};

/// The sub-brace on a subset closed under both operations, relabelled
/// 0..|S|-1 in increasing order.
inline SubBrace sub_brace(const SkewBrace& a, const ElementSet& s) {
  if (!s.contains(0)) throw InvalidInput("sub_brace: subset does not contain 0");
  const auto emb = s.to_vector();
  std::vector<Element> local(a.order(), kNoElement);
  for (Element i = 0; i < emb.size(); ++i) local[emb[i]] = i;
  const std::size_t m = emb.size();
  std::vector<Element> add(m * m), circ(m * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j) {
      const Element p = a.plus(emb[i], emb[j]), c = a.circ(emb[i], emb[j]);
      if (!s.contains(p) || !s.contains(c))
        throw InvalidInput("sub_brace: subset not closed under both operations");
      add[i * m + j] = local[p];
      circ[i * m + j] = local[c];
    }
  return {SkewBrace::from_verified(FiniteGroup::from_verified_cells(m, std::move(add)),
                                   FiniteGroup::from_verified_cells(m, std::move(circ))),
          emb};
}

// ---------------------------------------------------------------------------
// The ideal lattice

/// Every ideal, sorted by size then members. Computed by filtering the
/// normal subgroups of (A,+) through lambda-stability, circle-normality and
/// I * A inside I; memoized on the brace.
inline const std::vector<Ideal>& all_ideals(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  require_bound(a.order(), bound, "all_ideals");
  auto& cache = a.lattice_cache();
  std::call_once(cache.once, [&] {
    for (auto& n : all_normal_subgroups(a.additive(), a.order())) {
      const auto& s = n.members;
      bool ok = true;
      for (Element x = 0; x < a.order() && ok; ++x)
        for (auto i : s)
          if (!s.contains(a.lambda(x, i))) {
            ok = false;
            break;
          }
      for (Element x = 0; x < a.order() && ok; ++x)
        for (auto i : s)
          if (!s.contains(a.circ(a.circ(x, i), a.circ_inv(x))) || !s.contains(a.star(i, x))) {
            ok = false;
            break;
          }
      if (ok) cache.ideals.push_back({s});
    }
    std::sort(cache.ideals.begin(), cache.ideals.end());
  });
  return cache.ideals;
}

/// Proper ideals with no ideal strictly between them and A.
inline std::vector<Ideal> maximal_ideals(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const auto& ideals = all_ideals(a, bound);
  std::vector<Ideal> out;
  for (const auto& m : ideals) {
    if (m.members.is_full()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (!j.members.is_full() && j != m && m.subset_of(j)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  return out;
}

inline bool is_simple(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  return all_ideals(a, bound).size() == 2;
}

/// I * J != 0 for all non-zero ideals I, J (vacuous for the zero brace).
inline bool is_prime_brace(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  const auto& ideals = all_ideals(a, bound);
  for (const auto& i : ideals) {
    if (i.members.is_trivial()) continue;
    for (const auto& j : ideals) {
      if (j.members.is_trivial()) continue;
      if (star_product(a, i.members, j.members).is_trivial()) return false;
    }
  }
  return true;
}

/// P is prime when A/P is a prime brace.
inline bool is_prime_ideal(const SkewBrace& a, const Ideal& p, std::size_t bound = kDefaultLatticeBound) {
  return is_prime_brace(quotient_brace(a, p.members).brace, bound);
}

/// I + J = A forces J = A for every ideal J.
inline bool is_small_ideal(const SkewBrace& a, const Ideal& i, std::size_t bound = kDefaultLatticeBound) {
  for (const auto& j : all_ideals(a, bound))
    if (!j.members.is_full() && ideal_sum(a, i.members, j.members).is_full()) return false;
  return true;
}

struct IdealFlags {
  bool left_ideal = false, ideal = false, maximal = false, prime = false, small = false;
};

inline IdealFlags classify_ideal(const SkewBrace& a, const Ideal& i, std::size_t bound = kDefaultLatticeBound) {
  IdealFlags f;
  f.left_ideal = static_cast<bool>(is_left_ideal(a, i.members));
  f.ideal = static_cast<bool>(is_ideal(a, i.members));
  if (!f.ideal) return f;
  const auto maxes = maximal_ideals(a, bound);
  f.maximal = std::find(maxes.begin(), maxes.end(), i) != maxes.end();
  f.prime = is_prime_ideal(a, i, bound);
  f.small = is_small_ideal(a, i, bound);
  return f;
}

}  // namespace bracekit
