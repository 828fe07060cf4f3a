#pragma once

// One-brace summary of the distinguished ideals and invariants, and the
// full list of property checks run on every corpus brace.

#include <string>
#include <vector>

#include "bracekit/group_catalog.hpp"
#include "bracekit/invariants.hpp"
#include "bracekit/ybe.hpp"

namespace bracekit {

struct BraceReport {
  std::size_t order = 0;
  std::string additive;
  std::string circle;
  std::vector<Element> socle, annihilator, fix, a2, radical, radical_prime;
  std::size_t ideal_count = 0;
  std::size_t maximal_ideal_count = 0;
  std::size_t weight = 1;
  std::vector<Element> weight_generators;
  bool simple = false;
  bool prime = false;
  bool solvable = false;
  bool perfect = false;
  std::size_t solvable_length = 0;  // number of terms in A_1 > A_2 > ...
  std::vector<std::size_t> factor_orders;  // simple factors of A/Rad(A)
  bool involutive_solution = false;

  bool operator==(const BraceReport&) const = default;
};

inline BraceReport make_brace_report(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  BraceReport r;
  r.order = a.order();
  r.additive = identify_group(a.additive());
  r.circle = identify_group(a.multiplicative());
  r.socle = socle(a).members.to_vector();
  r.annihilator = annihilator(a).members.to_vector();
  r.fix = fix(a).to_vector();
  r.a2 = a2(a).members.to_vector();
  r.radical = radical_ideal(a, bound).members.to_vector();
  r.radical_prime = radical_prime_ideal(a, bound).members.to_vector();
  r.ideal_count = all_ideals(a, bound).size();
  r.maximal_ideal_count = maximal_ideals(a, bound).size();
  const auto w = weight(a, {true, bound});
  r.weight = w.weight;
  r.weight_generators = w.generating_set.to_vector();
  r.simple = is_simple(a, bound);
  r.prime = is_prime_brace(a, bound);
  const auto series = solvable_series(a);
  r.solvable = series.reaches_zero();
  r.solvable_length = series.terms.size();
  r.perfect = is_perfect(a);
  for (const auto& f : wedderburn_decompose(a, bound).factors) r.factor_orders.push_back(f.order());
  r.involutive_solution = check_solution(solution_from_brace(a)).is_involutive;
  return r;
}

/// The r_A solution is a non-degenerate YBE solution, involutive when the
/// additive group is abelian.
inline CheckReport check_brace_solution(const SkewBrace& a) {
  const std::string name = "brace-solution";
  const auto rep = check_solution(solution_from_brace(a));
  if (!rep.is_ybe) return CheckReport::fail(name, *rep.ybe_witness);
  if (!rep.is_nondegenerate) return CheckReport::fail(name, *rep.nondegenerate_witness);
  if (a.additive().is_abelian() && !rep.is_involutive) return CheckReport::fail(name, *rep.involutive_witness);
  return CheckReport::pass(name, rep.is_involutive ? "involutive" : "non-involutive");
}

/// Optimized weight search against the plain definition, for small orders.
inline CheckReport check_weight_optimization(const SkewBrace& a, std::size_t max_order = 6,
                                             std::size_t bound = kDefaultLatticeBound) {
  const std::string name = "weight-via-radical";
  if (a.order() > max_order) return CheckReport::na(name, "order above plain-search limit");
  const auto fast = weight(a, {true, bound}).weight, slow = weight(a, {false, bound}).weight;
  if (fast != slow)
    return CheckReport::fail(name, {"weight", {static_cast<Element>(fast), static_cast<Element>(slow)},
                                    "search in A/Rad(A) disagrees with direct search"});
  return CheckReport::pass(name);
}

/// Every property check, in a fixed order.
inline std::vector<CheckReport> run_all_checks(const SkewBrace& a, std::size_t bound = kDefaultLatticeBound) {
  std::vector<CheckReport> out;
  out.push_back(check_star_identities(a));
  out.push_back(check_lambda_laws(a));
  out.push_back(check_gaschutz(a, bound));
  out.push_back(check_prime_maximal(a, bound));
  out.push_back(check_kutzko(a, bound));
  out.push_back(check_wiegold(a, bound));
  out.push_back(check_square_free(a, bound));
  out.push_back(check_prop_inc(a, bound));
  out.push_back(check_prop_desc(a, bound));
  out.push_back(check_prop_a2(a, bound));
  out.push_back(check_radical_quotients(a, bound));
  out.push_back(verify_decomposition(wedderburn_decompose(a, bound), bound));
  out.push_back(schur_embedding(a).check);
  out.push_back(check_omega_products(a, trivial_brace(cyclic_group(2)), bound));
  out.push_back(check_weight_optimization(a, 6, bound));
  out.push_back(check_brace_solution(a));
  return out;
}

}  // namespace bracekit
