#pragma once

// Shared fixtures: hand-built structures and data-file loading.

#include <algorithm>
#include <string>
#include <vector>

#include "bracekit/bracekit.hpp"
#include "oracles.hpp"

namespace bktest {

using namespace bracekit;

inline std::string data_path(const std::string& name) { return std::string(BRACEKIT_DATA_DIR) + "/" + name; }

inline SkewBrace load_brace(const std::string& name) { return brace_from_json(read_json_file(data_path(name))); }

inline Table2D table_of(std::size_t n, auto&& op) {
  Table2D t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = static_cast<Element>(op(a, b));
  return t;
}

/// The radical ring 2Z/8Z with x o y = x + y + xy. Index i stands for the
/// residue 2i, so {0,4} is the index set {0,2}.
inline SkewBrace ring_2z8z() {
  auto b = verify_brace(table_of(4, [](Element i, Element j) { return (i + j) % 4; }),
                        table_of(4, [](Element i, Element j) { return (i + j + 2 * i * j) % 4; }));
  return std::move(b).value();
}

/// Residue 2i -> index i.
inline Element r8(Element residue) { return residue / 2; }

/// S3 as composition of the six permutations of {0,1,2}, listed
/// lexicographically (identity first).
inline Table2D s3_table() {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return table_of(6, [&](Element a, Element b) {
    std::vector<Element> c(3);
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    return static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
  });
}

inline FiniteGroup s3() { return std::move(verify_group_axioms(s3_table())).value(); }

inline FiniteGroup c2x2() { return direct_product(cyclic_group(2), cyclic_group(2)); }

inline FiniteGroup elementary_abelian(std::size_t p, std::size_t k) {
  FiniteGroup g = cyclic_group(1);
  for (std::size_t i = 0; i < k; ++i) g = direct_product(g, cyclic_group(p));
  return g;
}

/// X = {0,1,2,3}, sigma_x = (0 1), tau_y = (2 3) for all x, y.
inline SetSolution constant_swaps_solution() {
  auto swap = [](Element a, Element b) {
    return [a, b](Element x) { return x == a ? b : x == b ? a : x; };
  };
  return make_solution(table_of(4, [&](Element, Element y) { return swap(0, 1)(y); }),
                       table_of(4, [&](Element, Element x) { return swap(2, 3)(x); }));
}

/// On C3 written additively: r(x, y) = (2y, x + 2y).
inline SetSolution c3_solution() {
  return make_solution(table_of(3, [](Element, Element y) { return 2 * y % 3; }),
                       table_of(3, [](Element y, Element x) { return (x + 2 * y) % 3; }));
}

inline ElementSet set_of(std::size_t n, std::initializer_list<Element> xs) { return ElementSet(n, xs); }

inline std::vector<SkewBrace> corpus(std::size_t max_order) {
  std::vector<SkewBrace> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for (auto& e : enumerate_braces(n).entries) out.push_back(e.brace);
  return out;
}

inline oracle::Brace raw(const SkewBrace& a) { return {a.additive().rows(), a.multiplicative().rows()}; }

inline oracle::Mask mask_of(const ElementSet& s) {
  oracle::Mask m = 0;
  for (auto x : s) m |= oracle::Mask{1} << x;
  return m;
}

}  // namespace bktest
