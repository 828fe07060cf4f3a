#pragma once

// All skew braces of a small order up to isomorphism.
//
// holomorph: for each additive group G, search maps lambda: G -> Aut(G) with
// lambda_0 = id and lambda_{a + lambda_a(b)} = lambda_a lambda_b. These are
// exactly the regular subgroups {x -> a + lambda_a(x)} of Hol(G), and
// a o b = a + lambda_a(b). Classes are taken modulo conjugation by Aut(G).
//
// exhaustive: brute force over circle tables compatible with a fixed
// additive table, deduplicated with the generic isomorphism test. Independent
// of the holomorph code path; used as an oracle for small orders.

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group_catalog.hpp"

namespace bracekit {

enum class EnumerationMethod { holomorph, exhaustive };

inline const char* to_string(EnumerationMethod m) {
  return m == EnumerationMethod::holomorph ? "holomorph" : "exhaustive";
}

inline EnumerationMethod parse_method(const std::string& s) {
  if (s == "holomorph") return EnumerationMethod::holomorph;
  if (s == "exhaustive") return EnumerationMethod::exhaustive;
  throw InvalidInput("unknown enumeration method '" + s + "' (expected holomorph or exhaustive)");
}

inline constexpr std::size_t kHolomorphMaxOrder = kCatalogMaxOrder;
inline constexpr std::size_t kExhaustiveMaxOrder = 5;

struct CatalogEntry {
  SkewBrace brace;
  std::size_t additive_index = 0;  // position in small_groups(order)
};

struct BraceCatalog {
  std::size_t order = 0;
  EnumerationMethod method = EnumerationMethod::holomorph;
  std::vector<CatalogEntry> entries;
  std::vector<std::pair<std::string, std::size_t>> counts_by_additive;  // catalogue order

  std::size_t size() const { return entries.size(); }
};

namespace detail {

// Maps lambda: G -> Aut(G) satisfying the brace condition, as circle tables.
class LambdaSearch {
 public:
  LambdaSearch(const FiniteGroup& g, std::vector<std::vector<Element>> auts) : g_(g), n_(g.order()), auts_(std::move(auts)) {
    const std::size_t k = auts_.size();
    std::map<std::vector<Element>, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index.emplace(auts_[i], i);
    compose_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Element> c(n_);
        for (std::size_t x = 0; x < n_; ++x) c[x] = auts_[i][auts_[j][x]];
        compose_[i * k + j] = index.at(c);
      }
    std::vector<Element> id(n_);
    std::iota(id.begin(), id.end(), Element{0});
    identity_ = index.at(id);

    allowed_.assign(n_ * k, false);
    candidates_.assign(n_, {});
    for (Element a = 0; a < n_; ++a)
      for (std::size_t i = 0; i < k; ++i)
        if (uniform_cycles(a, i)) {
          allowed_[a * k + i] = true;
          candidates_[a].push_back(i);
        }
  }

  // Visits the circle table of each solution.
  template <class Visit>
  void run(Visit&& visit) {
    lam_.assign(n_, kUnsetAut);
    trail_.clear();
    if (!assign(0, identity_)) return;
    dfs(visit);
  }

 private:
  static constexpr std::size_t kUnsetAut = static_cast<std::size_t>(-1);

  // x -> a + phi(x) must be a regular-action element: all cycles of one
  // length dividing n.
  bool uniform_cycles(Element a, std::size_t phi) const {
    std::vector<bool> seen(n_, false);
    std::size_t len = 0;
    for (Element s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::size_t l = 0;
      Element x = s;
      do {
        seen[x] = true;
        x = g_.op(a, auts_[phi][x]);
        ++l;
      } while (x != s);
      if (len == 0) len = l;
      else if (l != len) return false;
    }
    return n_ % len == 0;
  }

  bool assign(Element a, std::size_t phi) {
    std::vector<std::pair<Element, std::size_t>> queue{{a, phi}};
    while (!queue.empty()) {
      auto [x, f] = queue.back();
      queue.pop_back();
      if (lam_[x] != kUnsetAut) {
        if (lam_[x] != f) return false;
        continue;
      }
      if (!allowed_[x * auts_.size() + f]) return false;
      lam_[x] = f;
      trail_.push_back(x);
      for (Element y = 0; y < n_; ++y) {
        if (lam_[y] == kUnsetAut) continue;
        const Element xy = g_.op(x, auts_[f][y]);
        queue.emplace_back(xy, compose_[f * auts_.size() + lam_[y]]);
        const Element yx = g_.op(y, auts_[lam_[y]][x]);
        queue.emplace_back(yx, compose_[lam_[y] * auts_.size() + f]);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      lam_[trail_.back()] = kUnsetAut;
      trail_.pop_back();
    }
  }

  template <class Visit>
  void dfs(Visit& visit) {
    Element a = 0;
    while (a < n_ && lam_[a] != kUnsetAut) ++a;
    if (a == n_) {
      std::vector<Element> circle(n_ * n_);
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y) circle[x * n_ + y] = g_.op(x, auts_[lam_[x]][y]);
      visit(circle);
      return;
    }
    for (auto phi : candidates_[a]) {
      const std::size_t mark = trail_.size();
      if (assign(a, phi)) dfs(visit);
      undo(mark);
    }
  }

  const FiniteGroup& g_;
  std::size_t n_;
  std::vector<std::vector<Element>> auts_;
  std::vector<std::size_t> compose_;
  std::size_t identity_ = 0;
  std::vector<bool> allowed_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> lam_;
  std::vector<Element> trail_;
};

// Least relabelling of a circle table under Aut(G): psi(a) o' psi(b) = psi(a o b).
inline std::vector<Element> canonical_circle(const std::vector<Element>& circle, std::size_t n,
                                             const std::vector<std::vector<Element>>& auts) {
  std::vector<Element> best, cur(n * n);
  for (const auto& psi : auts) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) cur[psi[a] * n + psi[b]] = psi[circle[a * n + b]];
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

inline Table2D unflatten(const std::vector<Element>& cells, std::size_t n) {
  Table2D t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = cells[i * n + j];
  return t;
}

inline SkewBrace checked_brace(const FiniteGroup& g, const std::vector<Element>& circle) {
  auto b = verify_brace(g.rows(), unflatten(circle, g.order()));
  if (!b) throw std::logic_error("enumeration produced an invalid brace: " + b.violation().describe());
  return std::move(b).value();
}

inline std::vector<SkewBrace> holomorph_braces(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> auts;
  for (auto& m : automorphism_group(g, std::max(n, kDefaultLatticeBound))) auts.push_back(std::move(m.map));
  std::set<std::vector<Element>> classes;
  LambdaSearch search(g, auts);
  search.run([&](const std::vector<Element>& circle) { classes.insert(canonical_circle(circle, n, auts)); });
  std::vector<SkewBrace> out;
  for (const auto& c : classes) out.push_back(checked_brace(g, c));
  return out;
}

// Rows a -> (b -> a o b) with row[0] = a and a o (b + c) = a o b - a + a o c.
inline std::vector<std::vector<Element>> compatible_rows(const FiniteGroup& g, Element a) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> rows;
  std::vector<Element> rest;
  for (Element x = 0; x < n; ++x)
    if (x != a) rest.push_back(x);
  do {
    std::vector<Element> row{a};
    row.insert(row.end(), rest.begin(), rest.end());
    bool ok = true;
    for (Element b = 0; b < n && ok; ++b)
      for (Element c = 0; c < n && ok; ++c)
        ok = row[g.op(b, c)] == g.op(g.op(row[b], g.inverse(a)), row[c]);
    if (ok) rows.push_back(std::move(row));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return rows;
}

inline std::vector<SkewBrace> exhaustive_braces(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::vector<Element>>> options(n);
  for (Element a = 0; a < n; ++a) options[a] = compatible_rows(g, a);
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), Element{0});
  // The two identities coincide, so row 0 is the identity.
  std::erase_if(options[0], [&](const auto& r) { return r != id; });

  std::vector<SkewBrace> found;
  std::vector<std::vector<Element>> chosen(n);
  std::vector<std::vector<bool>> column_used(n, std::vector<bool>(n, false));
  auto rec = [&](auto&& self, Element a) -> void {
    if (a == n) {
      std::vector<Element> cells;
      for (const auto& r : chosen) cells.insert(cells.end(), r.begin(), r.end());
      auto circle = verify_group_axioms(unflatten(cells, n));
      if (!circle) return;
      auto b = verify_brace(g.rows(), unflatten(cells, n));
      if (!b) return;
      for (const auto& f : found)
        if (brace_isomorphic(f, b.value())) return;
      found.push_back(std::move(b).value());
      return;
    }
    for (const auto& row : options[a]) {
      bool ok = true;
      for (Element b = 0; b < n && ok; ++b) ok = !column_used[b][row[b]];
      if (!ok) continue;
      for (Element b = 0; b < n; ++b) column_used[b][row[b]] = true;
      chosen[a] = row;
      self(self, a + 1);
      for (Element b = 0; b < n; ++b) column_used[b][row[b]] = false;
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end(), [](const SkewBrace& x, const SkewBrace& y) {
    return x.multiplicative().cells() < y.multiplicative().cells();
  });
  return found;
}

inline std::size_t resolve_jobs(std::size_t jobs) {
  if (jobs != 0) return jobs;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Runs f(i) for i in [0, count) on up to `jobs` threads; results are
// written by index so output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t count, std::size_t jobs, F&& f) {
  jobs = std::min(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  for (std::size_t t = 0; t < jobs; ++t)
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    }));
  for (auto& w : workers) w.get();  // rethrows the first worker exception
}

}  // namespace detail

/// Isomorphism-class representatives of all skew braces of order n, sorted
/// by additive group (catalogue order) then circle table. Additive groups
/// are searched in parallel with `jobs` threads (0 = hardware concurrency).
inline BraceCatalog enumerate_braces(std::size_t n, EnumerationMethod method = EnumerationMethod::holomorph,
                                     std::size_t jobs = 1) {
  const std::size_t limit = method == EnumerationMethod::holomorph ? kHolomorphMaxOrder : kExhaustiveMaxOrder;
  if (n == 0 || n > limit)
    throw InvalidInput(std::string("enumerate_braces: ") + to_string(method) + " supports orders 1.." + std::to_string(limit));
  const auto& groups = small_groups(n);
  std::vector<std::vector<SkewBrace>> per_group(groups.size());
  detail::parallel_for(groups.size(), jobs, [&](std::size_t i) {
    per_group[i] = method == EnumerationMethod::holomorph ? detail::holomorph_braces(groups[i].group)
                                                          : detail::exhaustive_braces(groups[i].group);
  });
  BraceCatalog cat;
  cat.order = n;
  cat.method = method;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    cat.counts_by_additive.emplace_back(groups[i].name, per_group[i].size());
    for (auto& b : per_group[i]) cat.entries.push_back({std::move(b), i});
  }
  return cat;
}

}  // namespace bracekit
