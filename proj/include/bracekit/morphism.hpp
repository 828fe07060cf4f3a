#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "bracekit/errors.hpp"

namespace bracekit {

// A map between index sets preserving whichever operations the producing
// routine was asked to preserve (one table for group morphisms, both tables
// for brace morphisms).
struct BraceMorphism {
  std::vector<Element> map;
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  bool is_isomorphism = false;

  Element operator()(Element x) const { return map[x]; }

  /// (this after other): x -> this(other(x)).
  BraceMorphism after(const BraceMorphism& other) const {
    BraceMorphism r{std::vector<Element>(other.source_order), other.source_order, target_order,
                    is_isomorphism && other.is_isomorphism};
    for (std::size_t x = 0; x < other.source_order; ++x) r.map[x] = map[other.map[x]];
    return r;
  }
  BraceMorphism inverse() const {
    if (!is_isomorphism) throw std::logic_error("BraceMorphism::inverse on non-bijection");
    BraceMorphism r{std::vector<Element>(target_order), target_order, source_order, true};
    for (std::size_t x = 0; x < source_order; ++x) r.map[map[x]] = static_cast<Element>(x);
    return r;
  }
  static BraceMorphism identity(std::size_t n) {
    BraceMorphism r{std::vector<Element>(n), n, n, true};
    for (std::size_t x = 0; x < n; ++x) r.map[x] = static_cast<Element>(x);
    return r;
  }
  friend bool operator==(const BraceMorphism& a, const BraceMorphism& b) { return a.map == b.map; }
  friend bool operator<(const BraceMorphism& a, const BraceMorphism& b) { return a.map < b.map; }
};

namespace detail {

/// Flat n*n operation table, row-major.
struct TableRef {
  const std::vector<Element>* cells;
  std::size_t n;
  Element at(Element a, Element b) const { return (*cells)[a * n + b]; }
};

// Backtracking search for bijections f: src -> tgt with f(0) = 0 and
// f(t_src(x, y)) = t_tgt(f(x), f(y)) for every table pair. `generators` must
// generate src under tables[0]; images are restricted to elements with equal
// signature. Each complete assignment is handed to `visit`, which returns
// false to stop the search.
class IsomorphismSearch {
 public:
  static constexpr Element kUnset = kNoElement;

  IsomorphismSearch(std::span<const TableRef> src, std::span<const TableRef> tgt,
                    std::vector<Element> generators, std::span<const std::uint64_t> sig_src,
                    std::span<const std::uint64_t> sig_tgt)
      : src_(src.begin(), src.end()),
        tgt_(tgt.begin(), tgt.end()),
        gens_(std::move(generators)),
        sig_src_(sig_src.begin(), sig_src.end()),
        sig_tgt_(sig_tgt.begin(), sig_tgt.end()),
        n_(src.empty() ? 0 : src.front().n) {}

  void run(const std::function<bool(const std::vector<Element>&)>& visit) {
    if (n_ == 0 || tgt_.empty() || tgt_.front().n != n_) return;
    f_.assign(n_, kUnset);
    finv_.assign(n_, kUnset);
    trail_.clear();
    queue_.clear();
    if (!assign(0, 0) || !propagate()) return;
    stop_ = false;
    recurse(0, visit);
  }

 private:
  bool assign(Element x, Element y) {
    if (f_[x] == y) return true;
    if (f_[x] != kUnset || finv_[y] != kUnset || sig_src_[x] != sig_tgt_[y]) return false;
    f_[x] = y;
    finv_[y] = x;
    trail_.push_back(x);
    queue_.push_back(x);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Element x = queue_.back();
      queue_.pop_back();
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        const Element z = trail_[i];
        for (std::size_t t = 0; t < src_.size(); ++t) {
          if (!assign(src_[t].at(x, z), tgt_[t].at(f_[x], f_[z]))) return false;
          if (!assign(src_[t].at(z, x), tgt_[t].at(f_[z], f_[x]))) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      finv_[f_[x]] = kUnset;
      f_[x] = kUnset;
    }
    queue_.clear();
  }

  void recurse(std::size_t gi, const std::function<bool(const std::vector<Element>&)>& visit) {
    while (gi < gens_.size() && f_[gens_[gi]] != kUnset) ++gi;
    if (gi == gens_.size()) {
      if (trail_.size() == n_ && !visit(f_)) stop_ = true;
      return;
    }
    const Element g = gens_[gi];
    for (Element y = 0; y < n_ && !stop_; ++y) {
      if (finv_[y] != kUnset || sig_tgt_[y] != sig_src_[g]) continue;
      const std::size_t mark = trail_.size();
      if (assign(g, y) && propagate()) recurse(gi + 1, visit);
      undo(mark);
    }
  }

  std::vector<TableRef> src_, tgt_;
  std::vector<Element> gens_;
  std::vector<std::uint64_t> sig_src_, sig_tgt_;
  std::size_t n_;
  std::vector<Element> f_, finv_, trail_, queue_;
  bool stop_ = false;
};

}  // namespace detail
}  // namespace bracekit
