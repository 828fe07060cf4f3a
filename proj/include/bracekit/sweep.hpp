#pragma once

// Invariants and property checks over a whole catalog.

#include <map>
#include <string>
#include <vector>

#include "bracekit/enumeration.hpp"
#include "bracekit/report.hpp"

namespace bracekit {

struct SweepRow {
  std::size_t index = 0;
  std::size_t additive_index = 0;
  BraceReport report;
  std::vector<CheckReport> checks;
};

struct CheckTally {
  std::string name;
  std::size_t pass = 0, fail = 0, not_applicable = 0;

  bool operator==(const CheckTally&) const = default;
};

struct SweepResult {
  std::size_t order = 0;
  EnumerationMethod method = EnumerationMethod::holomorph;
  std::vector<SweepRow> rows;
  std::vector<CheckTally> tallies;  // in check order
  std::size_t perfect_count = 0;
  /// Braces with nonabelian addition whose r_A is still involutive.
  std::size_t involutive_nonabelian_count = 0;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& t : tallies) f += t.fail;
    return f;
  }
};

/// Runs make_brace_report and run_all_checks on every entry, `jobs` braces
/// at a time; rows stay in catalog order.
inline SweepResult catalog_invariant_sweep(const BraceCatalog& cat, std::size_t jobs = 1,
                                           std::size_t bound = kDefaultLatticeBound) {
  SweepResult res;
  res.order = cat.order;
  res.method = cat.method;
  res.rows.resize(cat.entries.size());
  detail::parallel_for(cat.entries.size(), jobs, [&](std::size_t i) {
    const auto& e = cat.entries[i];
    res.rows[i] = {i, e.additive_index, make_brace_report(e.brace, bound), run_all_checks(e.brace, bound)};
  });
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < res.rows.size(); ++i) {
    const auto& row = res.rows[i];
    for (const auto& c : row.checks) {
      auto [it, fresh] = slot.emplace(c.name, res.tallies.size());
      if (fresh) res.tallies.push_back({c.name});
      auto& t = res.tallies[it->second];
      switch (c.verdict) {
        case Verdict::pass: ++t.pass; break;
        case Verdict::fail: ++t.fail; break;
        case Verdict::not_applicable: ++t.not_applicable; break;
      }
    }
    if (row.report.perfect) ++res.perfect_count;
    if (row.report.involutive_solution && !cat.entries[i].brace.additive().is_abelian()) ++res.involutive_nonabelian_count;
  }
  return res;
}

}  // namespace bracekit
