#pragma once

// Command-line front end. Exit codes: 0 success, 1 a mathematical check
// failed, 2 invalid input, 3 a resource bound was exceeded.

#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracekit/cache.hpp"
#include "bracekit/io.hpp"

namespace bracekit::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kBoundExceeded = 3 };

namespace detail {

template <class Range>
std::string set_string(const Range& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto x : r) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// ---- verify

inline int cmd_verify(Context& c, const std::string& path, bool json) {
  const auto j = read_json_file(path);
  if (j.is_object() && j.contains("table")) {
    auto g = verify_group_axioms(group_table_from_json(j));
    if (!g) {
      if (json) print_json(c.out, {{"valid", false}, {"violation", violation_to_json(g.violation())}});
      else c.out << "invalid group: " << g.violation().describe() << '\n';
      return kInvalidInput;
    }
    if (json) print_json(c.out, {{"valid", true}, {"kind", "group"}, {"order", g.value().order()}, {"group", identify_group(g.value())}});
    else c.out << "valid group\norder: " << g.value().order() << "\nidentified: " << identify_group(g.value()) << '\n';
    return kOk;
  }
  const auto t = brace_tables_from_json(j);
  auto b = verify_brace(t.add, t.circle);
  if (!b) {
    if (json) print_json(c.out, {{"valid", false}, {"violation", violation_to_json(b.violation())}});
    else c.out << "invalid: " << b.violation().describe() << '\n';
    return kInvalidInput;
  }
  const auto& a = b.value();
  const bool left = a.additive().is_abelian();
  if (json) {
    print_json(c.out, {{"valid", true},
                       {"kind", "skew brace"},
                       {"order", a.order()},
                       {"additive", identify_group(a.additive())},
                       {"circle", identify_group(a.multiplicative())},
                       {"left_brace", left},
                       {"trivial", a.is_trivial()}});
  } else {
    c.out << "valid skew brace\n"
          << "order: " << a.order() << '\n'
          << "additive group: " << identify_group(a.additive()) << '\n'
          << "circle group: " << identify_group(a.multiplicative()) << '\n'
          << "left brace (abelian addition): " << yes_no(left) << '\n'
          << "trivial: " << yes_no(a.is_trivial()) << '\n';
  }
  return kOk;
}

// ---- report

inline int cmd_report(Context& c, const std::string& path, bool json, std::size_t bound) {
  const auto a = brace_from_json(read_json_file(path));
  const auto r = make_brace_report(a, bound);
  if (json) {
    print_json(c.out, report_to_json(r));
    return kOk;
  }
  c.out << "order: " << r.order << '\n'
        << "additive group: " << r.additive << '\n'
        << "circle group: " << r.circle << '\n'
        << "Soc: " << set_string(r.socle) << '\n'
        << "Ann: " << set_string(r.annihilator) << '\n'
        << "Fix: " << set_string(r.fix) << '\n'
        << "A^(2): " << set_string(r.a2) << '\n'
        << "Rad: " << set_string(r.radical) << '\n'
        << "Rad': " << set_string(r.radical_prime) << '\n'
        << "ideals: " << r.ideal_count << " (" << r.maximal_ideal_count << " maximal)\n"
        << "weight: " << r.weight << " generated by " << set_string(r.weight_generators) << '\n'
        << "simple: " << yes_no(r.simple) << '\n'
        << "prime: " << yes_no(r.prime) << '\n'
        << "solvable: " << yes_no(r.solvable) << " (series length " << r.solvable_length << ")\n"
        << "perfect: " << yes_no(r.perfect) << '\n'
        << "A/Rad factor orders: " << set_string(r.factor_orders) << '\n'
        << "r_A involutive: " << yes_no(r.involutive_solution) << '\n';
  return kOk;
}

// ---- ideals

inline std::string ideal_label(const Ideal& i) {
  std::ostringstream os;
  os << i.members;
  return os.str();
}

inline int cmd_ideals(Context& c, const std::string& path, const std::string& dot, bool json, std::size_t bound) {
  const auto a = brace_from_json(read_json_file(path));
  const auto& ideals = all_ideals(a, bound);
  std::vector<IdealFlags> flags;
  for (const auto& i : ideals) flags.push_back(classify_ideal(a, i, bound));
  if (json) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < ideals.size(); ++k)
      arr.push_back({{"members", ideals[k].members.to_vector()},
                     {"maximal", flags[k].maximal},
                     {"prime", flags[k].prime},
                     {"small", flags[k].small}});
    print_json(c.out, {{"order", a.order()}, {"ideals", arr}});
  } else {
    c.out << ideals.size() << " ideals\n";
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      c.out << std::setw(3) << k << "  " << ideal_label(ideals[k]) << "  size " << ideals[k].size();
      if (flags[k].maximal) c.out << " maximal";
      if (flags[k].prime) c.out << " prime";
      if (flags[k].small) c.out << " small";
      c.out << '\n';
    }
  }
  if (!dot.empty()) {
    // Hasse diagram: edges are covering relations I < J.
    std::ostringstream g;
    g << "digraph ideals {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < ideals.size(); ++k) g << "  i" << k << " [label=\"" << ideal_label(ideals[k]) << "\"];\n";
    for (std::size_t lo = 0; lo < ideals.size(); ++lo)
      for (std::size_t hi = 0; hi < ideals.size(); ++hi) {
        if (lo == hi || !ideals[lo].subset_of(ideals[hi])) continue;
        bool covers = true;
        for (std::size_t mid = 0; mid < ideals.size() && covers; ++mid)
          if (mid != lo && mid != hi && ideals[lo].subset_of(ideals[mid]) && ideals[mid].subset_of(ideals[hi])) covers = false;
        if (covers) g << "  i" << lo << " -> i" << hi << ";\n";
      }
    g << "}\n";
    write_text_file(dot, g.str());
  }
  return kOk;
}

// ---- radical

inline int cmd_radical(Context& c, const std::string& path, bool json, std::size_t bound) {
  const auto a = brace_from_json(read_json_file(path));
  const auto r = radical(a, bound);
  if (json) {
    Json j{{"radical", r.radical.members.to_vector()},
           {"radical_prime", r.radical_prime.members.to_vector()},
           {"maximal_ideal_count", r.maximal_ideal_count},
           {"small_ideal_sum", r.small_ideal_sum.members.to_vector()}};
    j["non_generators"] = r.non_generators ? Json(r.non_generators->to_vector()) : Json(nullptr);
    print_json(c.out, j);
    return kOk;
  }
  c.out << "Rad: " << r.radical.members << '\n'
        << "Rad': " << r.radical_prime.members << '\n'
        << "maximal ideals: " << r.maximal_ideal_count << '\n'
        << "sum of small ideals: " << r.small_ideal_sum.members << '\n'
        << "non-generating elements: ";
  if (r.non_generators) c.out << *r.non_generators << '\n';
  else c.out << "skipped (order above subset bound)\n";
  return kOk;
}

// ---- weight

inline int cmd_weight(Context& c, const std::string& path, bool no_opt, bool json, std::size_t bound) {
  const auto a = brace_from_json(read_json_file(path));
  const auto w = weight(a, {!no_opt, bound});
  if (json) {
    print_json(c.out, {{"weight", w.weight},
                       {"generating_set", w.generating_set.to_vector()},
                       {"exhaustive", w.exhaustive},
                       {"search", no_opt ? "direct" : "radical-quotient"}});
  } else {
    c.out << "weight = " << w.weight << '\n' << "certificate: ideal generated by " << w.generating_set << " is A\n";
    if (w.exhaustive) c.out << "every smaller subset was refuted\n";
  }
  return kOk;
}

// ---- decompose

inline int cmd_decompose(Context& c, const std::string& path, bool json, std::size_t bound) {
  const auto a = brace_from_json(read_json_file(path));
  const auto d = wedderburn_decompose(a, bound);
  const auto check = verify_decomposition(d, bound);
  if (json) {
    Json factors = Json::array();
    for (std::size_t i = 0; i < d.factors.size(); ++i)
      factors.push_back({{"maximal_ideal", d.maximal_ideals[i].members.to_vector()},
                         {"order", d.factors[i].order()},
                         {"additive", identify_group(d.factors[i].additive())},
                         {"circle", identify_group(d.factors[i].multiplicative())}});
    print_json(c.out, {{"radical", d.radical.members.to_vector()},
                       {"factors", factors},
                       {"iso", d.iso.map},
                       {"check", check_to_json(check)}});
  } else {
    c.out << "Rad: " << d.radical.members << " (|A/Rad| = " << d.semisimple.brace.order() << ")\n";
    c.out << d.factors.size() << " simple factor(s)\n";
    for (std::size_t i = 0; i < d.factors.size(); ++i)
      c.out << "  A/" << d.maximal_ideals[i].members << ": order " << d.factors[i].order() << ", additive "
            << identify_group(d.factors[i].additive()) << ", circle " << identify_group(d.factors[i].multiplicative()) << '\n';
    c.out << "isomorphism A/Rad -> product: " << set_string(d.iso.map) << '\n';
    c.out << "verification: " << to_string(check.verdict) << (check.detail.empty() ? "" : " (" + check.detail + ")") << '\n';
  }
  return check.failed() ? kCheckFailed : kOk;
}

// ---- theoremcheck

struct NamedBrace {
  std::string source;
  SkewBrace brace;
};

inline std::vector<NamedBrace> collect_braces(const std::string& input, std::size_t corpus, const CacheOptions& cache) {
  std::vector<NamedBrace> out;
  if (corpus > 0) {
    for (std::size_t n = 1; n <= corpus; ++n) {
      const auto cat = cached_enumerate(n, EnumerationMethod::holomorph, cache);
      for (std::size_t i = 0; i < cat.size(); ++i)
        out.push_back({"order " + std::to_string(n) + " #" + std::to_string(i), cat.entries[i].brace});
    }
    return out;
  }
  if (input.empty()) throw InvalidInput("theoremcheck: give a brace file, a directory, or --corpus N");
  if (std::filesystem::is_directory(input)) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(input))
      if (e.path().extension() == ".json" && e.path().filename() != "manifest.json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back({f.filename().string(), brace_from_json(read_json_file(f))});
    return out;
  }
  out.push_back({input, brace_from_json(read_json_file(input))});
  return out;
}

inline int cmd_theoremcheck(Context& c, const std::string& input, std::size_t corpus, bool json, std::size_t bound,
                            std::size_t jobs, const CacheOptions& cache) {
  const auto braces = collect_braces(input, corpus, cache);
  std::vector<std::vector<CheckReport>> results(braces.size());
  bracekit::detail::parallel_for(braces.size(), jobs, [&](std::size_t i) { results[i] = run_all_checks(braces[i].brace, bound); });
  std::vector<CheckTally> tallies;
  for (const auto& rs : results)
    for (std::size_t k = 0; k < rs.size(); ++k) {
      if (tallies.size() <= k) tallies.push_back({rs[k].name});
      auto& t = tallies[k];
      (rs[k].passed() ? t.pass : rs[k].failed() ? t.fail : t.not_applicable)++;
    }
  std::size_t failures = 0;
  for (const auto& t : tallies) failures += t.fail;

  if (json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < braces.size(); ++i) {
      Json checks = Json::array();
      for (const auto& r : results[i]) checks.push_back(check_to_json(r));
      arr.push_back({{"source", braces[i].source}, {"order", braces[i].brace.order()}, {"checks", checks}});
    }
    print_json(c.out, {{"braces", arr}, {"tallies", tallies_to_json(tallies)}, {"failures", failures}});
  } else if (braces.size() == 1) {
    for (const auto& r : results[0])
      c.out << std::left << std::setw(28) << r.name << std::setw(5) << to_string(r.verdict) << ' ' << r.detail << '\n';
  } else {
    c.out << braces.size() << " braces\n" << std::left << std::setw(28) << "check" << " pass  fail    na\n";
    for (const auto& t : tallies)
      c.out << std::left << std::setw(28) << t.name << std::right << std::setw(5) << t.pass << std::setw(6) << t.fail
            << std::setw(6) << t.not_applicable << '\n';
    for (std::size_t i = 0; i < braces.size(); ++i)
      for (const auto& r : results[i])
        if (r.failed()) c.out << "FAIL " << braces[i].source << ": " << r.name << ": " << r.detail << '\n';
  }
  return failures ? kCheckFailed : kOk;
}

// ---- enumerate

inline int cmd_enumerate(Context& c, std::size_t n, const std::string& method, const std::string& out_dir, bool json,
                         const CacheOptions& cache) {
  const auto m = parse_method(method);
  const auto cat = cached_enumerate(n, m, cache);
  Json files = Json::array();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      std::ostringstream name;
      name << "brace-" << n << '-' << std::setw(3) << std::setfill('0') << i << ".json";
      write_text_file(std::filesystem::path(out_dir) / name.str(), brace_to_json(cat.entries[i].brace).dump(2) + "\n");
      files.push_back(name.str());
    }
    const Json manifest{{"order", n}, {"method", to_string(m)}, {"count", cat.size()}, {"files", files}};
    write_text_file(std::filesystem::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  }
  if (json) {
    Json counts = Json::array();
    for (const auto& [g, k] : cat.counts_by_additive) counts.push_back({{"additive", g}, {"count", k}});
    print_json(c.out, {{"order", n}, {"method", to_string(m)}, {"count", cat.size()}, {"by_additive", counts}});
  } else {
    c.out << cat.size() << " skew braces of order " << n << " (" << to_string(m) << ")\n";
    for (const auto& [g, k] : cat.counts_by_additive) c.out << "  additive " << g << ": " << k << '\n';
    if (!out_dir.empty()) c.out << "wrote " << cat.size() << " files and manifest.json to " << out_dir << '\n';
  }
  return kOk;
}

// ---- sweep

inline int cmd_sweep(Context& c, std::size_t n, bool exact, const std::string& format, const std::string& out_file,
                     const std::string& method, std::size_t jobs, std::size_t bound, const CacheOptions& cache) {
  const auto m = parse_method(method);
  std::vector<SweepResult> results;
  for (std::size_t k = exact ? n : 1; k <= n; ++k) results.push_back(catalog_invariant_sweep(cached_enumerate(k, m, cache), jobs, bound));
  std::size_t failures = 0;
  for (const auto& r : results) failures += r.failures();

  std::string text;
  if (format == "json") {
    Json orders = Json::array();
    for (const auto& r : results) orders.push_back(sweep_to_json(r));
    text = Json{{"max_order", n}, {"method", to_string(m)}, {"failures", failures}, {"orders", orders}}.dump(2) + "\n";
  } else if (format == "csv") {
    std::ostringstream os;
    for (const auto& r : results) {
      os << "# order " << r.order << '\n' << sweep_to_csv(r);
    }
    text = os.str();
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << "order " << r.order << ": " << r.rows.size() << " braces, " << r.perfect_count << " perfect, "
         << r.failures() << " failures\n";
      for (const auto& t : r.tallies)
        os << "  " << std::left << std::setw(28) << t.name << std::right << " pass " << std::setw(3) << t.pass << "  fail "
           << std::setw(3) << t.fail << "  na " << std::setw(3) << t.not_applicable << '\n';
    }
    text = os.str();
  }
  if (out_file.empty()) c.out << text;
  else write_text_file(out_file, text);
  return failures ? kCheckFailed : kOk;
}

// ---- ybe

inline void write_solution(Context& c, const SetSolution& s, const std::string& out_file) {
  const auto text = solution_to_json(s).dump(2) + "\n";
  if (out_file.empty()) c.out << text;
  else write_text_file(out_file, text);
}

inline int cmd_ybe_check(Context& c, const std::string& path, bool witness, bool json) {
  const auto s = solution_from_json(read_json_file(path));
  const auto r = check_solution(s);
  const char* injectivity = r.is_involutive ? "injective (involutive)" : "injectivity unknown";
  auto wit = [](const std::optional<Violation>& v) { return v ? violation_to_json(*v) : Json(nullptr); };
  if (json) {
    Json j{{"size", s.size},
           {"bijective", r.is_bijective},
           {"ybe", r.is_ybe},
           {"nondegenerate", r.is_nondegenerate},
           {"involutive", r.is_involutive},
           {"injectivity", injectivity}};
    if (witness)
      j["witnesses"] = {{"bijective", wit(r.bijective_witness)},
                        {"ybe", wit(r.ybe_witness)},
                        {"nondegenerate", wit(r.nondegenerate_witness)},
                        {"involutive", wit(r.involutive_witness)}};
    print_json(c.out, j);
  } else {
    auto line = [&](const char* what, bool ok, const std::optional<Violation>& v) {
      c.out << what << ": " << yes_no(ok);
      if (witness && v) c.out << "  [" << v->describe() << ']';
      c.out << '\n';
    };
    c.out << "size: " << s.size << '\n';
    line("bijective", r.is_bijective, r.bijective_witness);
    line("braid relation", r.is_ybe, r.ybe_witness);
    line("non-degenerate", r.is_nondegenerate, r.nondegenerate_witness);
    line("involutive", r.is_involutive, r.involutive_witness);
    c.out << "injectivity: " << injectivity << '\n';
  }
  return r.is_bijective && r.is_ybe ? kOk : kCheckFailed;
}

inline int cmd_ybe_group(Context& c, const std::string& path, std::size_t max_perm, bool json) {
  const auto s = solution_from_json(read_json_file(path));
  const auto g = permutation_group(s, max_perm);
  const auto orbits = solution_orbits(s);
  if (json) {
    print_json(c.out, {{"order", g.order}, {"generators", g.generators}, {"group_orbits", g.orbits}, {"solution_orbits", orbits}});
    return kOk;
  }
  c.out << "permutation group order: " << g.order << '\n' << "generators (sigma_x, one-line):";
  if (g.generators.empty()) c.out << " none (all identity)";
  c.out << '\n';
  for (const auto& p : g.generators) c.out << "  " << set_string(p) << '\n';
  c.out << "orbits of <sigma_x>: " << g.orbits.size() << '\n';
  c.out << "orbits of <sigma_x, tau_y>: " << orbits.size() << " ";
  for (const auto& o : orbits) c.out << set_string(o);
  c.out << '\n';
  return kOk;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bracekit: finite skew braces and set-theoretic Yang-Baxter solutions", "bracekit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kLibraryVersion);

  std::string path, dot, method = "holomorph", out_path, format = "text";
  bool json = false, no_opt = false, witness = false, no_cache = false, exact = false, csv = false;
  std::size_t bound = kDefaultLatticeBound, n = 0, corpus = 0, jobs = 1, max_perm = kDefaultPermutationBound;

  auto add_bound = [&](CLI::App* s) { s->add_option("--bound", bound, "largest order accepted by lattice computations"); };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "machine-readable output"); };
  auto add_cache = [&](CLI::App* s) {
    s->add_flag("--no-cache", no_cache, "ignore and do not write the catalog cache");
    s->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  };

  auto* verify = app.add_subcommand("verify", "check group or brace axioms of a JSON table file");
  verify->add_option("file", path, "group or brace JSON")->required();
  add_json(verify);

  auto* report = app.add_subcommand("report", "distinguished ideals and invariants of a brace");
  report->add_option("file", path)->required();
  add_json(report);
  add_bound(report);

  auto* ideals = app.add_subcommand("ideals", "ideal lattice with flags");
  ideals->add_option("file", path)->required();
  ideals->add_option("--dot", dot, "write the Hasse diagram as Graphviz to this file");
  add_json(ideals);
  add_bound(ideals);

  auto* rad = app.add_subcommand("radical", "radical, prime radical and their characterizations");
  rad->add_option("file", path)->required();
  add_json(rad);
  add_bound(rad);

  auto* wt = app.add_subcommand("weight", "minimal number of ideal generators, with certificate");
  wt->add_option("file", path)->required();
  wt->add_flag("--no-opt", no_opt, "search A directly instead of A/Rad(A)");
  add_json(wt);
  add_bound(wt);

  auto* dec = app.add_subcommand("decompose", "A/Rad(A) as a product of simple braces");
  dec->add_option("file", path)->required();
  add_json(dec);
  add_bound(dec);

  auto* thm = app.add_subcommand("theoremcheck", "run every property check on a brace, a directory, or the corpus");
  thm->add_option("input", path, "brace JSON file or directory of them");
  thm->add_option("--corpus", corpus, "check every brace of order 1..N instead");
  add_json(thm);
  add_bound(thm);
  add_cache(thm);

  auto* en = app.add_subcommand("enumerate", "all skew braces of order n up to isomorphism");
  en->add_option("n", n)->required();
  en->add_option("--method", method, "holomorph or exhaustive");
  en->add_option("--out", out_path, "directory for one JSON per class plus manifest.json");
  add_json(en);
  add_cache(en);

  auto* sw = app.add_subcommand("sweep", "invariants and checks over every brace of order 1..n");
  sw->add_option("n", n)->required();
  sw->add_flag("--exact", exact, "only order n");
  sw->add_flag("--json", json, "JSON table");
  sw->add_flag("--csv", csv, "CSV table");
  sw->add_option("--out", out_path, "write the table to this file");
  sw->add_option("--method", method, "holomorph or exhaustive");
  add_bound(sw);
  add_cache(sw);

  auto* ybe = app.add_subcommand("ybe", "set-theoretic Yang-Baxter solutions");
  ybe->require_subcommand(1);
  auto* ycheck = ybe->add_subcommand("check", "braid relation, non-degeneracy, involutivity");
  ycheck->add_option("file", path)->required();
  ycheck->add_flag("--witness", witness, "print failure witnesses");
  add_json(ycheck);
  auto* yfrom = ybe->add_subcommand("from-brace", "solution r_A of a brace");
  yfrom->add_option("file", path)->required();
  yfrom->add_option("--out", out_path);
  auto* yder = ybe->add_subcommand("derived", "derived solution (x,y) -> (y, y |> x)");
  yder->add_option("file", path)->required();
  yder->add_option("--out", out_path);
  auto* ygrp = ybe->add_subcommand("group", "permutation group generated by the sigma_x, and orbits");
  ygrp->add_option("file", path)->required();
  ygrp->add_option("--max-perm", max_perm, "closure size bound");
  add_json(ygrp);

  std::vector<const char*> argv{"bracekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  detail::Context c{out, err};
  const CacheOptions cache{!no_cache, std::nullopt, jobs};
  try {
    if (*verify) return detail::cmd_verify(c, path, json);
    if (*report) return detail::cmd_report(c, path, json, bound);
    if (*ideals) return detail::cmd_ideals(c, path, dot, json, bound);
    if (*rad) return detail::cmd_radical(c, path, json, bound);
    if (*wt) return detail::cmd_weight(c, path, no_opt, json, bound);
    if (*dec) return detail::cmd_decompose(c, path, json, bound);
    if (*thm) return detail::cmd_theoremcheck(c, path, corpus, json, bound, jobs, cache);
    if (*en) return detail::cmd_enumerate(c, n, method, out_path, json, cache);
    if (*sw) {
      if (json && csv) throw InvalidInput("sweep: choose one of --json and --csv");
      format = json ? "json" : csv ? "csv" : "text";
      return detail::cmd_sweep(c, n, exact, format, out_path, method, jobs, bound, cache);
    }
    if (*ycheck) return detail::cmd_ybe_check(c, path, witness, json);
    if (*yfrom) {
      detail::write_solution(c, solution_from_brace(brace_from_json(read_json_file(path))), out_path);
      return kOk;
    }
    if (*yder) {
      detail::write_solution(c, derived_solution(solution_from_json(read_json_file(path))), out_path);
      return kOk;
    }
    if (*ygrp) return detail::cmd_ybe_group(c, path, max_perm, json);
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace bracekit::cli
