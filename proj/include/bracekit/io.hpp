#pragma once

// JSON formats:
//   group     {"order": n, "table": [[...]]}
//   brace     {"order": n, "add": [[...]], "circle": [[...]]}
//   solution  {"size": n, "sigma": [[...]], "tau": [[...]]}
//   manifest  {"order": n, "method": s, "count": k, "files": [...]}

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bracekit/sweep.hpp"

namespace bracekit {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text, const std::string& what = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(what + ": not valid JSON (" + e.what() + ")");
  }
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

namespace detail {

inline std::size_t json_size(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw InvalidInput(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

// Entry-level range checks are left to the axiom verifiers, which report
// row/column positions; only the JSON types are checked here.
inline Table2D json_table(const Json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  const auto& t = j.at(key);
  if (!t.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array of rows");
  if (t.size() != n)
    throw InvalidInput(std::string("field '") + key + "' has " + std::to_string(t.size()) + " rows, order is " + std::to_string(n));
  Table2D out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!t[i].is_array()) throw InvalidInput(std::string(key) + ": row " + std::to_string(i) + " is not an array");
    for (std::size_t c = 0; c < t[i].size(); ++c) {
      const auto& v = t[i][c];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<Element>::max() - 1)
        throw InvalidInput(std::string(key) + ": entry (" + std::to_string(i) + "," + std::to_string(c) + ") is not an element index");
      out[i].push_back(v.get<Element>());
    }
  }
  return out;
}

inline Json members_json(const ElementSet& s) { return s.to_vector(); }

}  // namespace detail

// ---- groups

inline Json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.rows()}}; }

inline Table2D group_table_from_json(const Json& j) { return detail::json_table(j, "table", detail::json_size(j, "order")); }

/// Parses and verifies; throws InvalidInput carrying the violation.
inline FiniteGroup group_from_json(const Json& j) {
  auto g = verify_group_axioms(group_table_from_json(j));
  if (!g) throw InvalidInput(g.violation());
  return std::move(g).value();
}

// ---- braces

struct BraceTables {
  Table2D add, circle;
};

inline BraceTables brace_tables_from_json(const Json& j) {
  const auto n = detail::json_size(j, "order");
  return {detail::json_table(j, "add", n), detail::json_table(j, "circle", n)};
}

inline Json brace_to_json(const SkewBrace& a) {
  return {{"order", a.order()}, {"add", a.additive().rows()}, {"circle", a.multiplicative().rows()}};
}

inline SkewBrace brace_from_json(const Json& j) {
  auto t = brace_tables_from_json(j);
  auto b = verify_brace(t.add, t.circle);
  if (!b) throw InvalidInput(b.violation());
  return std::move(b).value();
}

// ---- solutions

inline Json solution_to_json(const SetSolution& s) {
  return {{"size", s.size}, {"sigma", sigma_rows(s)}, {"tau", tau_rows(s)}};
}

inline SetSolution solution_from_json(const Json& j) {
  const auto n = detail::json_size(j, "size");
  return make_solution(detail::json_table(j, "sigma", n), detail::json_table(j, "tau", n));
}

// ---- reports

inline Json violation_to_json(const Violation& v) {
  return {{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}};
}

inline Json check_to_json(const CheckReport& c) {
  Json j{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}};
  if (c.witness) j["witness"] = violation_to_json(*c.witness);
  return j;
}

inline Json report_to_json(const BraceReport& r) {
  return {{"order", r.order},
          {"additive", r.additive},
          {"circle", r.circle},
          {"socle", r.socle},
          {"annihilator", r.annihilator},
          {"fix", r.fix},
          {"a2", r.a2},
          {"radical", r.radical},
          {"radical_prime", r.radical_prime},
          {"ideal_count", r.ideal_count},
          {"maximal_ideal_count", r.maximal_ideal_count},
          {"weight", r.weight},
          {"weight_generators", r.weight_generators},
          {"simple", r.simple},
          {"prime", r.prime},
          {"solvable", r.solvable},
          {"perfect", r.perfect},
          {"solvable_length", r.solvable_length},
          {"factor_orders", r.factor_orders},
          {"involutive_solution", r.involutive_solution}};
}

inline BraceReport report_from_json(const Json& j) {
  try {
    BraceReport r;
    j.at("order").get_to(r.order);
    j.at("additive").get_to(r.additive);
    j.at("circle").get_to(r.circle);
    j.at("socle").get_to(r.socle);
    j.at("annihilator").get_to(r.annihilator);
    j.at("fix").get_to(r.fix);
    j.at("a2").get_to(r.a2);
    j.at("radical").get_to(r.radical);
    j.at("radical_prime").get_to(r.radical_prime);
    j.at("ideal_count").get_to(r.ideal_count);
    j.at("maximal_ideal_count").get_to(r.maximal_ideal_count);
    j.at("weight").get_to(r.weight);
    j.at("weight_generators").get_to(r.weight_generators);
    j.at("simple").get_to(r.simple);
    j.at("prime").get_to(r.prime);
    j.at("solvable").get_to(r.solvable);
    j.at("perfect").get_to(r.perfect);
    j.at("solvable_length").get_to(r.solvable_length);
    j.at("factor_orders").get_to(r.factor_orders);
    j.at("involutive_solution").get_to(r.involutive_solution);
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

inline Json tallies_to_json(const std::vector<CheckTally>& tallies) {
  Json arr = Json::array();
  for (const auto& t : tallies)
    arr.push_back({{"name", t.name}, {"pass", t.pass}, {"fail", t.fail}, {"na", t.not_applicable}});
  return arr;
}

inline Json sweep_to_json(const SweepResult& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    rows.push_back({{"index", r.index}, {"additive_index", r.additive_index}, {"report", report_to_json(r.report)},
                    {"checks", checks}});
  }
  return {{"order", s.order},
          {"method", to_string(s.method)},
          {"count", s.rows.size()},
          {"perfect_count", s.perfect_count},
          {"involutive_nonabelian_count", s.involutive_nonabelian_count},
          {"tallies", tallies_to_json(s.tallies)},
          {"braces", rows}};
}

inline std::string sweep_to_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "index,additive,circle,socle,annihilator,a2,radical,radical_prime,ideals,maximal,weight,simple,solvable,perfect,"
        "factors";
  if (!s.rows.empty())
    for (const auto& c : s.rows.front().checks) os << ',' << c.name;
  os << '\n';
  for (const auto& r : s.rows) {
    const auto& p = r.report;
    os << r.index << ",\"" << p.additive << "\",\"" << p.circle << "\"," << p.socle.size() << ',' << p.annihilator.size()
       << ',' << p.a2.size() << ',' << p.radical.size() << ',' << p.radical_prime.size() << ',' << p.ideal_count << ','
       << p.maximal_ideal_count << ',' << p.weight << ',' << p.simple << ',' << p.solvable << ',' << p.perfect << ",\"";
    for (std::size_t i = 0; i < p.factor_orders.size(); ++i) os << (i ? " " : "") << p.factor_orders[i];
    os << '"';
    for (const auto& c : r.checks) os << ',' << to_string(c.verdict);
    os << '\n';
  }
  return os.str();
}

}  // namespace bracekit
