#pragma once

#include <optional>
#include <string>

#include "bracekit/errors.hpp"

namespace bracekit {

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

// Outcome of an exhaustive property check. A failure carries a witness;
// not_applicable means the hypotheses of the checked statement do not hold.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
  std::optional<Violation> witness;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }

  static CheckReport pass(std::string name, std::string detail = {}) {
    return {std::move(name), Verdict::pass, std::move(detail), std::nullopt};
  }
  static CheckReport fail(std::string name, Violation v) {
    auto d = v.describe();
    return {std::move(name), Verdict::fail, std::move(d), std::move(v)};
  }
  static CheckReport na(std::string name, std::string why) {
    return {std::move(name), Verdict::not_applicable, std::move(why), std::nullopt};
  }
};

}  // namespace bracekit
