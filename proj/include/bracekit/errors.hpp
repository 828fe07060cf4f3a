#pragma once

// Error vocabulary shared by every bracekit module.
//
// Axiom checks return a Checked<T>: either the validated value or a
// Violation naming the failed axiom together with witness indices.
// Contract breaches (bad input, exceeded resource bounds) throw.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bracekit {

using Element = std::uint32_t;

/// Sentinel for "no element assigned".
inline constexpr Element kNoElement = static_cast<Element>(-1);

/// Default bound on the order of structures handed to exhaustive lattice
/// operations (normal subgroups, ideals, automorphisms).
inline constexpr std::size_t kDefaultLatticeBound = 16;

struct Violation {
  std::string axiom;              // short machine-friendly tag
  std::vector<Element> witness;   // indices exhibiting the failure
  std::string detail;             // human-readable explanation

  std::string describe() const {
    std::ostringstream os;
    os << axiom;
    if (!witness.empty()) {
      os << " (witness:";
      for (auto w : witness) os << ' ' << w;
      os << ')';
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

/// Result of a verification: a value or the first violated axiom.
template <class T>
class Checked {
 public:
  Checked(T value) : state_(std::move(value)) {}
  Checked(Violation v) : state_(std::move(v)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Checked::value on violation: " + violation().describe());
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Checked::value on violation: " + violation().describe());
    return std::get<T>(std::move(state_));
  }
  const Violation& violation() const& { return std::get<Violation>(state_); }

 private:
  std::variant<T, Violation> state_;
};

/// Malformed or mathematically invalid input (CLI exit code 2).
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
  InvalidInput(const Violation& v) : std::runtime_error(v.describe()), violation_(v) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

/// A configured resource bound was exceeded (CLI exit code 3).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_bound(std::size_t order, std::size_t bound, const char* what) {
  if (order > bound) {
    throw BoundExceeded(std::string(what) + ": order " + std::to_string(order) +
                        " exceeds configured bound " + std::to_string(bound));
  }
}

}  // namespace bracekit
