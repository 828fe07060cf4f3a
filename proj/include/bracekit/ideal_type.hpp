#pragma once

#include <compare>

#include "bracekit/element_set.hpp"

namespace bracekit {

// An ideal (or, where a routine says so, a left ideal) of a skew brace.
struct Ideal {
  ElementSet members;

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const { return members.contains(x); }
  bool subset_of(const Ideal& o) const { return members.subset_of(o.members); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) { return a.members <=> b.members; }
};

}  // namespace bracekit
