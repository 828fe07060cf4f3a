#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <vector>

#include "bracekit/errors.hpp"

namespace bracekit {

// A subset of {0, ..., n-1} with bitset storage. Iteration is always in
// increasing index order so every search built on top is reproducible.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members) : ElementSet(universe) {
    for (auto m : members) insert(m);
  }
  template <class Range>
  static ElementSet from(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<Element>(m));
    return s;
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (Element i = 0; i < universe; ++i) s.insert(i);
    return s;
  }
  static ElementSet zero(std::size_t universe) { return ElementSet(universe, {0}); }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x / kBits] >> (x % kBits)) & 1u);
  }
  /// Returns true when x was not yet a member.
  bool insert(Element x) {
    Word& w = words_[x / kBits];
    const Word bit = Word{1} << (x % kBits);
    const bool fresh = !(w & bit);
    w |= bit;
    return fresh;
  }
  void erase(Element x) { words_[x / kBits] &= ~(Word{1} << (x % kBits)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const noexcept { return size() == universe_; }
  /// True for {0} (the zero ideal) and for the empty set.
  bool is_trivial() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~(i == 0 ? Word{1} : Word{0})) return false;
    }
    return true;
  }

  bool subset_of(const ElementSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Total order: by size, then by sorted member list.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (auto c = *ia <=> *ib; c != 0) return c;
    }
    return a.universe_ <=> b.universe_;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    iterator(const ElementSet* s, std::size_t pos) : set_(s), pos_(pos) { advance(); }
    Element operator*() const { return static_cast<Element>(pos_); }
    iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    void advance() {
      while (pos_ < set_->universe_) {
        const Word w = set_->words_[pos_ / kBits] >> (pos_ % kBits);
        if (w) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = (pos_ / kBits + 1) * kBits;
      }
      pos_ = set_->universe_;
    }
    const ElementSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, universe_); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  /// Hash-friendly raw words.
  const std::vector<Word>& words() const noexcept { return words_; }

  friend std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
    os << '{';
    bool first = true;
    for (auto x : s) {
      os << (first ? "" : ",") << x;
      first = false;
    }
    return os << '}';
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = s.universe();
    for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h << 6) + (h >> 2));
    return h;
  }
};

}  // namespace bracekit
