#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace roughtop {

// Index of an element in the canonical order of its universe.
using Element = std::size_t;

// Subset of a finite universe, stored as a bitset over the canonical order.
//
// Two sets are only comparable when they range over universes of the same
// size; mixing sizes is a programming error and is asserted in debug builds.
// Ordering (operator<=>) is the canonical family order used for every
// serialized family: smaller cardinality first, then lexicographic on the
// ascending element lists.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size);
  ElementSet(std::size_t universe_size, std::initializer_list<Element> elements);
  ElementSet(std::size_t universe_size, const std::vector<Element>& elements);

  static ElementSet full(std::size_t universe_size);
  static ElementSet singleton(std::size_t universe_size, Element e);

  std::size_t universe_size() const { return size_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(Element e) const {
    return e < size_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  // Smallest element, or universe_size() when empty.
  Element first() const;
  std::vector<Element> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>((w << 6) + bit));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  // Complement relative to the whole universe.
  ElementSet complement() const;

  bool operator==(const ElementSet& other) const = default;
  std::strong_ordering operator<=>(const ElementSet& other) const;

  std::size_t hash() const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// A family of subsets. Canonical families are sorted by ElementSet ordering
// and free of duplicates.
using Family = std::vector<ElementSet>;

void canonicalize(Family& family);
Family canonical(Family family);
bool family_contains(const Family& canonical_family, const ElementSet& s);

}  // namespace roughtop
