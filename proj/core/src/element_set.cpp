#include "roughtop/element_set.hpp"

#include <algorithm>
#include <cassert>

namespace roughtop {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

ElementSet::ElementSet(std::size_t universe_size)
    : size_(universe_size), words_(word_count(universe_size), 0) {}

ElementSet::ElementSet(std::size_t universe_size, std::initializer_list<Element> elements)
    : ElementSet(universe_size) {
  for (Element e : elements) {
    assert(e < size_);
    insert(e);
  }
}

ElementSet::ElementSet(std::size_t universe_size, const std::vector<Element>& elements)
    : ElementSet(universe_size) {
  for (Element e : elements) {
    assert(e < size_);
    insert(e);
  }
}

ElementSet ElementSet::full(std::size_t universe_size) {
  ElementSet s(universe_size);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

ElementSet ElementSet::singleton(std::size_t universe_size, Element e) {
  ElementSet s(universe_size);
  s.insert(e);
  return s;
}

void ElementSet::trim() {
  const std::size_t tail = size_ & 63;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Element ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return size_;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  if (auto c = count() <=> other.count(); c != 0) return c;
  // Equal cardinality: the set holding the smallest element of the symmetric
  // difference comes first in the lexicographic order of ascending lists.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (words_[i] & lowest) != 0 ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void canonicalize(Family& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

Family canonical(Family family) {
  canonicalize(family);
  return family;
}

bool family_contains(const Family& canonical_family, const ElementSet& s) {
  return std::binary_search(canonical_family.begin(), canonical_family.end(), s);
}

}  // namespace roughtop
