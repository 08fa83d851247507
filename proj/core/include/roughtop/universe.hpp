#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roughtop/element_set.hpp"

namespace roughtop {

// Finite, ordered set of distinct element names. The declared order is the
// canonical order: element i is names()[i], and every serialized set lists
// its members in this order.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }

  std::optional<Element> find(std::string_view name) const;
  // Throws InputError naming the unknown token.
  Element at(std::string_view name) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }

  bool operator==(const Universe& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> names);

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

// Name of the pair (a,b) as used by every product construction.
std::string pair_name(std::string_view a, std::string_view b);

// Cartesian product: element (i, j) has index i * right.size() + j, so the
// canonical order is lexicographic in the component orders.
UniversePtr product_universe(const Universe& left, const Universe& right);

inline Element pair_index(std::size_t right_size, Element i, Element j) {
  return i * right_size + j;
}
inline std::pair<Element, Element> pair_components(std::size_t right_size, Element p) {
  return {p / right_size, p % right_size};
}

// A × B as a subset of product_universe.
ElementSet product_set(const ElementSet& a, const ElementSet& b);

// Universe holding just the members of `subset`, in canonical order, with
// the index maps between it and its parent.
struct Compaction {
  UniversePtr universe;
  std::vector<Element> to_parent;
  std::vector<std::optional<Element>> from_parent;

  ElementSet lift(const ElementSet& compact) const;
  ElementSet lower(const ElementSet& parent) const;
};

Compaction compact(const Universe& parent, const ElementSet& subset);

std::string format_set(const Universe& u, const ElementSet& s);
std::string format_family(const Universe& u, const Family& f);

}  // namespace roughtop
