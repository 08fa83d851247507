#include "roughtop/universe.hpp"

#include "roughtop/errors.hpp"

namespace roughtop {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (Element i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty element name");
    if (!index_.emplace(names_[i], i).second) {
      throw InputError("duplicate element name '" + names_[i] + "'");
    }
  }
}

std::optional<Element> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Universe::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InputError("element '" + std::string(name) + "' is not in the universe");
}

UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

std::string pair_name(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

UniversePtr product_universe(const Universe& left, const Universe& right) {
  std::vector<std::string> names;
  names.reserve(left.size() * right.size());
  for (const auto& a : left.names()) {
    for (const auto& b : right.names()) names.push_back(pair_name(a, b));
  }
  return make_universe(std::move(names));
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  const std::size_t m = b.universe_size();
  ElementSet out(a.universe_size() * m);
  a.for_each([&](Element i) { b.for_each([&](Element j) { out.insert(pair_index(m, i, j)); }); });
  return out;
}

ElementSet Compaction::lift(const ElementSet& s) const {
  ElementSet out(from_parent.size());
  s.for_each([&](Element e) { out.insert(to_parent[e]); });
  return out;
}

ElementSet Compaction::lower(const ElementSet& s) const {
  ElementSet out(to_parent.size());
  s.for_each([&](Element e) {
    if (from_parent[e]) out.insert(*from_parent[e]);
  });
  return out;
}

Compaction compact(const Universe& parent, const ElementSet& subset) {
  Compaction c;
  c.from_parent.assign(parent.size(), std::nullopt);
  std::vector<std::string> names;
  subset.for_each([&](Element e) {
    c.from_parent[e] = c.to_parent.size();
    c.to_parent.push_back(e);
    names.push_back(parent.name(e));
  });
  c.universe = make_universe(std::move(names));
  return c;
}

std::string format_set(const Universe& u, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ' ';
    out += u.name(e);
    first = false;
  });
  out += '}';
  return out;
}

std::string format_family(const Universe& u, const Family& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ' ';
    out += format_set(u, f[i]);
  }
  return out;
}

}  // namespace roughtop
