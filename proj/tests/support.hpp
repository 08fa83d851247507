#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "roughtop/approx.hpp"
#include "roughtop/element_set.hpp"
#include "roughtop/errors.hpp"
#include "roughtop/universe.hpp"
#include "roughtop/workspace.hpp"

namespace support {

using namespace roughtop;

inline std::string fixture_path(const std::string& name) {
  return std::string(ROUGHTOP_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Workspace load(const std::string& fixture, const Limits& limits = {}) {
  return parse_workspace(read_file(fixture_path(fixture)), limits);
}

inline oracle::Mask mask(const ElementSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](Element e) { m |= oracle::Mask{1} << e; });
  return m;
}

inline ElementSet from_mask(std::size_t n, oracle::Mask m) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m >> i & 1) s.insert(i);
  }
  return s;
}

inline UniversePtr numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return make_universe(std::move(names));
}

// Integers mod n under addition, with the given blocks.
inline ApproxSpacePtr cyclic(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  auto u = numbered(n);
  std::vector<ElementSet> bs;
  for (const auto& b : blocks) bs.emplace_back(n, b);
  std::vector<Element> entries;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) entries.push_back((a + b) % n);
  }
  return std::make_shared<const ApproxSpace>(Partition(u, std::move(bs)), CayleyTable(u, std::move(entries)));
}

inline ElementSet named(const Universe& u, std::initializer_list<const char*> names) {
  ElementSet s = u.empty_set();
  for (const char* n : names) s.insert(u.at(n));
  return s;
}

inline Family named_family(const Universe& u,
                           std::initializer_list<std::initializer_list<const char*>> sets) {
  Family f;
  for (const auto& s : sets) f.push_back(named(u, s));
  return canonical(std::move(f));
}

}  // namespace support
