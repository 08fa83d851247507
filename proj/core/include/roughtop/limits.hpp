#pragma once

#include <cstddef>

namespace roughtop {

struct Limits {
  // Largest universe any constructor (including products) may build.
  std::size_t universe_cap = 64;
  // Largest G whose power set enumerate_rough_subgroups will walk.
  std::size_t enumeration_cap = 20;
  // Largest carrier for which all self-bijections are enumerated.
  std::size_t bijection_cap = 8;
};

}  // namespace roughtop
