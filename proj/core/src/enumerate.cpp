#include "roughtop/enumerate.hpp"

#include <algorithm>
#include <cstdint>

#include "roughtop/errors.hpp"

namespace roughtop {

namespace {

// Depth-first construction of the reflexive, transitive relations on k
// points. Off-diagonal pairs are decided in a fixed order; a branch is cut as
// soon as a decided pair is forced by transitivity but was set to false.
class PreorderWalk {
 public:
  explicit PreorderWalk(std::size_t k) : k_(k), rel_(k * k, false), decided_(k * k, false) {
    for (std::size_t i = 0; i < k; ++i) {
      rel_[i * k + i] = true;
      decided_[i * k + i] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j) pairs_.emplace_back(i, j);
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    step(0, visit);
  }

 private:
  bool consistent_so_far() const {
    // Any violation x<=y, y<=z, not x<=z among decided pairs can never be
    // repaired later.
    for (std::size_t x = 0; x < k_; ++x) {
      for (std::size_t y = 0; y < k_; ++y) {
        if (!rel_[x * k_ + y]) continue;
        for (std::size_t z = 0; z < k_; ++z) {
          if (rel_[y * k_ + z] && !rel_[x * k_ + z] && decided_[x * k_ + z]) return false;
        }
      }
    }
    return true;
  }

  template <typename Visit>
  void step(std::size_t index, Visit& visit) {
    if (index == pairs_.size()) {
      visit(rel_);
      return;
    }
    const auto [i, j] = pairs_[index];
    for (bool value : {false, true}) {
      rel_[i * k_ + j] = value;
      decided_[i * k_ + j] = true;
      if (consistent_so_far()) step(index + 1, visit);
      decided_[i * k_ + j] = false;
    }
    rel_[i * k_ + j] = false;
  }

  std::size_t k_;
  std::vector<bool> rel_;
  std::vector<bool> decided_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace

std::vector<FiniteTopology> enumerate_topologies(const UniversePtr& universe,
                                                 const ElementSet& carrier,
                                                 std::size_t max_points) {
  const auto points = carrier.elements();
  const std::size_t k = points.size();
  if (k > max_points) {
    throw LimitError("enumerating topologies on " + std::to_string(k) +
                     " points exceeds the limit of " + std::to_string(max_points));
  }
  std::vector<FiniteTopology> out;
  PreorderWalk walk(k);
  walk.run([&](const std::vector<bool>& rel) {
    Family neighbourhoods;
    for (std::size_t x = 0; x < k; ++x) {
      ElementSet n(universe->size());
      for (std::size_t y = 0; y < k; ++y) {
        if (rel[x * k + y]) n.insert(points[y]);
      }
      neighbourhoods.push_back(std::move(n));
    }
    out.push_back(generate_topology(universe, carrier, neighbourhoods));
  });
  std::sort(out.begin(), out.end(), [](const FiniteTopology& a, const FiniteTopology& b) {
    return a.opens() < b.opens();
  });
  return out;
}

}  // namespace roughtop
