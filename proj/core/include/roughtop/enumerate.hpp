#pragma once

#include <cstddef>
#include <vector>

#include "roughtop/topology.hpp"

namespace roughtop {

// Every topology on `carrier`, in canonical order (lexicographic on the
// canonical open families). Built from the preorders on the carrier: each
// preorder x <= y yields the topology whose minimal neighbourhood of x is
// {y : x <= y}, and this correspondence is a bijection for finite sets.
// Throws LimitError when the carrier has more than `max_points` elements.
std::vector<FiniteTopology> enumerate_topologies(const UniversePtr& universe,
                                                 const ElementSet& carrier,
                                                 std::size_t max_points = 5);

}  // namespace roughtop
