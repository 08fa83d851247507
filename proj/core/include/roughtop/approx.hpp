#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "roughtop/element_set.hpp"
#include "roughtop/limits.hpp"
#include "roughtop/universe.hpp"

namespace roughtop {

// Equivalence relation on a universe, given by its blocks. Blocks are kept
// sorted by smallest member.
class Partition {
 public:
  // Throws InputError if a block is empty, blocks overlap, or they do not
  // cover the universe.
  Partition(UniversePtr universe, std::vector<ElementSet> blocks);

  static Partition singletons(UniversePtr universe);
  static Partition single_block(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  std::size_t block_of(Element e) const { return block_of_.at(e); }
  const ElementSet& block_containing(Element e) const { return blocks_[block_of(e)]; }

  bool operator==(const Partition& other) const {
    return same_universe(universe_, other.universe_) && blocks_ == other.blocks_;
  }

 private:
  UniversePtr universe_;
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> block_of_;
};

// Total binary operation on a universe; entry (x, y) is x*y.
class CayleyTable {
 public:
  // `entries` is row-major, size n*n, every entry < n.
  CayleyTable(UniversePtr universe, std::vector<Element> entries);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return universe_->size(); }

  Element operator()(Element x, Element y) const { return entries_[x * size() + y]; }

  // {a*b : a in A, b in B}
  ElementSet product(const ElementSet& a, const ElementSet& b) const;
  ElementSet left_translate(Element a, const ElementSet& s) const;
  ElementSet right_translate(const ElementSet& s, Element a) const;

  // True if a*b lies in s for all a, b in s.
  bool closes(const ElementSet& s) const;

  const std::vector<Element>& entries() const { return entries_; }

  bool operator==(const CayleyTable& other) const {
    return same_universe(universe_, other.universe_) && entries_ == other.entries_;
  }

 private:
  UniversePtr universe_;
  std::vector<Element> entries_;
};

struct RoughSet {
  ElementSet subset;
  ElementSet lower;
  ElementSet upper;
};

// Pawlak approximation space, optionally carrying a binary operation.
class ApproxSpace {
 public:
  ApproxSpace(Partition partition, std::optional<CayleyTable> op = std::nullopt);

  const UniversePtr& universe_ptr() const { return partition_.universe(); }
  const Universe& universe() const { return *partition_.universe(); }
  const Partition& partition() const { return partition_; }
  bool has_op() const { return op_.has_value(); }
  // Throws InputError if the space carries no operation.
  const CayleyTable& op() const;
  const std::optional<CayleyTable>& maybe_op() const { return op_; }

 private:
  Partition partition_;
  std::optional<CayleyTable> op_;
};

using ApproxSpacePtr = std::shared_ptr<const ApproxSpace>;

// Union of the blocks contained in x.
ElementSet lower_approx(const ApproxSpace& space, const ElementSet& x);
// Union of the blocks meeting x.
ElementSet upper_approx(const ApproxSpace& space, const ElementSet& x);
RoughSet make_rough_set(const ApproxSpace& space, const ElementSet& x);

// Universe U1 x U2 in lexicographic order, blocks B1 x B2, componentwise
// operation when both factors have one. Throws LimitError when the product
// universe would exceed limits.universe_cap.
ApproxSpacePtr product_space(const ApproxSpace& left, const ApproxSpace& right,
                             const Limits& limits = {});

// Throws LimitError if n exceeds the configured universe cap.
void check_universe_cap(std::size_t n, const Limits& limits);

}  // namespace roughtop
