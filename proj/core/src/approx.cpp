#include "roughtop/approx.hpp"

#include <algorithm>
#include <string>

#include "roughtop/errors.hpp"

namespace roughtop {

namespace {

void require_within(const Universe& u, const ElementSet& x) {
  if (x.universe_size() != u.size()) {
    throw InputError("subset does not range over the approximation space's universe");
  }
}

}  // namespace

Partition::Partition(UniversePtr universe, std::vector<ElementSet> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  const std::size_t n = universe_->size();
  ElementSet covered(n);
  for (const auto& b : blocks_) {
    if (b.universe_size() != n) throw InputError("partition block ranges over another universe");
    if (b.empty()) throw InputError("partition has an empty block");
    if (b.intersects(covered)) {
      const Element e = (b & covered).first();
      throw InputError("partition blocks overlap at '" + universe_->name(e) + "'");
    }
    covered |= b;
  }
  if (covered.count() != n) {
    const Element e = covered.complement().first();
    throw InputError("partition not covering: '" + universe_->name(e) + "' is in no block");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.first() < b.first(); });
  block_of_.assign(n, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    blocks_[i].for_each([&](Element e) { block_of_[e] = i; });
  }
}

Partition Partition::singletons(UniversePtr universe) {
  std::vector<ElementSet> blocks;
  for (Element e = 0; e < universe->size(); ++e) {
    blocks.push_back(ElementSet::singleton(universe->size(), e));
  }
  return Partition(std::move(universe), std::move(blocks));
}

Partition Partition::single_block(UniversePtr universe) {
  std::vector<ElementSet> blocks;
  if (universe->size() > 0) blocks.push_back(universe->full_set());
  return Partition(std::move(universe), std::move(blocks));
}

CayleyTable::CayleyTable(UniversePtr universe, std::vector<Element> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
  const std::size_t n = universe_->size();
  if (entries_.size() != n * n) {
    throw InputError("table not total: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  for (Element e : entries_) {
    if (e >= n) throw InputError("table entry outside the universe");
  }
}

ElementSet CayleyTable::product(const ElementSet& a, const ElementSet& b) const {
  ElementSet out(size());
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert((*this)(x, y)); }); });
  return out;
}

ElementSet CayleyTable::left_translate(Element a, const ElementSet& s) const {
  ElementSet out(size());
  s.for_each([&](Element x) { out.insert((*this)(a, x)); });
  return out;
}

ElementSet CayleyTable::right_translate(const ElementSet& s, Element a) const {
  ElementSet out(size());
  s.for_each([&](Element x) { out.insert((*this)(x, a)); });
  return out;
}

bool CayleyTable::closes(const ElementSet& s) const { return product(s, s).is_subset_of(s); }

ApproxSpace::ApproxSpace(Partition partition, std::optional<CayleyTable> op)
    : partition_(std::move(partition)), op_(std::move(op)) {
  if (op_ && !same_universe(op_->universe(), partition_.universe())) {
    throw InputError("operation and partition are declared on different universes");
  }
}

const CayleyTable& ApproxSpace::op() const {
  if (!op_) throw InputError("approximation space has no binary operation");
  return *op_;
}

ElementSet lower_approx(const ApproxSpace& space, const ElementSet& x) {
  require_within(space.universe(), x);
  ElementSet out(x.universe_size());
  for (const auto& b : space.partition().blocks()) {
    if (b.is_subset_of(x)) out |= b;
  }
  return out;
}

ElementSet upper_approx(const ApproxSpace& space, const ElementSet& x) {
  require_within(space.universe(), x);
  ElementSet out(x.universe_size());
  for (const auto& b : space.partition().blocks()) {
    if (b.intersects(x)) out |= b;
  }
  return out;
}

RoughSet make_rough_set(const ApproxSpace& space, const ElementSet& x) {
  return RoughSet{x, lower_approx(space, x), upper_approx(space, x)};
}

void check_universe_cap(std::size_t n, const Limits& limits) {
  if (n > limits.universe_cap) {
    throw LimitError("universe of " + std::to_string(n) + " elements exceeds the cap of " +
                     std::to_string(limits.universe_cap) + " (raise it with --cap)");
  }
}

ApproxSpacePtr product_space(const ApproxSpace& left, const ApproxSpace& right,
                             const Limits& limits) {
  const std::size_t n1 = left.universe().size();
  const std::size_t n2 = right.universe().size();
  check_universe_cap(n1 * n2, limits);

  auto universe = product_universe(left.universe(), right.universe());
  std::vector<ElementSet> blocks;
  for (const auto& b1 : left.partition().blocks()) {
    for (const auto& b2 : right.partition().blocks()) blocks.push_back(product_set(b1, b2));
  }
  Partition partition(universe, std::move(blocks));

  std::optional<CayleyTable> op;
  if (left.has_op() && right.has_op()) {
    const auto& t1 = left.op();
    const auto& t2 = right.op();
    std::vector<Element> entries(n1 * n2 * n1 * n2);
    for (Element p = 0; p < n1 * n2; ++p) {
      const auto [x1, y1] = pair_components(n2, p);
      for (Element q = 0; q < n1 * n2; ++q) {
        const auto [x2, y2] = pair_components(n2, q);
        entries[p * n1 * n2 + q] = pair_index(n2, t1(x1, x2), t2(y1, y2));
      }
    }
    op.emplace(universe, std::move(entries));
  }
  return std::make_shared<const ApproxSpace>(std::move(partition), std::move(op));
}

}  // namespace roughtop
