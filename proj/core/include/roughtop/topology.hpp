#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughtop/element_set.hpp"
#include "roughtop/limits.hpp"
#include "roughtop/report.hpp"
#include "roughtop/universe.hpp"

namespace roughtop {

// Topology on a carrier subset of a universe, stored as the explicit
// canonical family of open sets.
class FiniteTopology {
 public:
  // Validates the axioms; throws InputError carrying the first violated
  // clause otherwise.
  FiniteTopology(UniversePtr universe, ElementSet carrier, Family opens);

  static FiniteTopology discrete(UniversePtr universe, const ElementSet& carrier);
  static FiniteTopology indiscrete(UniversePtr universe, const ElementSet& carrier);

  const UniversePtr& universe_ptr() const { return universe_; }
  const Universe& universe() const { return *universe_; }
  const ElementSet& carrier() const { return carrier_; }
  const Family& opens() const { return opens_; }

  bool is_open(const ElementSet& s) const { return family_contains(opens_, s); }
  bool is_closed(const ElementSet& s) const { return is_open(carrier_ - s); }

  bool operator==(const FiniteTopology& other) const {
    return same_universe(universe_, other.universe_) && carrier_ == other.carrier_ &&
           opens_ == other.opens_;
  }

 private:
  struct Trusted {};
  FiniteTopology(Trusted, UniversePtr universe, ElementSet carrier, Family opens);
  friend FiniteTopology generate_topology(const UniversePtr&, const ElementSet&, const Family&);
  friend FiniteTopology subspace_topology(const FiniteTopology&, const ElementSet&);

  UniversePtr universe_;
  ElementSet carrier_;
  Family opens_;
};

// Total map between two subsets, possibly of different universes.
class FiniteMap {
 public:
  // `assignment[x]` is the image of x for every x in domain; other slots are
  // ignored. Throws InputError unless every image lies in the codomain.
  FiniteMap(UniversePtr domain_universe, ElementSet domain, UniversePtr codomain_universe,
            ElementSet codomain, std::vector<Element> assignment);

  static FiniteMap identity(UniversePtr universe, const ElementSet& carrier);

  const UniversePtr& domain_universe() const { return dom_u_; }
  const UniversePtr& codomain_universe() const { return cod_u_; }
  const ElementSet& domain() const { return domain_; }
  const ElementSet& codomain() const { return codomain_; }

  Element operator()(Element x) const { return assignment_[x]; }

  ElementSet image(const ElementSet& s) const;
  ElementSet preimage(const ElementSet& s) const;

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  // Inverse of a bijection; throws InputError otherwise.
  FiniteMap inverse() const;
  // this after first: x -> (*this)(first(x)).
  FiniteMap after(const FiniteMap& first) const;

  std::string describe() const;

  bool operator==(const FiniteMap& other) const;

 private:
  UniversePtr dom_u_;
  ElementSet domain_;
  UniversePtr cod_u_;
  ElementSet codomain_;
  std::vector<Element> assignment_;
};

struct Base {
  ElementSet carrier;
  Family members;
};

// Checks that `family` (members inside `carrier`) contains the empty set and
// the carrier and is closed under pairwise union and intersection. For a
// finite carrier pairwise closure gives closure under arbitrary unions and
// finite intersections, so this is the full set of topology axioms.
VerificationReport verify_topology(const Universe& universe, const ElementSet& carrier,
                                   const Family& family);

// Smallest topology on `carrier` containing `subbasis`.
FiniteTopology generate_topology(const UniversePtr& universe, const ElementSet& carrier,
                                 const Family& subbasis);

FiniteTopology subspace_topology(const FiniteTopology& top, const ElementSet& subset);

// Product topology on carrier1 x carrier2 inside product_universe(U1, U2).
FiniteTopology product_topology(const FiniteTopology& left, const FiniteTopology& right,
                                const Limits& limits = {});

// Product topology held implicitly, for domains whose open family is too
// large to list. A set is open iff it contains N(x) x N(y) for each of its
// points (x, y), N being the minimal neighbourhood.
class ProductTopologyView {
 public:
  // Throws LimitError when the product carrier exceeds limits.universe_cap.
  ProductTopologyView(const FiniteTopology& left, const FiniteTopology& right,
                      const Limits& limits = {});

  const UniversePtr& universe_ptr() const { return universe_; }
  const Universe& universe() const { return *universe_; }
  const ElementSet& carrier() const { return carrier_; }
  bool is_open(const ElementSet& s) const;

 private:
  UniversePtr universe_;
  ElementSet carrier_;
  std::size_t right_size_;
  std::vector<ElementSet> left_nbhd_;
  std::vector<ElementSet> right_nbhd_;
};

// The same topology re-expressed over a universe containing only its carrier.
FiniteTopology compacted(const FiniteTopology& top, const Compaction& c);

ElementSet closure(const FiniteTopology& top, const ElementSet& a);
ElementSet interior(const FiniteTopology& top, const ElementSet& a);

// Smallest open set containing x.
ElementSet minimal_neighbourhood(const FiniteTopology& top, Element x);

VerificationReport is_continuous(const FiniteMap& f, const FiniteTopology& dom_top,
                                 const FiniteTopology& cod_top);
VerificationReport is_continuous(const FiniteMap& f, const ProductTopologyView& dom_top,
                                 const FiniteTopology& cod_top);
VerificationReport is_homeomorphism(const FiniteMap& f, const FiniteTopology& t1,
                                    const FiniteTopology& t2);

VerificationReport verify_base(const FiniteTopology& top, const Family& candidate);
Family base_at(const Base& base, Element g);

// Image of a family under f, canonicalized.
Family image_family(const FiniteMap& f, const Family& family);

}  // namespace roughtop
