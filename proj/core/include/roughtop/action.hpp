#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "roughtop/approx.hpp"
#include "roughtop/report.hpp"
#include "roughtop/topology.hpp"
#include "roughtop/trg.hpp"

namespace roughtop {

// A rough set X together with a topology on its upper approximation.
struct RoughSpace {
  ApproxSpacePtr space;
  ElementSet subset;
  ElementSet upper;
  FiniteTopology tau;
};

// Throws InputError unless tau is a topology on upper(X).
RoughSpace make_rough_space(const ApproxSpacePtr& space, const ElementSet& x,
                            const FiniteTopology& tau);

enum class Side { left, right };

const char* to_string(Side s);

// Candidate action map. For a left action mu runs over upper(G) x upper(X);
// for a right action over upper(X) x upper(G). Both product universes are
// built from the compacted factors, so elements are named "(g,x)" resp.
// "(x,g)". Shape is validated on construction; the action axioms are not.
class RoughAction {
 public:
  RoughAction(TRGCert cert, RoughSpace space, FiniteMap mu, Side side);

  const TRGCert& cert() const { return cert_; }
  const RoughSpace& space() const { return space_; }
  const FiniteMap& mu() const { return mu_; }
  Side side() const { return side_; }

  // g acting on x, for g in upper(G) and x in upper(X), regardless of side.
  Element act(Element g, Element x) const;

  // Product used by the compatibility law in the orientation of the
  // mirrored left action: composite(a, b) acts as "a after b".
  Element composite(Element a, Element b) const;

 private:
  TRGCert cert_;
  RoughSpace space_;
  FiniteMap mu_;
  Side side_;
  Compaction group_c_;
  Compaction space_c_;
};

// Domain universe and carrier an action map must be defined on.
std::pair<UniversePtr, ElementSet> action_domain(const TRGCert& cert, const RoughSpace& space,
                                                 Side side);

// Builds mu from a function of (g, x) in universe indices.
FiniteMap make_action_map(const TRGCert& cert, const RoughSpace& space, Side side,
                          const std::function<Element(Element, Element)>& act);

// Left (or right) multiplication of upper(G) on itself; the space must be
// upper(G) with tau. Throws InputError if upper(G) is not closed.
RoughAction self_action(const TRGCert& cert, Side side = Side::left);

struct ActionResult {
  VerificationReport report;
  std::optional<RoughAction> action;
};

VerificationReport check_action_axioms(const RoughAction& action, const Limits& limits = {});
ActionResult verify_rough_action(const TRGCert& cert, const RoughSpace& space, const FiniteMap& mu,
                                 Side side, const Limits& limits = {});

struct PairWitness {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};

PairWitness is_effective(const RoughAction& action);
PairWitness is_transitive(const RoughAction& action);

struct TranslationResult {
  FiniteMap map;
  VerificationReport report;
};

// x -> gx on upper(X). g must be in G, or in upper(G) when upper(G) is a
// group (InputError otherwise).
TranslationResult translation_map(const RoughAction& action, Element g, const Limits& limits = {});

struct HomogeneityResult {
  PairWitness verdict;
  std::size_t homeomorphisms = 0;
};

// Enumerates every self-bijection of upper(X); LimitError past
// limits.bijection_cap.
HomogeneityResult is_rough_homogeneous(const RoughSpace& space, const Limits& limits = {});

VerificationReport check_au_open(const TRGCert& cert, const ElementSet& a, const ElementSet& u_open);

VerificationReport check_subgroup_open(const TRGCert& cert, const ElementSet& h, const ElementSet& w);

}  // namespace roughtop
