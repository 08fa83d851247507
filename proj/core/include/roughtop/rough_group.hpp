#pragma once

#include <optional>
#include <vector>

#include "roughtop/approx.hpp"
#include "roughtop/element_set.hpp"
#include "roughtop/limits.hpp"
#include "roughtop/report.hpp"
#include "roughtop/topology.hpp"

namespace roughtop {

// Evidence that a subset G of an approximation space with an operation is a
// rough group: products of G land in upper(G), the operation is associative
// on upper(G), one common rough identity exists in upper(G), and every
// member of G has a rough inverse inside G.
struct RoughGroupCert {
  ApproxSpacePtr space;
  ElementSet group;
  ElementSet upper;
  // All e in upper(G) with xe = ex = x for every x in G, ascending.
  std::vector<Element> identities;
  Element identity = 0;
  // inverses[x] = {y in G : xy = yx = identity}, nonempty for x in G.
  std::vector<ElementSet> inverses;

  const Universe& universe() const { return space->universe(); }
  const UniversePtr& universe_ptr() const { return space->universe_ptr(); }
  const CayleyTable& op() const { return space->op(); }

  bool unique_inverses() const;
};

struct RoughGroupResult {
  VerificationReport report;
  std::optional<RoughGroupCert> cert;
};

// Throws InputError if the space has no operation or G is empty.
RoughGroupResult verify_rough_group(const ApproxSpacePtr& space, const ElementSet& group);

// Classical group axioms for `carrier` under `op`.
VerificationReport verify_group(const CayleyTable& op, const ElementSet& carrier);

// H must be a nonempty subset of parent.group (InputError otherwise).
VerificationReport verify_rough_subgroup(const RoughGroupCert& parent, const ElementSet& h);

// Throws InputError if N is not a rough subgroup of parent.
VerificationReport is_rough_normal(const RoughGroupCert& parent, const ElementSet& n);

// Every nonempty H of parent.group passing verify_rough_subgroup, in
// canonical order.
std::vector<ElementSet> enumerate_rough_subgroups(const RoughGroupCert& parent,
                                                  const Limits& limits = {});

enum class HomClass { homomorphism_only, epimorphism, monomorphism, isomorphism };

const char* to_string(HomClass c);

struct RoughHom {
  RoughGroupCert source;
  RoughGroupCert target;
  FiniteMap map;
  HomClass classification = HomClass::homomorphism_only;
};

struct RoughHomResult {
  VerificationReport report;
  std::optional<RoughHom> hom;
};

struct HomOptions {
  // Additionally require upper(G1) to be closed under the operation, so that
  // no pair is left unconstrained.
  bool strict = false;
};

// The map must run from src.upper to tgt.upper (InputError otherwise).
// Compatibility is checked for every pair x, y in upper(G1) whose product
// stays in upper(G1); the remaining pairs are counted as unconstrained.
RoughHomResult verify_rough_homomorphism(const RoughGroupCert& src, const RoughGroupCert& tgt,
                                         const FiniteMap& map, HomOptions options = {});

struct KernelResult {
  ElementSet kernel;
  VerificationReport report;
};

// {g in G1 : phi(g) = e2}, with a report checking that it is a rough normal
// subgroup of the source.
KernelResult rough_kernel(const RoughHom& hom);

// G1 x G2 in the product space, re-verified. Throws LimitError past the
// universe cap and InternalError if the product fails verification.
RoughGroupCert product_rough_group(const RoughGroupCert& a, const RoughGroupCert& b,
                                   const Limits& limits = {});

}  // namespace roughtop
