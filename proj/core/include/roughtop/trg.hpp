#pragma once

#include <optional>

#include "roughtop/limits.hpp"
#include "roughtop/report.hpp"
#include "roughtop/rough_group.hpp"
#include "roughtop/topology.hpp"

namespace roughtop {

// Which topology the product map f(x, y) = xy is required to be continuous
// into. `upper` uses (upper(G), tau); `relative` requires preimages of the
// relative topology tau_G to be open.
enum class CodomainTopology { upper, relative };

const char* to_string(CodomainTopology c);

struct TRGOptions {
  CodomainTopology codomain = CodomainTopology::upper;
  Limits limits{};
};

// A rough group with a topology tau on upper(G) under which the product map
// G x G -> upper(G) and the inverse map G -> G are continuous.
struct TRGCert {
  RoughGroupCert group;
  FiniteTopology tau;
  FiniteTopology tau_g;
  FiniteMap inverse_map;
  VerificationReport product_evidence;
  VerificationReport inverse_evidence;
  TRGOptions options;

  const Universe& universe() const { return group.universe(); }
  const CayleyTable& op() const { return group.op(); }
  Element identity() const { return group.identity; }
};

struct TRGResult {
  VerificationReport report;
  std::optional<TRGCert> cert;
};

// Throws InputError when tau is not a topology on upper(G), and
// AmbiguousInverseError when some x in G has several rough inverses.
TRGResult verify_trg(const RoughGroupCert& group, const FiniteTopology& tau,
                     const TRGOptions& options = {});

// {x^-1 : x in V} for V inside G.
ElementSet inverse_of_set(const TRGCert& cert, const ElementSet& v);
bool is_rough_symmetric(const TRGCert& cert, const ElementSet& v);

// L_a and R_a are injective and continuous (G, tau_G) -> (upper(G), tau),
// and the inverse map is a homeomorphism of (G, tau_G).
VerificationReport check_translations(const TRGCert& cert, Element a);

VerificationReport check_g_equals_g_inverse(const TRGCert& cert);

// V open (closed) in tau_G iff V^-1 open (closed) in tau_G.
VerificationReport check_open_iff_inverse_open(const TRGCert& cert);

// Rough inverse extended to upper(G): {y in upper(G) : xy = yx = e for some
// x in V}. Returns nullopt if some member of V has no rough inverse there.
std::optional<ElementSet> extended_inverse(const TRGCert& cert, const ElementSet& v);

struct NeighbourhoodSearch {
  std::optional<ElementSet> witness;
  VerificationReport report;
};

// Canonically first open V of tau with e in V, V = V^-1 (extended inverse)
// and VV inside W. W must be open in tau and contain e.
NeighbourhoodSearch find_symmetric_square_nbhd(const TRGCert& cert, const ElementSet& w,
                                               const Limits& limits = {});

// Classical topological group test, applicable only when G = upper(G).
VerificationReport check_topological_group(const RoughGroupCert& group, const FiniteTopology& tau,
                                           const Limits& limits = {});
VerificationReport check_topological_group(const TRGCert& cert);

// Closure of a rough symmetric A (computed in upper(G)) is rough symmetric
// whenever it stays inside G.
VerificationReport check_closure_symmetric(const TRGCert& cert, const ElementSet& a);

// Closure of a rough subgroup H is a rough subgroup whenever it stays in G.
VerificationReport check_closure_subgroup(const TRGCert& cert, const ElementSet& h);

// Product of two certified topological rough groups. Throws LimitError past
// the caps and InternalError if the product fails verification.
TRGCert product_trg(const TRGCert& a, const TRGCert& b, const Limits& limits = {});

// For every g in G, {gO : O in B_e} is a base at g for tau. Not applicable
// unless e is in G, upper(G) is closed, G is open in tau, and B is a base of
// tau_G.
VerificationReport check_base_translation(const TRGCert& cert, const Family& base);

}  // namespace roughtop
