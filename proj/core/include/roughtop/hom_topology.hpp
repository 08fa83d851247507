#pragma once

#include <optional>

#include "roughtop/report.hpp"
#include "roughtop/rough_group.hpp"
#include "roughtop/topology.hpp"
#include "roughtop/trg.hpp"

namespace roughtop {

// A rough homomorphism between two topological rough groups that is also
// continuous from (upper(G1), tau1) to (upper(G2), tau2).
struct TRGHom {
  TRGCert source;
  TRGCert target;
  FiniteMap map;
  VerificationReport continuity;
  RoughHom algebra;
};

struct TRGHomResult {
  VerificationReport report;
  std::optional<TRGHom> hom;
};

// The map must be total on upper(G1) with values in upper(G2).
TRGHomResult verify_trg_homomorphism(const TRGCert& src, const TRGCert& tgt, const FiniteMap& map,
                                     HomOptions options = {});

// Bijective, with an inverse that is itself a topological rough group
// homomorphism. Both composites are checked against the identity, on
// upper(G1) and on upper(G2), and reported separately.
VerificationReport verify_trg_homeomorphism(const TRGHom& hom, HomOptions options = {});

}  // namespace roughtop
