#include "roughtop/hom_topology.hpp"

namespace roughtop {

TRGHomResult verify_trg_homomorphism(const TRGCert& src, const TRGCert& tgt, const FiniteMap& map,
                                     HomOptions options) {
  TRGHomResult result{VerificationReport("topological rough group homomorphism"), std::nullopt};
  VerificationReport& r = result.report;
  auto algebra = verify_rough_homomorphism(src.group, tgt.group, map, options);
  r.absorb(algebra.report, "rough homomorphism: ");
  r.data = algebra.report.data;
  r.stats = algebra.report.stats;
  auto continuity = is_continuous(map, src.tau, tgt.tau);
  r.absorb(continuity, "continuous: ");
  if (r.passed() && algebra.hom) {
    result.hom = TRGHom{src, tgt, map, std::move(continuity), std::move(*algebra.hom)};
  }
  return result;
}

VerificationReport verify_trg_homeomorphism(const TRGHom& hom, HomOptions options) {
  const Universe& u2 = hom.target.universe();
  VerificationReport r("topological rough group homeomorphism");
  r.note("checks the two-sided identity on upper(G1) and upper(G2)");

  const FiniteMap& f = hom.map;
  if (!f.bijective()) {
    r.fail("bijective upper(G1) -> upper(G2)",
           f.injective() ? "not onto upper(G2)" : "not injective: " + f.describe());
    return r;
  }
  r.pass("bijective upper(G1) -> upper(G2)");

  const FiniteMap inverse = f.inverse();
  r.put("inverse", inverse.describe());
  auto back = verify_trg_homomorphism(hom.target, hom.source, inverse, options);
  r.absorb(back.report, "inverse: ");

  const FiniteMap id1 = FiniteMap::identity(hom.source.group.universe_ptr(), f.domain());
  const FiniteMap id2 = FiniteMap::identity(hom.target.group.universe_ptr(), f.codomain());
  if (inverse.after(f) == id1) {
    r.pass("f^-1 o f = 1 on upper(G1)");
  } else {
    r.fail("f^-1 o f = 1 on upper(G1)", inverse.after(f).describe());
  }
  if (f.after(inverse) == id2) {
    r.pass("f o f^-1 = 1 on upper(G2)");
  } else {
    r.fail("f o f^-1 = 1 on upper(G2)", f.after(inverse).describe());
  }

  const ElementSet image_g = f.image(hom.source.group.group);
  r.put("f(G1)", format_set(u2, image_g));
  r.put("f(G1) = G2", image_g == hom.target.group.group ? "yes" : "no");
  return r;
}

}  // namespace roughtop
