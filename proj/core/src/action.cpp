#include "roughtop/action.hpp"

#include <algorithm>
#include <numeric>

#include "roughtop/errors.hpp"

namespace roughtop {

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

RoughSpace make_rough_space(const ApproxSpacePtr& space, const ElementSet& x,
                            const FiniteTopology& tau) {
  const ElementSet upper = upper_approx(*space, x);
  if (!same_universe(tau.universe_ptr(), space->universe_ptr()) || tau.carrier() != upper) {
    throw InputError("rough space: the topology must be on upper(X) = " +
                     format_set(space->universe(), upper));
  }
  return RoughSpace{space, x, upper, tau};
}

std::pair<UniversePtr, ElementSet> action_domain(const TRGCert& cert, const RoughSpace& space,
                                                 Side side) {
  const Universe& u = cert.universe();
  const Compaction gc = compact(u, cert.group.upper);
  const Compaction xc = compact(u, space.upper);
  UniversePtr dom = side == Side::left ? product_universe(*gc.universe, *xc.universe)
                                       : product_universe(*xc.universe, *gc.universe);
  ElementSet carrier = dom->full_set();
  return {dom, carrier};
}

FiniteMap make_action_map(const TRGCert& cert, const RoughSpace& space, Side side,
                          const std::function<Element(Element, Element)>& act) {
  auto [dom, carrier] = action_domain(cert, space, side);
  const auto gs = cert.group.upper.elements();
  const auto xs = space.upper.elements();
  std::vector<Element> assignment(dom->size(), 0);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const Element p = side == Side::left ? pair_index(xs.size(), i, j) : pair_index(gs.size(), j, i);
      assignment[p] = act(gs[i], xs[j]);
    }
  }
  return FiniteMap(dom, carrier, cert.group.universe_ptr(), space.upper, std::move(assignment));
}

RoughAction self_action(const TRGCert& cert, Side side) {
  const CayleyTable& op = cert.op();
  if (!op.closes(cert.group.upper)) {
    throw InputError("self action: upper(G) is not closed under the operation");
  }
  RoughSpace space = make_rough_space(cert.group.space, cert.group.group, cert.tau);
  auto mu = make_action_map(cert, space, side, [&](Element g, Element x) {
    return side == Side::left ? op(g, x) : op(x, g);
  });
  return RoughAction(cert, std::move(space), std::move(mu), side);
}

RoughAction::RoughAction(TRGCert cert, RoughSpace space, FiniteMap mu, Side side)
    : cert_(std::move(cert)), space_(std::move(space)), mu_(std::move(mu)), side_(side) {
  if (!same_universe(cert_.group.universe_ptr(), space_.space->universe_ptr())) {
    throw InputError("rough action: G and X must live in the same universe");
  }
  auto [dom, carrier] = action_domain(cert_, space_, side_);
  if (!same_universe(mu_.domain_universe(), dom) || mu_.domain() != carrier) {
    throw InputError(std::string("rough action: mu must be defined on ") +
                     (side_ == Side::left ? "upper(G) x upper(X)" : "upper(X) x upper(G)"));
  }
  if (!same_universe(mu_.codomain_universe(), cert_.group.universe_ptr()) ||
      mu_.codomain() != space_.upper) {
    throw InputError("rough action: mu must take values in upper(X)");
  }
  group_c_ = compact(cert_.universe(), cert_.group.upper);
  space_c_ = compact(cert_.universe(), space_.upper);
}

Element RoughAction::act(Element g, Element x) const {
  const Element gi = *group_c_.from_parent.at(g);
  const Element xi = *space_c_.from_parent.at(x);
  const Element p = side_ == Side::left ? pair_index(space_c_.to_parent.size(), gi, xi)
                                        : pair_index(group_c_.to_parent.size(), xi, gi);
  return mu_(p);
}

Element RoughAction::composite(Element a, Element b) const {
  const CayleyTable& op = cert_.op();
  return side_ == Side::left ? op(a, b) : op(b, a);
}

VerificationReport check_action_axioms(const RoughAction& action, const Limits& limits) {
  const TRGCert& cert = action.cert();
  const RoughSpace& space = action.space();
  const Universe& u = cert.universe();
  VerificationReport r(std::string(to_string(action.side())) + " rough action on " +
                       format_set(u, space.upper));
  if (!cert.op().closes(cert.group.upper)) {
    r.not_applicable("upper(G) is not closed under the operation");
    return r;
  }

  const Compaction gc = compact(u, cert.group.upper);
  const Compaction xc = compact(u, space.upper);
  const FiniteTopology tg = compacted(cert.tau, gc);
  const FiniteTopology tx = compacted(space.tau, xc);
  const ProductTopologyView domain = action.side() == Side::left ? ProductTopologyView(tg, tx, limits)
                                                                 : ProductTopologyView(tx, tg, limits);
  r.absorb(is_continuous(action.mu(), domain, space.tau), "mu continuous: ");

  std::string witness;
  cert.group.upper.for_each([&](Element a) {
    cert.group.upper.for_each([&](Element b) {
      if (!witness.empty()) return;
      space.upper.for_each([&](Element x) {
        if (!witness.empty()) return;
        const Element stepwise = action.act(a, action.act(b, x));
        const Element joint = action.act(action.composite(a, b), x);
        if (stepwise != joint) {
          witness = action.side() == Side::left
                        ? u.name(a) + "(" + u.name(b) + u.name(x) + ") = " + u.name(stepwise) +
                              " but (" + u.name(a) + u.name(b) + ")" + u.name(x) + " = " +
                              u.name(joint)
                        : "(" + u.name(x) + u.name(b) + ")" + u.name(a) + " = " +
                              u.name(stepwise) + " but " + u.name(x) + "(" + u.name(b) +
                              u.name(a) + ") = " + u.name(joint);
        }
      });
    });
  });
  if (witness.empty()) {
    r.pass("compatibility for all g, g' in upper(G), x in upper(X)");
  } else {
    r.fail("compatibility for all g, g' in upper(G), x in upper(X)", witness);
  }

  const Element e = cert.identity();
  witness.clear();
  space.upper.for_each([&](Element x) {
    const Element y = action.act(e, x);
    if (witness.empty() && y != x) {
      witness = "e = " + u.name(e) + " sends " + u.name(x) + " to " + u.name(y);
    }
  });
  if (witness.empty()) {
    r.pass("identity acts trivially");
  } else {
    r.fail("identity acts trivially", witness);
  }
  return r;
}

ActionResult verify_rough_action(const TRGCert& cert, const RoughSpace& space, const FiniteMap& mu,
                                 Side side, const Limits& limits) {
  RoughAction action(cert, space, mu, side);
  ActionResult result{check_action_axioms(action, limits), std::nullopt};
  if (result.report.passed()) result.action = std::move(action);
  return result;
}

PairWitness is_effective(const RoughAction& action) {
  const auto gs = action.cert().group.upper.elements();
  const auto& xs = action.space().upper;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      bool separated = false;
      xs.for_each([&](Element x) {
        separated = separated || action.act(gs[i], x) != action.act(gs[j], x);
      });
      if (!separated) return PairWitness{false, std::make_pair(gs[i], gs[j])};
    }
  }
  return PairWitness{};
}

PairWitness is_transitive(const RoughAction& action) {
  const auto xs = action.space().upper.elements();
  const auto& gs = action.cert().group.upper;
  for (Element x : xs) {
    ElementSet orbit(action.space().upper.universe_size());
    gs.for_each([&](Element g) { orbit.insert(action.act(g, x)); });
    for (Element y : xs) {
      if (!orbit.contains(y)) return PairWitness{false, std::make_pair(x, y)};
    }
  }
  return PairWitness{};
}

TranslationResult translation_map(const RoughAction& action, Element g, const Limits&) {
  const TRGCert& cert = action.cert();
  const Universe& u = cert.universe();
  const CayleyTable& op = cert.op();
  const auto& upper = cert.group.upper;
  const auto& xs = action.space().upper;

  std::optional<Element> g_inverse;
  if (cert.group.group.contains(g)) {
    g_inverse = cert.inverse_map(g);
  } else if (upper.contains(g) && verify_group(op, upper).passed()) {
    upper.for_each([&](Element y) {
      if (op(g, y) == cert.identity() && op(y, g) == cert.identity()) g_inverse = y;
    });
  } else {
    throw InputError("translation_map: " + (g < u.size() ? u.name(g) : std::string("?")) +
                     " must be in G, or in upper(G) when upper(G) is a group");
  }

  auto translation = [&](Element h) {
    std::vector<Element> assignment(u.size(), 0);
    xs.for_each([&](Element x) { assignment[x] = action.act(h, x); });
    return FiniteMap(cert.group.universe_ptr(), xs, cert.group.universe_ptr(), xs,
                     std::move(assignment));
  };
  const std::string letter = action.side() == Side::left ? "L_" : "R_";
  const FiniteMap tg = translation(g);
  TranslationResult result{tg, VerificationReport(letter + u.name(g))};
  VerificationReport& r = result.report;
  r.put("map", tg.describe());
  r.absorb(is_homeomorphism(tg, action.space().tau, action.space().tau), "homeomorphism: ");

  const FiniteMap identity = FiniteMap::identity(cert.group.universe_ptr(), xs);
  if (op.closes(upper)) {
    std::string witness;
    upper.for_each([&](Element h) {
      if (!witness.empty()) return;
      const FiniteMap lhs = tg.after(translation(h));
      const Element gh = action.composite(g, h);
      if (!(lhs == translation(gh))) {
        witness = letter + u.name(g) + " o " + letter + u.name(h) + " differs from " + letter +
                  u.name(gh);
      }
    });
    if (witness.empty()) {
      r.pass("composition law with every g' in upper(G)");
    } else {
      r.fail("composition law with every g' in upper(G)", witness);
    }
  } else {
    r.add("composition law with every g' in upper(G)", Verdict::not_applicable,
          "upper(G) is not closed under the operation");
  }
  if (translation(cert.identity()) == identity) {
    r.pass(letter + "e is the identity");
  } else {
    r.fail(letter + "e is the identity", translation(cert.identity()).describe());
  }
  if (g_inverse) {
    const FiniteMap inv = translation(*g_inverse);
    if (tg.after(inv) == identity && inv.after(tg) == identity) {
      r.pass(letter + u.name(g) + " and " + letter + u.name(*g_inverse) + " are mutually inverse");
    } else {
      r.fail(letter + u.name(g) + " and " + letter + u.name(*g_inverse) + " are mutually inverse",
             inv.after(tg).describe());
    }
  }
  return result;
}

HomogeneityResult is_rough_homogeneous(const RoughSpace& space, const Limits& limits) {
  const auto xs = space.upper.elements();
  const std::size_t k = xs.size();
  if (k > limits.bijection_cap) {
    throw LimitError("upper(X) has " + std::to_string(k) + " points; bijection enumeration is capped at " +
                     std::to_string(limits.bijection_cap) +
                     " (use the translation homeomorphisms of an action instead)");
  }
  const std::size_t n = space.upper.universe_size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<bool>> reachable(k, std::vector<bool>(k, false));
  HomogeneityResult result;
  do {
    auto image = [&](const ElementSet& s) {
      ElementSet out(n);
      for (std::size_t i = 0; i < k; ++i) {
        if (s.contains(xs[i])) out.insert(xs[perm[i]]);
      }
      return out;
    };
    // A bijection is a homeomorphism iff it maps the family of opens onto
    // itself; injectivity on sets makes "into" sufficient.
    bool homeo = std::all_of(space.tau.opens().begin(), space.tau.opens().end(),
                             [&](const ElementSet& o) { return space.tau.is_open(image(o)); });
    if (homeo) {
      ++result.homeomorphisms;
      for (std::size_t i = 0; i < k; ++i) reachable[i][perm[i]] = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < k && result.verdict.holds; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!reachable[i][j]) {
        result.verdict = PairWitness{false, std::make_pair(xs[i], xs[j])};
        break;
      }
    }
  }
  return result;
}

VerificationReport check_au_open(const TRGCert& cert, const ElementSet& a, const ElementSet& u_open) {
  const Universe& u = cert.universe();
  const auto& upper = cert.group.upper;
  VerificationReport r("AU and UA open");
  if (a.universe_size() != u.size() || !a.is_subset_of(upper)) {
    throw InputError("check_au_open: A must be a subset of upper(G)");
  }
  if (u_open.universe_size() != u.size() || !cert.tau.is_open(u_open)) {
    throw InputError("check_au_open: U must be open in upper(G)");
  }
  if (!verify_group(cert.op(), upper).passed()) {
    r.not_applicable("upper(G) is not a group");
    return r;
  }
  const ElementSet au = cert.op().product(a, u_open);
  const ElementSet ua = cert.op().product(u_open, a);
  r.put("AU", format_set(u, au));
  r.put("UA", format_set(u, ua));
  if (cert.tau.is_open(au)) {
    r.pass("AU open");
  } else {
    r.fail("AU open", "AU = " + format_set(u, au) + " is not in tau");
  }
  if (cert.tau.is_open(ua)) {
    r.pass("UA open");
  } else {
    r.fail("UA open", "UA = " + format_set(u, ua) + " is not in tau");
  }
  return r;
}

VerificationReport check_subgroup_open(const TRGCert& cert, const ElementSet& h, const ElementSet& w) {
  const Universe& u = cert.universe();
  const CayleyTable& op = cert.op();
  const auto& g = cert.group.group;
  const Element e = cert.identity();
  VerificationReport r("upper(H) open");
  if (h.universe_size() != u.size() || w.universe_size() != u.size()) {
    throw InputError("check_subgroup_open: H and W must be subsets of the universe");
  }
  if (!verify_group(op, cert.group.upper).passed()) {
    r.not_applicable("upper(G) is not a group");
    return r;
  }
  if (h.empty() || !h.is_subset_of(g) || !verify_rough_subgroup(cert.group, h).passed()) {
    r.not_applicable("H is not a rough subgroup of G");
    return r;
  }
  const ElementSet upper_h = upper_approx(*cert.group.space, h);
  if (!op.closes(upper_h)) {
    r.not_applicable("upper(H) is not closed under the operation");
    return r;
  }
  if (!w.is_subset_of(g) || !cert.tau_g.is_open(w)) {
    r.not_applicable("W is not open in G");
    return r;
  }
  if (!w.contains(e)) {
    r.not_applicable("e = " + u.name(e) + " is not in W");
    return r;
  }
  if (!w.is_subset_of(h)) {
    r.not_applicable("W is not a subset of H");
    return r;
  }

  ElementSet covered(u.size());
  upper_h.for_each([&](Element x) { covered |= op.left_translate(x, w); });
  r.put("upper(H)", format_set(u, upper_h));
  if (covered == upper_h) {
    r.pass("upper(H) is the union of hW over h in upper(H)");
  } else {
    r.fail("upper(H) is the union of hW over h in upper(H)", "union is " + format_set(u, covered));
  }
  if (cert.tau.is_open(upper_h)) {
    r.pass("upper(H) open in upper(G)");
  } else {
    r.fail("upper(H) open in upper(G)", format_set(u, upper_h) + " is not in tau");
  }
  const FiniteTopology on_upper_h = subspace_topology(cert.tau, upper_h);
  std::string witness;
  h.for_each([&](Element x) {
    const ElementSet hw = op.left_translate(x, w);
    if (witness.empty() && !on_upper_h.is_open(hw)) {
      witness = u.name(x) + "W = " + format_set(u, hw) + " is not open in upper(H)";
    }
  });
  if (witness.empty()) {
    r.pass("hW open in upper(H) for every h in H");
  } else {
    r.fail("hW open in upper(H) for every h in H", witness);
  }
  return r;
}

}  // namespace roughtop
