#include "roughtop/trg.hpp"

#include <string>

#include "roughtop/errors.hpp"

namespace roughtop {

const char* to_string(CodomainTopology c) {
  return c == CodomainTopology::upper ? "upper" : "relative";
}

namespace {

struct ProductMap {
  ProductTopologyView domain;
  FiniteMap map;
};

// f(x, y) = xy on (G x G, tau_G x tau_G), G given through its relative
// topology. The domain lives over a universe holding only the pairs of G.
ProductMap make_product_map(const CayleyTable& op, const FiniteTopology& tau_g,
                            const UniversePtr& codomain_universe, const ElementSet& codomain,
                            const Limits& limits) {
  const Compaction c = compact(*op.universe(), tau_g.carrier());
  const FiniteTopology small = compacted(tau_g, c);
  ProductTopologyView domain(small, small, limits);
  const std::size_t k = c.to_parent.size();
  std::vector<Element> assignment(k * k);
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      assignment[pair_index(k, i, j)] = op(c.to_parent[i], c.to_parent[j]);
    }
  }
  FiniteMap f(domain.universe_ptr(), domain.carrier(), codomain_universe, codomain,
              std::move(assignment));
  return {std::move(domain), std::move(f)};
}

void require_in_group(const TRGCert& cert, const ElementSet& v, const char* what) {
  if (v.universe_size() != cert.universe().size() || !v.is_subset_of(cert.group.group)) {
    throw InputError(std::string(what) + ": the set must lie inside G " +
                     format_set(cert.universe(), cert.group.group));
  }
}

}  // namespace

TRGResult verify_trg(const RoughGroupCert& group, const FiniteTopology& tau,
                     const TRGOptions& options) {
  const Universe& u = group.universe();
  if (!same_universe(tau.universe_ptr(), group.universe_ptr()) || tau.carrier() != group.upper) {
    throw InputError("verify_trg: carrier mismatch, the topology must be on upper(G) = " +
                     format_set(u, group.upper));
  }
  if (!group.unique_inverses()) {
    std::string which;
    group.group.for_each([&](Element x) {
      if (which.empty() && group.inverses[x].count() != 1) {
        which = u.name(x) + " has rough inverses " + format_set(u, group.inverses[x]);
      }
    });
    throw AmbiguousInverseError("verify_trg: the inverse map is not a function: " + which);
  }

  TRGResult result{VerificationReport("topological rough group " + format_set(u, group.group)),
                   std::nullopt};
  VerificationReport& r = result.report;
  const FiniteTopology tau_g = subspace_topology(tau, group.group);
  r.put("lower", format_set(u, lower_approx(*group.space, group.group)));
  r.put("upper", format_set(u, group.upper));
  r.put("tau_G", format_family(u, tau_g.opens()));
  r.put("identity", u.name(group.identity));
  r.note("product map codomain topology: " + std::string(to_string(options.codomain)));

  const CayleyTable& op = group.op();
  VerificationReport product_evidence("product map");
  if (options.codomain == CodomainTopology::upper) {
    auto pm = make_product_map(op, tau_g, group.universe_ptr(), group.upper, options.limits);
    product_evidence = is_continuous(pm.map, pm.domain, tau);
  } else {
    // Preimages of relatively open sets; the image of f may leave G, so this
    // is a direct scan rather than a continuity check between carriers.
    auto pm = make_product_map(op, tau_g, group.universe_ptr(), group.upper, options.limits);
    product_evidence = VerificationReport("continuity");
    std::string witness;
    for (const auto& v : tau_g.opens()) {
      ElementSet pre = pm.map.preimage(v);
      if (!pm.domain.is_open(pre)) {
        witness = "preimage of " + format_set(u, v) + " is " + format_set(pm.domain.universe(), pre) +
                  ", which is not open";
        break;
      }
    }
    if (witness.empty()) {
      product_evidence.pass("preimage of every relatively open set is open");
    } else {
      product_evidence.fail("preimage of every relatively open set is open", witness);
    }
  }
  r.absorb(product_evidence, "product map G x G -> upper(G): ");

  std::vector<Element> inv(u.size(), 0);
  group.group.for_each([&](Element x) { inv[x] = group.inverses[x].first(); });
  FiniteMap iota(group.universe_ptr(), group.group, group.universe_ptr(), group.group, std::move(inv));
  auto inverse_evidence = is_continuous(iota, tau_g, tau_g);
  r.absorb(inverse_evidence, "inverse map G -> G: ");

  if (r.passed()) {
    result.cert = TRGCert{group,         tau,
                          tau_g,         std::move(iota),
                          std::move(product_evidence), std::move(inverse_evidence),
                          options};
  }
  return result;
}

ElementSet inverse_of_set(const TRGCert& cert, const ElementSet& v) {
  require_in_group(cert, v, "inverse_of_set");
  return cert.inverse_map.image(v);
}

bool is_rough_symmetric(const TRGCert& cert, const ElementSet& v) {
  return inverse_of_set(cert, v) == v;
}

VerificationReport check_translations(const TRGCert& cert, Element a) {
  const Universe& u = cert.universe();
  if (!cert.group.group.contains(a)) {
    throw InputError("check_translations: " + (a < u.size() ? u.name(a) : std::string("?")) +
                     " is not in G");
  }
  const CayleyTable& op = cert.op();
  const auto& g = cert.group.group;
  VerificationReport r("translations by " + u.name(a));

  auto check = [&](const std::string& label, auto&& apply) {
    std::vector<Element> assignment(u.size(), 0);
    g.for_each([&](Element x) { assignment[x] = apply(x); });
    FiniteMap map(cert.group.universe_ptr(), g, cert.group.universe_ptr(), cert.group.upper,
                  std::move(assignment));
    if (map.injective()) {
      r.pass(label + " one-to-one");
    } else {
      r.fail(label + " one-to-one", "collision in " + map.describe());
    }
    r.absorb(is_continuous(map, cert.tau_g, cert.tau), label + " continuous: ");
  };
  check("L_" + u.name(a), [&](Element x) { return op(a, x); });
  check("R_" + u.name(a), [&](Element x) { return op(x, a); });
  r.absorb(is_homeomorphism(cert.inverse_map, cert.tau_g, cert.tau_g), "inverse map homeomorphism: ");
  return r;
}

VerificationReport check_g_equals_g_inverse(const TRGCert& cert) {
  const Universe& u = cert.universe();
  VerificationReport r("G = G^-1");
  const ElementSet inv = inverse_of_set(cert, cert.group.group);
  if (inv == cert.group.group) {
    r.pass("G^-1 = G");
  } else {
    r.fail("G^-1 = G", "G^-1 = " + format_set(u, inv));
  }
  return r;
}

VerificationReport check_open_iff_inverse_open(const TRGCert& cert) {
  const Universe& u = cert.universe();
  VerificationReport r("V open (closed) iff V^-1 open (closed)");
  const auto& g = cert.group.group;
  std::string witness;
  for (const auto& v : cert.tau_g.opens()) {
    const ElementSet w = inverse_of_set(cert, v);
    if (!cert.tau_g.is_open(w)) {
      witness = format_set(u, v) + " is open but its inverse " + format_set(u, w) + " is not";
      break;
    }
  }
  if (witness.empty()) {
    r.pass("inverse of every open subset of G is open");
  } else {
    r.fail("inverse of every open subset of G is open", witness);
  }
  witness.clear();
  for (const auto& o : cert.tau_g.opens()) {
    const ElementSet closed = g - o;
    const ElementSet w = inverse_of_set(cert, closed);
    if (!cert.tau_g.is_closed(w)) {
      witness = format_set(u, closed) + " is closed in G but its inverse " + format_set(u, w) +
                " is not";
      break;
    }
  }
  if (witness.empty()) {
    r.pass("inverse of every closed subset of G is closed");
  } else {
    r.fail("inverse of every closed subset of G is closed", witness);
  }
  return r;
}

std::optional<ElementSet> extended_inverse(const TRGCert& cert, const ElementSet& v) {
  const CayleyTable& op = cert.op();
  const auto& upper = cert.group.upper;
  const Element e = cert.identity();
  ElementSet out(upper.universe_size());
  bool complete = true;
  v.for_each([&](Element x) {
    bool found = false;
    upper.for_each([&](Element y) {
      if (op(x, y) == e && op(y, x) == e) {
        out.insert(y);
        found = true;
      }
    });
    complete = complete && found;
  });
  if (!complete) return std::nullopt;
  return out;
}

NeighbourhoodSearch find_symmetric_square_nbhd(const TRGCert& cert, const ElementSet& w,
                                               const Limits&) {
  const Universe& u = cert.universe();
  const Element e = cert.identity();
  if (w.universe_size() != u.size() || !cert.tau.is_open(w)) {
    throw InputError("find_symmetric_square_nbhd: W is not open in upper(G)");
  }
  if (!w.contains(e)) {
    throw InputError("find_symmetric_square_nbhd: W does not contain the identity " + u.name(e));
  }
  NeighbourhoodSearch out{std::nullopt, VerificationReport("symmetric neighbourhood V, VV inside " +
                                                           format_set(u, w))};
  VerificationReport& r = out.report;
  r.note("V ranges over tau on upper(G); V^-1 takes rough inverses in upper(G)");
  std::int64_t examined = 0;
  for (const auto& v : cert.tau.opens()) {
    if (!v.contains(e)) continue;
    ++examined;
    auto inv = extended_inverse(cert, v);
    if (!inv || *inv != v) continue;
    if (!cert.op().product(v, v).is_subset_of(w)) continue;
    out.witness = v;
    break;
  }
  r.stat("open_neighbourhoods_examined", examined);
  if (out.witness) {
    r.pass("exists open V with e in V, V = V^-1, VV inside W", format_set(u, *out.witness));
  } else {
    r.fail("exists open V with e in V, V = V^-1, VV inside W", "no witness found");
  }
  return out;
}

VerificationReport check_topological_group(const RoughGroupCert& group, const FiniteTopology& tau,
                                           const Limits& limits) {
  const Universe& u = group.universe();
  VerificationReport r("topological group");
  if (group.group != group.upper) {
    r.not_applicable("G = upper(G) does not hold");
    return r;
  }
  if (!same_universe(tau.universe_ptr(), group.universe_ptr()) || tau.carrier() != group.group) {
    throw InputError("check_topological_group: the topology must be on G");
  }
  const CayleyTable& op = group.op();
  auto axioms = verify_group(op, group.group);
  r.absorb(axioms, "group: ");
  if (!axioms.passed()) return r;

  auto pm = make_product_map(op, tau, group.universe_ptr(), group.group, limits);
  r.absorb(is_continuous(pm.map, pm.domain, tau), "multiplication G x G -> G: ");

  Element e = 0;
  group.group.for_each([&](Element x) {
    bool id = true;
    group.group.for_each([&](Element y) { id = id && op(x, y) == y && op(y, x) == y; });
    if (id) e = x;
  });
  std::vector<Element> inv(u.size(), 0);
  group.group.for_each([&](Element x) {
    group.group.for_each([&](Element y) {
      if (op(x, y) == e) inv[x] = y;
    });
  });
  FiniteMap iota(group.universe_ptr(), group.group, group.universe_ptr(), group.group, std::move(inv));
  r.absorb(is_continuous(iota, tau, tau), "inversion G -> G: ");
  return r;
}

VerificationReport check_topological_group(const TRGCert& cert) {
  if (cert.group.group != cert.group.upper) {
    VerificationReport r("topological group");
    r.not_applicable("G = upper(G) does not hold");
    return r;
  }
  return check_topological_group(cert.group, cert.tau, cert.options.limits);
}

VerificationReport check_closure_symmetric(const TRGCert& cert, const ElementSet& a) {
  require_in_group(cert, a, "check_closure_symmetric");
  const Universe& u = cert.universe();
  if (!is_rough_symmetric(cert, a)) {
    throw InputError("check_closure_symmetric: " + format_set(u, a) + " is not rough symmetric");
  }
  VerificationReport r("closure of rough symmetric " + format_set(u, a));
  const ElementSet cl = closure(cert.tau, a);
  r.put("closure", format_set(u, cl));
  if (!cl.is_subset_of(cert.group.group)) {
    r.not_applicable("closure escapes G, so its inverse is undefined");
    return r;
  }
  const ElementSet inv = inverse_of_set(cert, cl);
  if (inv == cl) {
    r.pass("cl(A) = cl(A)^-1");
  } else {
    r.fail("cl(A) = cl(A)^-1", "cl(A)^-1 = " + format_set(u, inv));
  }
  return r;
}

VerificationReport check_closure_subgroup(const TRGCert& cert, const ElementSet& h) {
  const Universe& u = cert.universe();
  auto premise = verify_rough_subgroup(cert.group, h);
  if (!premise.passed()) {
    const Clause* c = premise.first_failure();
    throw InputError("check_closure_subgroup: " + format_set(u, h) + " is not a rough subgroup (" +
                     c->name + ": " + c->witness + ")");
  }
  VerificationReport r("closure of rough subgroup " + format_set(u, h));
  const ElementSet cl = closure(cert.tau, h);
  r.put("closure", format_set(u, cl));
  if (!cl.is_subset_of(cert.group.group)) {
    r.not_applicable("cl(H) is not a subset of G");
    return r;
  }
  r.absorb(verify_rough_subgroup(cert.group, cl), "cl(H) rough subgroup: ");
  return r;
}

TRGCert product_trg(const TRGCert& a, const TRGCert& b, const Limits& limits) {
  RoughGroupCert group = product_rough_group(a.group, b.group, limits);
  FiniteTopology tau = product_topology(a.tau, b.tau, limits);
  TRGOptions options = a.options;
  options.limits = limits;
  auto result = verify_trg(group, tau, options);
  if (!result.cert) {
    const Clause* c = result.report.first_failure();
    throw InternalError("product of topological rough groups failed verification: " +
                        (c ? c->name + ": " + c->witness : std::string("unknown clause")));
  }
  return std::move(*result.cert);
}

VerificationReport check_base_translation(const TRGCert& cert, const Family& base) {
  const Universe& u = cert.universe();
  const Element e = cert.identity();
  const auto& g = cert.group.group;
  VerificationReport r("base translation");
  if (!g.contains(e)) {
    r.not_applicable("identity " + u.name(e) + " is not in G");
    return r;
  }
  if (!cert.op().closes(cert.group.upper)) {
    r.not_applicable("upper(G) is not closed under the operation");
    return r;
  }
  if (!cert.tau.is_open(g)) {
    r.not_applicable("G is not open in upper(G)");
    return r;
  }
  auto base_report = verify_base(cert.tau_g, base);
  if (!base_report.passed()) {
    r.not_applicable("B is not a base of tau_G (" + base_report.first_failure()->witness + ")");
    return r;
  }
  const Family at_e = base_at(Base{g, base}, e);
  r.put("B_e", format_family(u, canonical(at_e)));
  g.for_each([&](Element x) {
    Family translated;
    for (const auto& o : at_e) translated.push_back(cert.op().left_translate(x, o));
    canonicalize(translated);
    const std::string label = "base at " + u.name(x) + " is {gO : O in B_e}";
    for (const auto& t : translated) {
      if (!cert.tau.is_open(t)) {
        r.fail(label, format_set(u, t) + " is not open");
        return;
      }
      if (!t.contains(x)) {
        r.fail(label, format_set(u, t) + " does not contain " + u.name(x));
        return;
      }
    }
    for (const auto& o : cert.tau.opens()) {
      if (!o.contains(x)) continue;
      bool refined = false;
      for (const auto& t : translated) refined = refined || t.is_subset_of(o);
      if (!refined) {
        r.fail(label, "open " + format_set(u, o) + " contains " + u.name(x) +
                          " but no translated member");
        return;
      }
    }
    r.pass(label, format_family(u, translated));
  });
  return r;
}

}  // namespace roughtop
