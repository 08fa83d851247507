#include "roughtop/rough_group.hpp"

#include <string>

#include "roughtop/errors.hpp"

namespace roughtop {

namespace {

std::string product_text(const Universe& u, Element x, Element y, Element z) {
  return u.name(x) + "*" + u.name(y) + " = " + u.name(z);
}

// First triple of `carrier` violating associativity, as witness text.
std::optional<std::string> associativity_counterexample(const CayleyTable& op,
                                                        const ElementSet& carrier) {
  const auto elems = carrier.elements();
  const Universe& u = *op.universe();
  for (Element x : elems) {
    for (Element y : elems) {
      const Element xy = op(x, y);
      for (Element z : elems) {
        const Element left = op(xy, z);
        const Element right = op(x, op(y, z));
        if (left != right) {
          return "(" + u.name(x) + "*" + u.name(y) + ")*" + u.name(z) + " = " + u.name(left) +
                 " but " + u.name(x) + "*(" + u.name(y) + "*" + u.name(z) + ") = " +
                 u.name(right);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_identity_for(const CayleyTable& op, Element e, const ElementSet& g) {
  bool ok = true;
  g.for_each([&](Element x) { ok = ok && op(x, e) == x && op(e, x) == x; });
  return ok;
}

ElementSet inverse_candidates(const CayleyTable& op, Element x, Element e, const ElementSet& g) {
  ElementSet out(g.universe_size());
  g.for_each([&](Element y) {
    if (op(x, y) == e && op(y, x) == e) out.insert(y);
  });
  return out;
}

std::string format_inverses(const Universe& u, const ElementSet& g,
                            const std::vector<ElementSet>& inverses) {
  std::string out;
  g.for_each([&](Element x) {
    if (!out.empty()) out += ' ';
    out += u.name(x) + "->" + format_set(u, inverses[x]);
  });
  return out;
}

}  // namespace

bool RoughGroupCert::unique_inverses() const {
  bool ok = true;
  group.for_each([&](Element x) { ok = ok && inverses[x].count() == 1; });
  return ok;
}

RoughGroupResult verify_rough_group(const ApproxSpacePtr& space, const ElementSet& group) {
  if (!space->has_op()) throw InputError("verify_rough_group: the space has no binary operation");
  const Universe& u = space->universe();
  if (group.universe_size() != u.size()) throw InputError("verify_rough_group: G is not a subset of the universe");
  if (group.empty()) throw InputError("verify_rough_group: G is empty");
  const CayleyTable& op = space->op();

  RoughGroupResult result{VerificationReport("rough group " + format_set(u, group)), std::nullopt};
  VerificationReport& r = result.report;
  const RoughSet rs = make_rough_set(*space, group);
  r.put("lower", format_set(u, rs.lower));
  r.put("upper", format_set(u, rs.upper));

  // (1) closure into the upper approximation
  {
    std::string witness;
    group.for_each([&](Element x) {
      group.for_each([&](Element y) {
        const Element z = op(x, y);
        if (witness.empty() && !rs.upper.contains(z)) {
          witness = product_text(u, x, y, z) + " is not in upper(G)";
        }
      });
    });
    if (witness.empty()) {
      r.pass("closed: xy in upper(G) for all x, y in G");
    } else {
      r.fail("closed: xy in upper(G) for all x, y in G", witness);
    }
  }

  // (2) associativity over upper(G)
  if (auto bad = associativity_counterexample(op, rs.upper)) {
    r.fail("associative on upper(G)", *bad);
  } else {
    r.pass("associative on upper(G)");
  }

  // (3) one common rough identity
  std::vector<Element> identities;
  rs.upper.for_each([&](Element e) {
    if (is_identity_for(op, e, group)) identities.push_back(e);
  });
  if (!identities.empty()) {
    std::string listed;
    for (Element e : identities) listed += (listed.empty() ? "" : " ") + u.name(e);
    r.pass("common rough identity e in upper(G)", "e = " + u.name(identities.front()));
    r.put("identity", u.name(identities.front()));
    r.put("identity candidates", "{" + listed + "}");
  } else {
    std::string stuck;
    bool per_element = true;
    group.for_each([&](Element x) {
      bool found = false;
      rs.upper.for_each([&](Element e) { found = found || (op(x, e) == x && op(e, x) == x); });
      if (!found) {
        per_element = false;
        if (stuck.empty()) stuck = u.name(x);
      }
    });
    r.fail("common rough identity e in upper(G)",
           "no e in upper(G) has xe = ex = x for every x in G");
    if (per_element) {
      r.note("every x in G has its own identity in upper(G); the per-element reading of the identity axiom would accept this clause");
    }
  }

  // (4) inverses inside G for the designated identity
  std::vector<ElementSet> inverses(u.size(), ElementSet(u.size()));
  if (identities.empty()) {
    r.add("rough inverse in G for every x in G", Verdict::not_applicable, "no rough identity");
  } else {
    const Element e = identities.front();
    std::string missing;
    group.for_each([&](Element x) {
      inverses[x] = inverse_candidates(op, x, e, group);
      if (inverses[x].empty() && missing.empty()) {
        missing = u.name(x) + " has no y in G with xy = yx = " + u.name(e);
      }
    });
    if (missing.empty()) {
      r.pass("rough inverse in G for every x in G");
      r.put("inverses", format_inverses(u, group, inverses));
    } else {
      r.fail("rough inverse in G for every x in G", missing);
      for (std::size_t i = 1; i < identities.size(); ++i) {
        bool all = true;
        group.for_each([&](Element x) { all = all && !inverse_candidates(op, x, identities[i], group).empty(); });
        if (all) {
          r.note("inverses exist for the alternative identity " + u.name(identities[i]));
          break;
        }
      }
    }
  }

  if (r.passed()) {
    result.cert = RoughGroupCert{space, group, rs.upper, identities, identities.front(),
                                 std::move(inverses)};
  }
  return result;
}

VerificationReport verify_group(const CayleyTable& op, const ElementSet& carrier) {
  const Universe& u = *op.universe();
  VerificationReport r("group " + format_set(u, carrier));
  if (carrier.empty()) {
    r.fail("nonempty", "the carrier is empty");
    return r;
  }
  bool closed = true;
  std::string witness;
  carrier.for_each([&](Element x) {
    carrier.for_each([&](Element y) {
      const Element z = op(x, y);
      if (closed && !carrier.contains(z)) {
        closed = false;
        witness = product_text(u, x, y, z) + " leaves the carrier";
      }
    });
  });
  if (closed) {
    r.pass("closed under the operation");
  } else {
    r.fail("closed under the operation", witness);
  }
  if (auto bad = associativity_counterexample(op, carrier)) {
    r.fail("associative", *bad);
  } else {
    r.pass("associative");
  }
  std::optional<Element> identity;
  carrier.for_each([&](Element e) {
    if (!identity && is_identity_for(op, e, carrier)) identity = e;
  });
  if (!identity) {
    r.fail("identity in the carrier", "no two-sided identity");
    return r;
  }
  r.pass("identity in the carrier", "e = " + u.name(*identity));
  std::string missing;
  carrier.for_each([&](Element x) {
    if (missing.empty() && inverse_candidates(op, x, *identity, carrier).empty()) {
      missing = u.name(x) + " has no inverse";
    }
  });
  if (missing.empty()) {
    r.pass("inverses in the carrier");
  } else {
    r.fail("inverses in the carrier", missing);
  }
  return r;
}

namespace {

void require_subset_of_group(const RoughGroupCert& parent, const ElementSet& h, const char* what) {
  if (h.universe_size() != parent.universe().size() || h.empty() ||
      !h.is_subset_of(parent.group)) {
    throw InputError(std::string(what) + ": the subset must be a nonempty subset of G " +
                     format_set(parent.universe(), parent.group));
  }
}

// Clause (1) of the rough subgroup test; empty string when it holds.
std::string subgroup_product_violation(const RoughGroupCert& parent, const ElementSet& h,
                                       const ElementSet& upper_h) {
  const CayleyTable& op = parent.op();
  std::string witness;
  h.for_each([&](Element x) {
    h.for_each([&](Element y) {
      const Element z = op(x, y);
      if (witness.empty() && !upper_h.contains(z)) {
        witness = product_text(parent.universe(), x, y, z) + " is not in upper(H) " +
                  format_set(parent.universe(), upper_h);
      }
    });
  });
  return witness;
}

std::string subgroup_inverse_violation(const RoughGroupCert& parent, const ElementSet& h) {
  std::string witness;
  h.for_each([&](Element y) {
    if (witness.empty() && !parent.inverses[y].intersects(h)) {
      witness = "no inverse of " + parent.universe().name(y) + " (" +
                format_set(parent.universe(), parent.inverses[y]) + ") lies in H";
    }
  });
  return witness;
}

}  // namespace

VerificationReport verify_rough_subgroup(const RoughGroupCert& parent, const ElementSet& h) {
  require_subset_of_group(parent, h, "verify_rough_subgroup");
  const Universe& u = parent.universe();
  VerificationReport r("rough subgroup " + format_set(u, h));
  const ElementSet upper_h = upper_approx(*parent.space, h);
  r.put("upper", format_set(u, upper_h));
  if (auto w = subgroup_product_violation(parent, h, upper_h); w.empty()) {
    r.pass("xy in upper(H) for all x, y in H");
  } else {
    r.fail("xy in upper(H) for all x, y in H", w);
  }
  if (auto w = subgroup_inverse_violation(parent, h); w.empty()) {
    r.pass("H contains a rough inverse of each member");
  } else {
    r.fail("H contains a rough inverse of each member", w);
  }
  return r;
}

VerificationReport is_rough_normal(const RoughGroupCert& parent, const ElementSet& n) {
  auto sub = verify_rough_subgroup(parent, n);
  if (!sub.passed()) {
    const Clause* c = sub.first_failure();
    throw InputError("is_rough_normal: N is not a rough subgroup (" + c->name + ": " +
                     c->witness + ")");
  }
  const Universe& u = parent.universe();
  const CayleyTable& op = parent.op();
  VerificationReport r("rough normal subgroup " + format_set(u, n));
  std::string witness;
  parent.group.for_each([&](Element x) {
    if (!witness.empty()) return;
    const ElementSet left = op.left_translate(x, n);
    const ElementSet right = op.right_translate(n, x);
    if (left != right) {
      witness = "x = " + u.name(x) + ": xN = " + format_set(u, left) + ", Nx = " +
                format_set(u, right);
    }
  });
  if (witness.empty()) {
    r.pass("xN = Nx for all x in G");
  } else {
    r.fail("xN = Nx for all x in G", witness);
  }
  return r;
}

std::vector<ElementSet> enumerate_rough_subgroups(const RoughGroupCert& parent,
                                                  const Limits& limits) {
  const auto members = parent.group.elements();
  if (members.size() > limits.enumeration_cap) {
    throw LimitError("G has " + std::to_string(members.size()) +
                     " elements; subgroup enumeration is capped at " +
                     std::to_string(limits.enumeration_cap));
  }
  const std::size_t n = parent.universe().size();
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    ElementSet h(n);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) h.insert(members[i]);
    }
    const ElementSet upper_h = upper_approx(*parent.space, h);
    if (subgroup_product_violation(parent, h, upper_h).empty() &&
        subgroup_inverse_violation(parent, h).empty()) {
      out.push_back(std::move(h));
    }
  }
  canonicalize(out);
  return out;
}

const char* to_string(HomClass c) {
  switch (c) {
    case HomClass::homomorphism_only:
      return "homomorphism-only";
    case HomClass::epimorphism:
      return "epimorphism";
    case HomClass::monomorphism:
      return "monomorphism";
    case HomClass::isomorphism:
      return "isomorphism";
  }
  return "homomorphism-only";
}

RoughHomResult verify_rough_homomorphism(const RoughGroupCert& src, const RoughGroupCert& tgt,
                                         const FiniteMap& map, HomOptions options) {
  if (!same_universe(map.domain_universe(), src.universe_ptr()) || map.domain() != src.upper) {
    throw InputError("verify_rough_homomorphism: the map must be defined on exactly upper(G1) " +
                     format_set(src.universe(), src.upper));
  }
  if (!same_universe(map.codomain_universe(), tgt.universe_ptr()) || map.codomain() != tgt.upper) {
    throw InputError("verify_rough_homomorphism: the map must take values in upper(G2) " +
                     format_set(tgt.universe(), tgt.upper));
  }
  const Universe& u1 = src.universe();
  const Universe& u2 = tgt.universe();
  const CayleyTable& op1 = src.op();
  const CayleyTable& op2 = tgt.op();

  RoughHomResult result{VerificationReport("rough homomorphism"), std::nullopt};
  VerificationReport& r = result.report;

  std::int64_t constrained = 0;
  std::int64_t unconstrained = 0;
  std::string witness;
  std::string escape;
  src.upper.for_each([&](Element x) {
    src.upper.for_each([&](Element y) {
      const Element z = op1(x, y);
      if (!src.upper.contains(z)) {
        ++unconstrained;
        if (escape.empty()) escape = product_text(u1, x, y, z) + " is not in upper(G1)";
        return;
      }
      ++constrained;
      const Element lhs = map(z);
      const Element rhs = op2(map(x), map(y));
      if (lhs != rhs && witness.empty()) {
        witness = "phi(" + u1.name(x) + "*" + u1.name(y) + ") = phi(" + u1.name(z) + ") = " +
                  u2.name(lhs) + " but phi(" + u1.name(x) + ")*phi(" + u1.name(y) + ") = " +
                  u2.name(map(x)) + "*" + u2.name(map(y)) + " = " + u2.name(rhs);
      }
    });
  });
  if (witness.empty()) {
    r.pass("phi(xy) = phi(x)phi(y) wherever xy is in upper(G1)");
  } else {
    r.fail("phi(xy) = phi(x)phi(y) wherever xy is in upper(G1)", witness);
  }
  if (options.strict) {
    if (unconstrained == 0) {
      r.pass("strict: upper(G1) closed under the operation");
    } else {
      r.fail("strict: upper(G1) closed under the operation", escape);
    }
  }
  r.stat("constrained_pairs", constrained);
  r.stat("unconstrained_pairs", unconstrained);
  if (unconstrained > 0 && !options.strict) {
    r.note("pairs whose product leaves upper(G1) are not constrained");
  }

  const bool inj = map.injective();
  const bool surj = map.surjective();
  const HomClass cls = inj && surj ? HomClass::isomorphism
                       : inj       ? HomClass::monomorphism
                       : surj      ? HomClass::epimorphism
                                   : HomClass::homomorphism_only;
  r.put("classification", to_string(cls));
  if (r.passed()) result.hom = RoughHom{src, tgt, map, cls};
  return result;
}

KernelResult rough_kernel(const RoughHom& hom) {
  const Universe& u = hom.source.universe();
  ElementSet kernel(u.size());
  hom.source.group.for_each([&](Element g) {
    if (hom.map(g) == hom.target.identity) kernel.insert(g);
  });
  KernelResult result{kernel, VerificationReport("rough kernel")};
  VerificationReport& r = result.report;
  r.put("kernel", format_set(u, kernel));
  if (kernel.empty()) {
    r.add("empty kernel", Verdict::not_applicable,
          "no element of G1 maps to " + hom.target.universe().name(hom.target.identity));
    return result;
  }
  auto sub = verify_rough_subgroup(hom.source, kernel);
  r.absorb(sub, "subgroup: ");
  if (sub.passed()) r.absorb(is_rough_normal(hom.source, kernel), "normal: ");
  return result;
}

RoughGroupCert product_rough_group(const RoughGroupCert& a, const RoughGroupCert& b,
                                   const Limits& limits) {
  auto space = product_space(*a.space, *b.space, limits);
  auto result = verify_rough_group(space, product_set(a.group, b.group));
  if (!result.cert) {
    const Clause* c = result.report.first_failure();
    throw InternalError("product of rough groups failed verification: " +
                        (c ? c->name + ": " + c->witness : std::string("unknown clause")));
  }
  return std::move(*result.cert);
}

}  // namespace roughtop
