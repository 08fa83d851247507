#include "roughtop/commands.hpp"

#include <algorithm>
#include <functional>

#include "roughtop/action.hpp"
#include "roughtop/enumerate.hpp"
#include "roughtop/errors.hpp"
#include "roughtop/hom_topology.hpp"
#include "roughtop/rough_group.hpp"

namespace roughtop {

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = {
      "topology", "approx",        "rough-group", "subgroup", "normal",      "hom",
      "kernel",   "continuity",    "homeomorphism", "base",   "trg",         "trg-hom",
      "trg-homeo", "action",       "translation", "homogeneous", "prop"};
  return kinds;
}

const std::vector<std::string>& enumerate_kinds() {
  static const std::vector<std::string> kinds = {"subgroups", "topologies", "witness"};
  return kinds;
}

const std::vector<std::string>& proposition_names() {
  static const std::vector<std::string> names = {
      "translations",      "g-inverse",        "open-inverse",     "symmetric",
      "symmetric-square",  "topological-group", "closure-symmetric", "closure-subgroup",
      "base-translation",  "au-open",          "subgroup-open",    "suite"};
  return names;
}

namespace {

class Runner {
 public:
  Runner(const Workspace& ws, const Command& cmd) : ws_(ws), cmd_(cmd) {}

  VerificationReport run() {
    if (cmd_.verb == "check") return check();
    if (cmd_.verb == "enumerate") return enumerate();
    throw InputError("unknown command '" + cmd_.verb + "' (expected check or enumerate)");
  }

 private:
  const std::string& arg(const std::string& key) const {
    auto it = cmd_.args.find(key);
    if (it == cmd_.args.end() || it->second.empty()) {
      throw InputError("check " + cmd_.kind + " needs --" + key);
    }
    return it->second;
  }
  bool has(const std::string& key) const {
    auto it = cmd_.args.find(key);
    return it != cmd_.args.end() && !it->second.empty();
  }

  TRGOptions trg_options() const { return TRGOptions{cmd_.codomain, cmd_.limits}; }
  HomOptions hom_options() const { return HomOptions{cmd_.strict_hom}; }

  RoughGroupResult group_result(const std::string& name) const {
    return verify_rough_group(ws_.space_of_subset(name), ws_.subset(name).set);
  }

  RoughGroupCert group_cert(const std::string& name) const {
    auto r = group_result(name);
    if (!r.cert) {
      const Clause* c = r.report.first_failure();
      throw InputError("'" + name + "' is not a rough group" + (c ? ": " + c->name : ""));
    }
    return *r.cert;
  }

  TRGResult trg_result(const std::string& group, const std::string& topology) const {
    return verify_trg(group_cert(group), ws_.topology(topology), trg_options());
  }

  TRGCert trg_cert(const std::string& group, const std::string& topology) const {
    auto r = trg_result(group, topology);
    if (!r.cert) {
      const Clause* c = r.report.first_failure();
      throw InputError("'" + group + "' with '" + topology + "' is not a topological rough group" +
                       (c ? ": " + c->name : ""));
    }
    return *r.cert;
  }

  // Subset operand, required to live in the universe of `like`.
  ElementSet subset_in(const std::string& key, const Universe& like) const {
    const auto& name = arg(key);
    const auto& s = ws_.subset(name);
    if (!(*ws_.universe(s.universe).universe == like)) {
      throw InputError("--" + key + " '" + name + "' is not in the group's universe");
    }
    return s.set;
  }

  Element element_in(const std::string& key, const Universe& u) const { return u.at(arg(key)); }

  Family family_members(const std::string& key, const Universe& like) const {
    const auto& f = ws_.family(arg(key));
    if (!(*f.universe == like)) {
      throw InputError("--" + key + " '" + f.name + "' is not in the group's universe");
    }
    return f.members;
  }

  FiniteMap map_operand(const std::string& key) const { return ws_.map(arg(key)).map; }

  static Side side_of(const std::string& s) {
    if (s.empty() || s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw InputError("--side must be left or right, not '" + s + "'");
  }

  VerificationReport check();
  VerificationReport enumerate();
  VerificationReport proposition(const std::string& name);
  RoughAction action_operand() const;

  const Workspace& ws_;
  const Command& cmd_;
};

std::string pair_text(const Universe& u, const std::pair<Element, Element>& p) {
  return "(" + u.name(p.first) + ", " + u.name(p.second) + ")";
}

// Every proposition the suite runs on a certified TRG, absorbed with a
// prefix; stops at nothing so that all counterexamples are reported.
VerificationReport proposition_suite(const TRGCert& cert, const Limits& limits) {
  const Universe& u = cert.universe();
  VerificationReport r("proposition suite");
  r.absorb(check_g_equals_g_inverse(cert), "G = G^-1: ");
  r.absorb(check_open_iff_inverse_open(cert), "V open iff V^-1 open: ");
  r.absorb(is_homeomorphism(cert.inverse_map, cert.tau_g, cert.tau_g), "inverse map homeomorphism: ");
  std::string witness;
  std::size_t count = 0;
  for (const auto& h : enumerate_rough_subgroups(cert.group, limits)) {
    ++count;
    if (witness.empty() && !is_rough_symmetric(cert, h)) {
      witness = format_set(u, h) + " has inverse set " + format_set(u, inverse_of_set(cert, h));
    }
  }
  if (witness.empty()) {
    r.pass("every rough subgroup is rough symmetric");
  } else {
    r.fail("every rough subgroup is rough symmetric", witness);
  }
  r.stat("rough subgroups", static_cast<std::int64_t>(count));
  return r;
}

RoughAction Runner::action_operand() const {
  TRGCert cert = trg_cert(arg("group"), arg("topology"));
  const Side side = side_of(has("side") ? arg("side") : "");
  if (has("self") || !has("map")) {
    if (!has("self")) throw InputError("check " + cmd_.kind + " needs --map or --self");
    return self_action(cert, side);
  }
  const auto& space_name = arg("space");
  RoughSpace space = make_rough_space(ws_.space_of_subset(space_name), ws_.subset(space_name).set,
                                      ws_.topology(arg("space-topology")));
  // The declared map runs over a product of full universes; carry it over to
  // the compacted product by element name.
  const FiniteMap& declared = map_operand("map");
  auto [dom, carrier] = action_domain(cert, space, side);
  std::vector<Element> assignment(dom->size(), 0);
  carrier.for_each([&](Element p) {
    const std::string& pname = dom->name(p);
    auto src = declared.domain_universe()->find(pname);
    if (!src || !declared.domain().contains(*src)) {
      throw InputError("action map '" + arg("map") + "' has no value at " + pname);
    }
    const std::string& image = declared.codomain_universe()->name(declared(*src));
    assignment[p] = cert.universe().at(image);
  });
  FiniteMap mu(dom, carrier, cert.group.universe_ptr(), space.upper, std::move(assignment));
  return RoughAction(std::move(cert), std::move(space), std::move(mu), side);
}

VerificationReport Runner::check() {
  const std::string& k = cmd_.kind;
  if (k == "topology") {
    const auto& f = ws_.family(arg("topology"));
    auto r = verify_topology(*f.universe, f.carrier, f.members);
    r.subject = "topology " + f.name;
    return r;
  }
  if (k == "approx") {
    const auto& name = arg("subset");
    auto space = ws_.space_of_subset(name);
    const Universe& u = space->universe();
    RoughSet rs = make_rough_set(*space, ws_.subset(name).set);
    VerificationReport r("rough set " + name);
    r.put("set", format_set(u, rs.subset));
    r.put("lower", format_set(u, rs.lower));
    r.put("upper", format_set(u, rs.upper));
    r.put("boundary", format_set(u, rs.upper - rs.lower));
    r.put("definable", rs.lower == rs.upper ? "yes" : "no");
    r.stat("blocks", static_cast<std::int64_t>(space->partition().blocks().size()));
    return r;
  }
  if (k == "rough-group") return group_result(arg("group")).report;
  if (k == "subgroup" || k == "normal") {
    auto cert = group_cert(arg("group"));
    auto h = subset_in("subset", cert.universe());
    return k == "subgroup" ? verify_rough_subgroup(cert, h) : is_rough_normal(cert, h);
  }
  if (k == "hom" || k == "kernel") {
    auto src = group_cert(arg("group"));
    auto tgt = group_cert(arg("target-group"));
    auto hom = verify_rough_homomorphism(src, tgt, map_operand("map"), hom_options());
    if (k == "hom") return hom.report;
    if (!hom.hom) {
      VerificationReport r("rough kernel of " + arg("map"));
      r.not_applicable(arg("map") + " is not a rough homomorphism");
      return r;
    }
    auto kernel = rough_kernel(*hom.hom);
    return kernel.report;
  }
  if (k == "continuity" || k == "homeomorphism") {
    auto f = map_operand("map");
    auto t1 = ws_.topology(arg("topology"));
    auto t2 = ws_.topology(arg("target-topology"));
    auto r = k == "continuity" ? is_continuous(f, t1, t2) : is_homeomorphism(f, t1, t2);
    r.subject = arg("map") + (k == "continuity" ? " continuous" : " homeomorphism");
    return r;
  }
  if (k == "base") {
    auto top = ws_.topology(arg("topology"));
    auto r = verify_base(top, family_members("base", top.universe()));
    return r;
  }
  if (k == "trg") {
    auto g = group_result(arg("group"));
    if (!g.cert) {
      const auto& s = ws_.subset(arg("group"));
      VerificationReport r("topological rough group " +
                           format_set(*ws_.universe(s.universe).universe, s.set));
      r.absorb(g.report, "rough group: ");
      r.data = g.report.data;
      return r;
    }
    return verify_trg(*g.cert, ws_.topology(arg("topology")), trg_options()).report;
  }
  if (k == "trg-hom" || k == "trg-homeo") {
    auto src = trg_cert(arg("group"), arg("topology"));
    auto tgt = trg_cert(arg("target-group"), arg("target-topology"));
    auto hom = verify_trg_homomorphism(src, tgt, map_operand("map"), hom_options());
    if (k == "trg-hom" || !hom.hom) return hom.report;
    auto r = verify_trg_homeomorphism(*hom.hom, hom_options());
    r.absorb(hom.report, "map: ");
    return r;
  }
  if (k == "action") {
    RoughAction action = action_operand();
    auto r = check_action_axioms(action, cmd_.limits);
    const Universe& u = action.cert().universe();
    auto eff = is_effective(action);
    auto tra = is_transitive(action);
    r.put("side", to_string(action.side()));
    r.put("effective", eff.holds ? "yes" : "no, " + pair_text(u, *eff.witness) + " act alike");
    r.put("transitive",
          tra.holds ? "yes" : "no, " + pair_text(u, *tra.witness) + " lie in different orbits");
    return r;
  }
  if (k == "translation") {
    RoughAction action = action_operand();
    return translation_map(action, element_in("element", action.cert().universe()), cmd_.limits)
        .report;
  }
  if (k == "homogeneous") {
    const auto& name = arg("space");
    auto space = make_rough_space(ws_.space_of_subset(name), ws_.subset(name).set,
                                  ws_.topology(arg("space-topology")));
    auto h = is_rough_homogeneous(space, cmd_.limits);
    const Universe& u = space.space->universe();
    VerificationReport r("rough homogeneity of " + name);
    const std::string clause = "every point of upper(X) is carried to every other by a homeomorphism";
    if (h.verdict.holds) {
      r.pass(clause);
    } else {
      r.fail(clause, "no homeomorphism takes " + u.name(h.verdict.witness->first) + " to " +
                         u.name(h.verdict.witness->second));
    }
    r.put("upper", format_set(u, space.upper));
    r.stat("homeomorphisms", static_cast<std::int64_t>(h.homeomorphisms));
    return r;
  }
  if (k == "prop") {
    const auto& names = proposition_names();
    if (std::find(names.begin(), names.end(), cmd_.prop) == names.end()) {
      throw InputError("unknown proposition '" + cmd_.prop + "'");
    }
    return proposition(cmd_.prop);
  }
  throw InputError("unknown check '" + k + "'");
}

VerificationReport Runner::proposition(const std::string& name) {
  if (name == "topological-group") {
    return check_topological_group(group_cert(arg("group")), ws_.topology(arg("topology")),
                                   cmd_.limits);
  }
  auto t = trg_result(arg("group"), arg("topology"));
  if (!t.cert) {
    VerificationReport r(name);
    r.not_applicable("'" + arg("group") + "' with '" + arg("topology") +
                     "' is not a topological rough group");
    return r;
  }
  const TRGCert& cert = *t.cert;
  const Universe& u = cert.universe();
  if (name == "translations") return check_translations(cert, element_in("element", u));
  if (name == "g-inverse") return check_g_equals_g_inverse(cert);
  if (name == "open-inverse") return check_open_iff_inverse_open(cert);
  if (name == "symmetric") {
    auto v = subset_in("subset", u);
    VerificationReport r("rough symmetry of " + arg("subset"));
    auto inv = inverse_of_set(cert, v);
    if (inv == v) {
      r.pass("V = V^-1");
    } else {
      r.fail("V = V^-1", "V^-1 = " + format_set(u, inv));
    }
    return r;
  }
  if (name == "symmetric-square") {
    return find_symmetric_square_nbhd(cert, subset_in("open", u), cmd_.limits).report;
  }
  if (name == "closure-symmetric") return check_closure_symmetric(cert, subset_in("subset", u));
  if (name == "closure-subgroup") return check_closure_subgroup(cert, subset_in("subset", u));
  if (name == "base-translation") return check_base_translation(cert, family_members("base", u));
  if (name == "au-open") return check_au_open(cert, subset_in("subset", u), subset_in("open", u));
  if (name == "subgroup-open") {
    return check_subgroup_open(cert, subset_in("subset", u), subset_in("open", u));
  }
  return proposition_suite(cert, cmd_.limits);
}

VerificationReport Runner::enumerate() {
  const std::string& k = cmd_.kind;
  if (k == "subgroups") {
    auto cert = group_cert(arg("group"));
    const Universe& u = cert.universe();
    auto subgroups = enumerate_rough_subgroups(cert, cmd_.limits);
    VerificationReport r("rough subgroups of " + arg("group"));
    r.pass("exhaustive scan of the nonempty subsets of G");
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      r.put("subgroup " + std::to_string(i + 1), format_set(u, subgroups[i]));
    }
    r.stat("subgroups", static_cast<std::int64_t>(subgroups.size()));
    return r;
  }
  if (k == "topologies") {
    auto cert = group_cert(arg("group"));
    const Universe& u = cert.universe();
    std::size_t max_points = 5;
    if (has("max-size")) {
      try {
        max_points = std::stoul(arg("max-size"));
      } catch (const std::exception&) {
        throw InputError("--max-size must be a number");
      }
    }
    auto tops = enumerate_topologies(cert.universe_ptr(), cert.upper, max_points);
    VerificationReport r("topologies on upper(" + arg("group") + ")");
    r.put("upper", format_set(u, cert.upper));
    std::size_t trgs = 0;
    std::string witness;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      std::string verdict;
      try {
        auto t = verify_trg(cert, tops[i], trg_options());
        verdict = to_string(t.report.verdict);
        if (t.cert) {
          ++trgs;
          auto suite = proposition_suite(*t.cert, cmd_.limits);
          if (!suite.passed() && witness.empty()) {
            const Clause* c = suite.first_failure();
            witness = format_family(u, tops[i].opens()) + ": " + (c ? c->name + " " + c->witness : "");
          }
        }
      } catch (const AmbiguousInverseError&) {
        verdict = "error (ambiguous inverse)";
      }
      r.put("topology " + std::to_string(i + 1), format_family(u, tops[i].opens()) + " trg: " + verdict);
    }
    const std::string clause = "propositions hold on every topological rough group found";
    if (witness.empty()) {
      r.pass(clause);
    } else {
      r.fail(clause, witness);
    }
    r.stat("topologies", static_cast<std::int64_t>(tops.size()));
    r.stat("topological rough groups", static_cast<std::int64_t>(trgs));
    return r;
  }
  if (k == "witness") {
    TRGCert cert = trg_cert(arg("group"), arg("topology"));
    const Universe& u = cert.universe();
    VerificationReport r("symmetric neighbourhoods in " + arg("topology"));
    std::string missing;
    std::size_t count = 0;
    for (const auto& w : cert.tau.opens()) {
      if (!w.contains(cert.identity())) continue;
      ++count;
      auto search = find_symmetric_square_nbhd(cert, w, cmd_.limits);
      if (search.witness) {
        r.put("W = " + format_set(u, w), "V = " + format_set(u, *search.witness));
      } else {
        r.put("W = " + format_set(u, w), "none");
        if (missing.empty()) missing = format_set(u, w);
      }
    }
    const std::string clause = "every open W containing e has an open symmetric V with VV in W";
    if (missing.empty()) {
      r.pass(clause);
    } else {
      r.fail(clause, "no V for W = " + missing);
    }
    r.stat("open neighbourhoods of e", static_cast<std::int64_t>(count));
    return r;
  }
  throw InputError("unknown enumeration '" + k + "'");
}

}  // namespace

VerificationReport run_command(const Workspace& ws, const Command& cmd) {
  return Runner(ws, cmd).run();
}

std::string product_document(const Workspace& left, const std::string& left_group,
                             const std::string& left_topology, const Workspace& right,
                             const std::string& right_group, const std::string& right_topology,
                             const Limits& limits) {
  auto cert_of = [&](const Workspace& ws, const std::string& g, const std::string& t) {
    auto group = verify_rough_group(ws.space_of_subset(g), ws.subset(g).set);
    if (!group.cert) throw InputError("'" + g + "' is not a rough group");
    auto trg = verify_trg(*group.cert, ws.topology(t), TRGOptions{CodomainTopology::upper, limits});
    if (!trg.cert) throw InputError("'" + g + "' with '" + t + "' is not a topological rough group");
    return *trg.cert;
  };
  TRGCert a = cert_of(left, left_group, left_topology);
  TRGCert b = cert_of(right, right_group, right_topology);
  TRGCert p = product_trg(a, b, limits);

  const std::string uname = left.subset(left_group).universe + "x" + right.subset(right_group).universe;
  const std::string gname = left_group + "x" + right_group;
  const std::string tname = left_topology + "x" + right_topology;
  const ApproxSpace& space = *p.group.space;
  Workspace out(limits);
  out.add(Workspace::UniverseDecl{uname, space.universe_ptr()});
  out.add(Workspace::TableDecl{"op", uname, space.op()});
  out.add(Workspace::PartitionDecl{"R", uname, space.partition()});
  out.add(Workspace::SubsetDecl{gname, uname, p.group.group});
  out.add(Workspace::FamilyDecl{tname, true, "upper(" + gname + ")", space.universe_ptr(),
                                p.group.upper, p.tau.opens()});
  return serialize_workspace(out);
}

}  // namespace roughtop
